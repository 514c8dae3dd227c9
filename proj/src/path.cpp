#include "kloospath/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kloospath {

namespace {

std::vector<double> uniform_knots(std::size_t n) {
  std::vector<double> t(n + 1);
  for (std::size_t j = 0; j <= n; ++j) t[j] = static_cast<double>(j) / static_cast<double>(n);
  t[n] = 1.0;
  return t;
}

std::vector<cplx> cumulative(std::span<const cplx> steps) {
  std::vector<cplx> z(steps.size() + 1);
  z[0] = 0.0;
  for (std::size_t j = 0; j < steps.size(); ++j) z[j + 1] = z[j] + steps[j];
  return z;
}

}  // namespace

PolyPath::PolyPath(std::vector<cplx> vertices)
    : PolyPath(vertices, uniform_knots(vertices.empty() ? 0 : vertices.size() - 1)) {}

PolyPath::PolyPath(std::vector<cplx> vertices, std::vector<double> knots)
    : vertices_(std::move(vertices)), knots_(std::move(knots)) {
  if (vertices_.size() < 2) throw std::invalid_argument("PolyPath needs at least one segment");
  if (knots_.size() != vertices_.size()) throw std::invalid_argument("PolyPath: knot/vertex count mismatch");
  if (knots_.front() != 0.0 || knots_.back() != 1.0) {
    throw std::invalid_argument("PolyPath: knots must start at 0 and end at 1");
  }
  for (std::size_t j = 1; j < knots_.size(); ++j) {
    if (!(knots_[j] > knots_[j - 1])) throw std::invalid_argument("PolyPath: knots must be strictly increasing");
  }
}

std::vector<cplx> PolyPath::steps() const {
  std::vector<cplx> d(segments());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = vertices_[j + 1] - vertices_[j];
  return d;
}

std::vector<double> PolyPath::durations() const {
  std::vector<double> d(segments());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = knots_[j + 1] - knots_[j];
  return d;
}

double PolyPath::total_variation() const {
  double v = 0.0;
  for (std::size_t j = 0; j + 1 < vertices_.size(); ++j) v += std::abs(vertices_[j + 1] - vertices_[j]);
  return v;
}

bool PolyPath::equally_spaced() const {
  const double n = static_cast<double>(segments());
  for (std::size_t j = 0; j < knots_.size(); ++j) {
    if (std::abs(knots_[j] - static_cast<double>(j) / n) > 1e-12) return false;
  }
  return true;
}

cplx PolyPath::eval(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("PolyPath::eval: t outside [0,1]");
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  if (it == knots_.end()) return vertices_.back();
  const std::size_t j = static_cast<std::size_t>(it - knots_.begin()) - 1;
  const double s = (t - knots_[j]) / (knots_[j + 1] - knots_[j]);
  return vertices_[j] + s * (vertices_[j + 1] - vertices_[j]);
}

PolyPath PolyPath::scaled(double lambda) const {
  std::vector<cplx> z(vertices_);
  for (auto& v : z) v *= lambda;
  return PolyPath(std::move(z), knots_);
}

PolyPath PolyPath::conjugated() const {
  std::vector<cplx> z(vertices_);
  for (auto& v : z) v = std::conj(v);
  return PolyPath(std::move(z), knots_);
}

PolyPath PolyPath::reflected() const {
  const std::size_t n = segments();
  const cplx f1 = vertices_.back();
  std::vector<cplx> z(n + 1);
  std::vector<double> t(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    z[j] = f1 - std::conj(vertices_[n - j]);
    t[j] = 1.0 - knots_[n - j];
  }
  t.front() = 0.0;
  t.back() = 1.0;
  return PolyPath(std::move(z), std::move(t));
}

PolyPath kloosterman_path(std::int64_t a, std::int64_t b, std::int64_t p) {
  return kloosterman_path(a, b, p, RootTable(p));
}

PolyPath kloosterman_path(std::int64_t a, std::int64_t b, std::int64_t p, const RootTable& roots) {
  const auto steps = summands(SumSpec::kloosterman(a, b, p), roots);
  return PolyPath(cumulative(steps));
}

PolyPath swiss_clock_path(std::int64_t a, std::int64_t b, std::int64_t p) {
  return swiss_clock_path(a, b, p, RootTable(p));
}

PolyPath swiss_clock_path(std::int64_t a, std::int64_t b, std::int64_t p, const RootTable& roots) {
  auto steps = summands(SumSpec::kloosterman(a, b, p), roots);
  // The pause sits between j = (p-1)/2 and j = (p+1)/2.
  steps.insert(steps.begin() + static_cast<std::ptrdiff_t>((p - 1) / 2), cplx(0.0));
  return PolyPath(cumulative(steps));
}

std::vector<double> padded_knots(std::int64_t p) {
  std::vector<double> t(static_cast<std::size_t>(p + 2));
  t[0] = 0.0;
  for (std::int64_t i = 1; i <= p; ++i) t[i] = (static_cast<double>(i) - 0.5) / static_cast<double>(p);
  t[p + 1] = 1.0;
  return t;
}

namespace {

// z_0 = 0, z_1 = lead, then the remaining steps, then a trailing pause.
PolyPath padded_from_steps(std::int64_t p, cplx lead, std::span<const cplx> body) {
  std::vector<cplx> z;
  z.reserve(static_cast<std::size_t>(p + 2));
  z.push_back(0.0);
  z.push_back(lead);
  for (const cplx& d : body) z.push_back(z.back() + d);
  z.push_back(z.back());
  return PolyPath(std::move(z), padded_knots(p));
}

}  // namespace

PolyPath padded_kloosterman_path(std::int64_t a, std::int64_t b, std::int64_t p) {
  const auto steps = summands(SumSpec::kloosterman(a, b, p));
  return padded_from_steps(p, 0.0, steps);
}

PolyPath padded_birch_path(std::int64_t a, std::int64_t p) {
  const auto steps = summands(SumSpec::birch(a, p));
  // steps[0] is the x = 0 summand 1/sqrt(p); half of it opens the path, half closes it.
  const cplx half = 0.5 * steps[0];
  std::vector<cplx> z;
  z.reserve(static_cast<std::size_t>(p + 2));
  z.push_back(0.0);
  z.push_back(half);
  for (std::size_t x = 1; x < steps.size(); ++x) z.push_back(z.back() + steps[x]);
  z.push_back(z.back() + half);
  return PolyPath(std::move(z), padded_knots(p));
}

PolyPath padded_character_path(std::int64_t p) {
  const auto steps = summands(SumSpec::legendre_character(p));
  return padded_from_steps(p, 0.0, steps);
}

namespace {

SymmetryReport finish_report(const std::function<cplx(double)>& f, std::span<const double> points, double tol) {
  SymmetryReport r;
  r.f1 = f(1.0);
  r.f0_defect = std::abs(f(0.0));
  for (const double t : points) {
    const double d = std::abs(f(t) + std::conj(f(1.0 - t)) - r.f1);
    r.max_defect = std::max(r.max_defect, d);
  }
  r.is_F0 = r.f0_defect <= tol && r.max_defect <= tol && std::abs(r.f1.imag()) <= tol;
  return r;
}

}  // namespace

SymmetryReport symmetry_report(const PolyPath& path, double tol) {
  std::vector<double> points(path.knots().begin(), path.knots().end());
  for (const double t : path.knots()) points.push_back(1.0 - t);
  return finish_report([&](double t) { return path.eval(std::clamp(t, 0.0, 1.0)); }, points, tol);
}

SymmetryReport symmetry_report(const PathFn& f, std::size_t grid_size, double tol) {
  if (grid_size < 2) throw std::invalid_argument("symmetry_report: grid_size must be >= 2");
  std::vector<double> points(grid_size);
  for (std::size_t i = 0; i < grid_size; ++i) {
    points[i] = static_cast<double>(i) / static_cast<double>(grid_size - 1);
  }
  return finish_report(f, points, tol);
}

}  // namespace kloospath
