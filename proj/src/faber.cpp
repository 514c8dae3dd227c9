#include "kloospath/faber.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kloospath/fourier.hpp"

namespace kloospath {

namespace {

constexpr double kSymTol = 1e-12;

double dyadic_point(long long k, int level) { return std::ldexp(static_cast<double>(k), -level); }

}  // namespace

double schauder_tent(int m, int j, double t) {
  const double scale = std::ldexp(1.0, m);
  const double x = t * scale - static_cast<double>(j - 1);  // in [0,1] on the support
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return 1.0 - std::abs(2.0 * x - 1.0);
}

cplx FaberExpansion::coefficient(int m, int j) const {
  if (m < 0 || m >= depth || j < 1 || j > (1 << m)) throw std::out_of_range("FaberExpansion: index out of range");
  return beta[static_cast<std::size_t>(m)][static_cast<std::size_t>(j - 1)];
}

cplx FaberExpansion::evaluate(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("FaberExpansion::evaluate: t outside [0,1]");
  cplx acc = f0 + (f1 - f0) * t;
  for (int m = 0; m < depth; ++m) {
    // Only one tent per level is nonzero at t.
    const double scaled = t * std::ldexp(1.0, m);
    const int j = std::min(static_cast<int>(scaled), (1 << m) - 1) + 1;
    acc += beta[static_cast<std::size_t>(m)][static_cast<std::size_t>(j - 1)] * schauder_tent(m, j, t);
  }
  return acc;
}

FaberExpansion faber_coefficients(const PathFn& f, int depth) {
  if (depth < 0 || depth > 20) throw std::invalid_argument("faber_coefficients: depth must be in [0, 20]");
  // All samples at k/2^depth come from one pass.
  const long long M = 1LL << depth;
  std::vector<cplx> y(static_cast<std::size_t>(M) + 1);
  for (long long k = 0; k <= M; ++k) y[k] = f(dyadic_point(k, depth));
  FaberExpansion out;
  out.f0 = y.front();
  out.f1 = y.back();
  out.depth = depth;
  out.beta.resize(static_cast<std::size_t>(depth));
  for (int m = 0; m < depth; ++m) {
    const long long stride = M >> m;  // grid steps per interval of length 2^-m
    auto& row = out.beta[static_cast<std::size_t>(m)];
    row.resize(static_cast<std::size_t>(1) << m);
    for (long long j = 1; j <= (1LL << m); ++j) {
      const long long left = (j - 1) * stride;
      row[static_cast<std::size_t>(j - 1)] = y[left + stride / 2] - 0.5 * (y[left] + y[left + stride]);
    }
  }
  return out;
}

SymmetricHomeo::SymmetricHomeo(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  const std::size_t n = knots_.size();
  if (n < 2 || values_.size() != n) throw std::invalid_argument("SymmetricHomeo: need matching knot/value lists");
  if (knots_.front() != 0.0 || knots_.back() != 1.0 || values_.front() != 0.0 || values_.back() != 1.0) {
    throw std::invalid_argument("SymmetricHomeo: must fix 0 and 1");
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (!(knots_[k] > knots_[k - 1]) || !(values_[k] > values_[k - 1])) {
      throw std::invalid_argument("SymmetricHomeo: knots and values must be strictly increasing");
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(knots_[k] + knots_[n - 1 - k] - 1.0) > kSymTol ||
        std::abs(values_[k] + values_[n - 1 - k] - 1.0) > kSymTol) {
      throw std::invalid_argument("SymmetricHomeo: not symmetric under t -> 1 - t");
    }
  }
}

SymmetricHomeo SymmetricHomeo::identity() { return SymmetricHomeo({0.0, 1.0}, {0.0, 1.0}); }

SymmetricHomeo SymmetricHomeo::dyadic(int level, const std::vector<double>& left_values) {
  if (level < 1 || level > 20) throw std::invalid_argument("SymmetricHomeo::dyadic: level must be in [1, 20]");
  const long long M = 1LL << level;
  if (left_values.size() != static_cast<std::size_t>(M / 2 - 1)) {
    throw std::invalid_argument("SymmetricHomeo::dyadic: expected 2^{level-1} - 1 values");
  }
  std::vector<double> knots(static_cast<std::size_t>(M) + 1), values(static_cast<std::size_t>(M) + 1);
  for (long long k = 0; k <= M; ++k) knots[k] = dyadic_point(k, level);
  values[0] = 0.0;
  for (long long k = 1; k < M / 2; ++k) values[k] = left_values[static_cast<std::size_t>(k - 1)];
  values[M / 2] = 0.5;
  for (long long k = M / 2 + 1; k <= M; ++k) values[k] = 1.0 - values[M - k];
  return SymmetricHomeo(std::move(knots), std::move(values));
}

double SymmetricHomeo::operator()(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("SymmetricHomeo: t outside [0,1]");
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  if (it == knots_.end()) return 1.0;
  const std::size_t k = static_cast<std::size_t>(it - knots_.begin()) - 1;
  const double s = (t - knots_[k]) / (knots_[k + 1] - knots_[k]);
  return values_[k] + s * (values_[k + 1] - values_[k]);
}

PathFn compose(const PathFn& f, const SymmetricHomeo& phi) {
  return [f, phi](double t) { return f(std::clamp(phi(t), 0.0, 1.0)); };
}

double reparam_objective(const PathFn& f, long long H, std::size_t panels) {
  const CoeffTable table = coeff_table(f, H, panels);
  double worst = 0.0;
  for (long long k = 1; k <= H; ++k) {
    for (const long long h : {k, -k}) worst = std::max(worst, std::abs(static_cast<double>(h) * table(h).ghat));
  }
  return worst;
}

ReparamResult reparam_search(const PathFn& f, const ReparamOptions& opts) {
  if (opts.level < 2) throw std::invalid_argument("reparam_search: level must be >= 2");
  const double target = 1.0 / std::numbers::pi + 1e-9;
  const long long M = 1LL << opts.level;
  std::vector<double> left(static_cast<std::size_t>(M / 2 - 1));
  for (std::size_t k = 0; k < left.size(); ++k) left[k] = dyadic_point(static_cast<long long>(k) + 1, opts.level);

  ReparamResult result;
  const auto objective = [&](const std::vector<double>& vals) {
    ++result.evaluations;
    return reparam_objective(compose(f, SymmetricHomeo::dyadic(opts.level, vals)), opts.H, opts.panels);
  };
  double best = objective(left);
  result.initial = best;
  double step = 0.5 / static_cast<double>(M);
  while (best > target && result.evaluations < opts.budget && step > 1e-6) {
    bool improved = false;
    for (std::size_t k = 0; k < left.size() && result.evaluations < opts.budget; ++k) {
      const double lo = k == 0 ? 0.0 : left[k - 1];
      const double hi = k + 1 == left.size() ? 0.5 : left[k + 1];
      for (const double dir : {1.0, -1.0}) {
        const double cand = left[k] + dir * step;
        if (!(cand > lo && cand < hi)) continue;
        auto trial = left;
        trial[k] = cand;
        const double v = objective(trial);
        if (v < best) {
          best = v;
          left = std::move(trial);
          improved = true;
          break;
        }
        if (result.evaluations >= opts.budget) break;
      }
      if (best <= target) break;
    }
    if (!improved) step *= 0.5;
  }
  result.phi = SymmetricHomeo::dyadic(opts.level, left);
  result.achieved = best;
  result.success = best <= target;
  return result;
}

}  // namespace kloospath
