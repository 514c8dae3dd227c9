#include "kloospath/fourier.hpp"

#include <cmath>
#include <numbers>

namespace kloospath {

namespace {

constexpr double kPi = std::numbers::pi;

// e(x) with x reduced to [0,1) first.
cplx unit(double turns) {
  turns -= std::floor(turns);
  const double angle = 2.0 * kPi * turns;
  return cplx(std::cos(angle), std::sin(angle));
}

// e(-num/den) for integers, exact reduction.
cplx unit_ratio(long long num, long long den) {
  long long r = num % den;
  if (r < 0) r += den;
  return unit(-static_cast<double>(r) / static_cast<double>(den));
}

cplx two_pi_i(long long h) { return cplx(0.0, 2.0 * kPi * static_cast<double>(h)); }

void require_nonzero(long long h) {
  if (h == 0) throw std::invalid_argument("Fourier index h must be nonzero");
}

std::size_t mod_index(long long h, std::size_t n) {
  const long long m = static_cast<long long>(n);
  long long r = h % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

}  // namespace

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

cplx polygonal_fourier(const PolyPath& path, long long h) {
  require_nonzero(h);
  const auto z = path.vertices();
  const auto t = path.knots();
  const double hd = static_cast<double>(h);
  cplx acc = 0.0;
  for (std::size_t j = 0; j + 1 < z.size(); ++j) {
    const double delta = t[j + 1] - t[j];
    const cplx d = z[j + 1] - z[j];
    if (d == cplx(0.0)) continue;
    acc += d * unit(-hd * (t[j] + 0.5 * delta)) * sinc(kPi * hd * delta);
  }
  return (acc - (z.back() - z.front())) / two_pi_i(h);
}

TildeTable::TildeTable(std::size_t n, std::vector<cplx> values, std::vector<cplx> steps)
    : n_(n), values_(std::move(values)), steps_(std::move(steps)) {
  if (values_.size() != 2 * n_ + 1) throw std::invalid_argument("TildeTable: expected 2n+1 values");
}

cplx TildeTable::operator()(long long h) const {
  require_nonzero(h);
  const long long n = static_cast<long long>(n_);
  if (h < -n || h > n) throw std::out_of_range("TildeTable: |h| exceeds n");
  return values_[static_cast<std::size_t>(h + n)];
}

TildeTable tilde_table(const PolyPath& path) { return tilde_table(path, DftPlan(path.segments())); }

TildeTable tilde_table(const PolyPath& path, const DftPlan& plan) {
  if (!path.equally_spaced()) throw std::invalid_argument("tilde_table: knots are not equally spaced");
  const std::size_t n = path.segments();
  if (plan.size() != n) throw std::invalid_argument("tilde_table: plan length mismatch");
  auto d = path.steps();
  const auto F = plan.forward(d);
  const long long nn = static_cast<long long>(n);
  std::vector<cplx> values(2 * n + 1, cplx(0.0));
  for (long long h = -nn; h <= nn; ++h) {
    if (h == 0) continue;
    values[static_cast<std::size_t>(h + nn)] = unit_ratio(h, 2 * nn) * F[mod_index(h, n)];
  }
  return TildeTable(n, std::move(values), std::move(d));
}

cplx tilde_naive(std::span<const cplx> steps, long long h) {
  const long long n = static_cast<long long>(steps.size());
  cplx acc = 0.0;
  for (long long j = 0; j < n; ++j) {
    // e(-h(j + 1/2)/n) = e(-h(2j+1) / 2n)
    const long long num = (h % (2 * n)) * (2 * j + 1);
    acc += steps[static_cast<std::size_t>(j)] * unit_ratio(num, 2 * n);
  }
  return acc;
}

CoeffTable::CoeffTable(cplx f1, long long H) : f1_(f1), H_(H) {
  if (H < 1) throw std::invalid_argument("CoeffTable: cutoff must be >= 1");
  entries_.resize(static_cast<std::size_t>(2 * H));
}

std::size_t CoeffTable::index(long long h) const {
  require_nonzero(h);
  if (h < -H_ || h > H_) throw std::out_of_range("CoeffTable: |h| exceeds cutoff");
  return static_cast<std::size_t>(h < 0 ? h + H_ : h + H_ - 1);
}

void CoeffTable::set_fhat(long long h, cplx fhat) {
  auto& e = entries_[index(h)];
  e.fhat = fhat;
  e.ghat = fhat + f1_ / two_pi_i(h);
  e.alpha = f1_ + two_pi_i(h) * fhat;
}

const CoeffEntry& CoeffTable::operator()(long long h) const { return entries_[index(h)]; }

CoeffTable coeff_table(const PolyPath& path, long long H) {
  CoeffTable table(path.end(), H);
  for (long long h = 1; h <= H; ++h) {
    table.set_fhat(h, polygonal_fourier(path, h));
    table.set_fhat(-h, polygonal_fourier(path, -h));
  }
  return table;
}

namespace {

// Exact Fourier integral at h of the interpolant through y_k = f(k/N).
cplx interpolant_fourier(std::span<const cplx> y, long long h) {
  const long long N = static_cast<long long>(y.size()) - 1;
  const long long hm = h % (2 * N);
  cplx acc = 0.0;
  for (long long j = 0; j < N; ++j) {
    acc += (y[j + 1] - y[j]) * unit_ratio(hm * (2 * j + 1), 2 * N);
  }
  acc *= sinc(kPi * static_cast<double>(h) / static_cast<double>(N));
  return (acc - (y.back() - y.front())) / two_pi_i(h);
}

std::vector<cplx> sample_grid(const PathFn& f, std::size_t N) {
  std::vector<cplx> y(N + 1);
  for (std::size_t k = 0; k <= N; ++k) y[k] = f(static_cast<double>(k) / static_cast<double>(N));
  return y;
}

// Doubles the grid, evaluating f only at the new midpoints.
std::vector<cplx> refine_grid(const PathFn& f, std::span<const cplx> y) {
  const std::size_t N = y.size() - 1;
  std::vector<cplx> out(2 * N + 1);
  for (std::size_t k = 0; k <= N; ++k) out[2 * k] = y[k];
  for (std::size_t k = 0; k < N; ++k) {
    out[2 * k + 1] = f((static_cast<double>(k) + 0.5) / static_cast<double>(N));
  }
  return out;
}

}  // namespace

cplx quadrature_fourier(const PathFn& f, long long h, const QuadratureOptions& opts) {
  require_nonzero(h);
  if (opts.panels < 64) throw std::invalid_argument("quadrature_fourier: need at least 64 panels");
  auto y = sample_grid(f, opts.panels);
  cplx previous = interpolant_fourier(y, h);
  while (y.size() - 1 < opts.max_panels) {
    y = refine_grid(f, y);
    const cplx current = interpolant_fourier(y, h);
    if (std::abs(current - previous) < opts.tol) return current;
    previous = current;
    if (y.size() - 1 >= opts.max_panels) {
      throw QuadratureError("quadrature_fourier: no convergence at h = " + std::to_string(h), previous, current);
    }
  }
  throw QuadratureError("quadrature_fourier: panel cap below starting panel count", previous, previous);
}

cplx quadrature_fourier(const PathFn& f, long long h, std::size_t panels) {
  QuadratureOptions opts;
  opts.panels = panels;
  return quadrature_fourier(f, h, opts);
}

CoeffTable coeff_table(const PathFn& f, long long H, std::size_t panels) {
  if (panels < 64) throw std::invalid_argument("coeff_table: need at least 64 panels");
  const auto y = sample_grid(f, panels);
  std::vector<cplx> d(panels);
  for (std::size_t j = 0; j < panels; ++j) d[j] = y[j + 1] - y[j];
  const auto D = DftPlan(panels).forward(d);
  const long long N = static_cast<long long>(panels);
  CoeffTable table(y.back(), H);
  for (long long s = -1; s <= 1; s += 2) {
    for (long long k = 1; k <= H; ++k) {
      const long long h = s * k;
      const cplx sum = unit_ratio(h, 2 * N) * D[mod_index(h, panels)] *
                       sinc(kPi * static_cast<double>(h) / static_cast<double>(N));
      table.set_fhat(h, (sum - (y.back() - y.front())) / two_pi_i(h));
    }
  }
  return table;
}

cplx cesaro_reconstruct(const CoeffTable& coeffs, long long N, double t) {
  if (N < 1 || N > coeffs.cutoff()) throw std::invalid_argument("cesaro_reconstruct: need 1 <= N <= cutoff");
  cplx acc = coeffs.f1() * t;
  for (long long k = 1; k <= N; ++k) {
    const double weight = 1.0 - static_cast<double>(k) / static_cast<double>(N);
    if (weight == 0.0) continue;
    for (const long long h : {k, -k}) {
      acc += weight * coeffs(h).alpha * (unit(static_cast<double>(h) * t) - 1.0) / two_pi_i(h);
    }
  }
  return acc;
}

}  // namespace kloospath
