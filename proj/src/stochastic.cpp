#include "kloospath/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kloospath {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kQuantileKnots = 65537;

// Quantile of u by bisection on [lo, hi], which must bracket it.
double bisect(double u, double lo, double hi) {
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (sato_tate_cdf(mid) < u) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

// sin(2 pi k / M) and cos(2 pi k / M), k < M.
struct TrigTable {
  std::vector<double> s, c;
  explicit TrigTable(std::size_t M) : s(M), c(M) {
    for (std::size_t k = 0; k < M; ++k) {
      const double x = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(M);
      s[k] = std::sin(x);
      c[k] = std::cos(x);
    }
  }
};

std::vector<double> draw_coefficients(int N, Rng& rng) {
  std::vector<double> st(static_cast<std::size_t>(2 * N + 1));
  st[static_cast<std::size_t>(N)] = sample_sato_tate(rng);
  for (int h = 1; h <= N; ++h) {
    st[static_cast<std::size_t>(N + h)] = sample_sato_tate(rng);
    st[static_cast<std::size_t>(N - h)] = sample_sato_tate(rng);
  }
  return st;
}

// K_N at t_i = i/M, i = 0..M.
cplx series_at(const std::vector<double>& st, int N, std::size_t i, std::size_t M, const TrigTable& trig) {
  const double t = static_cast<double>(i) / static_cast<double>(M);
  double re = t * st[static_cast<std::size_t>(N)];
  double im = 0.0;
  for (int h = 1; h <= N; ++h) {
    const std::size_t k = (static_cast<std::size_t>(h) * i) % M;
    const double plus = st[static_cast<std::size_t>(N + h)];
    const double minus = st[static_cast<std::size_t>(N - h)];
    const double w = 1.0 / (2.0 * kPi * h);
    re += (plus + minus) * trig.s[k] * w;
    im += (plus - minus) * (1.0 - trig.c[k]) * w;
  }
  return {re, im};
}

struct BallSetup {
  std::size_t M;
  TrigTable trig;
  std::vector<cplx> target;
  BallSetup(const PathFn& center, std::size_t grid_size) : M(grid_size - 1), trig(grid_size - 1), target(grid_size) {
    for (std::size_t i = 0; i < grid_size; ++i) target[i] = center(static_cast<double>(i) / static_cast<double>(M));
  }
};

bool trial_hits(const BallSetup& setup, double eps, int N, std::uint64_t trial_seed) {
  Rng rng = make_rng(trial_seed);
  const auto st = draw_coefficients(N, rng);
  for (std::size_t i = 0; i <= setup.M; ++i) {
    if (std::abs(series_at(st, N, i, setup.M, setup.trig) - setup.target[i]) >= eps) return false;
  }
  return true;
}

void validate_mc(double eps, int N, std::int64_t trials, std::size_t grid_size) {
  if (trials < 1) throw std::invalid_argument("mc_ball_probability: trials must be >= 1");
  if (N < 1) throw std::invalid_argument("mc_ball_probability: N must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("mc_ball_probability: eps must be positive");
  if (grid_size < 2) throw std::invalid_argument("mc_ball_probability: grid_size must be >= 2");
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

double sato_tate_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * kPi) + std::asin(0.5 * x) / kPi;
}

SatoTateSampler::SatoTateSampler() : knots_(kQuantileKnots) {
  const double last = static_cast<double>(kQuantileKnots - 1);
  knots_.front() = -2.0;
  knots_.back() = 2.0;
  for (std::size_t k = 1; k + 1 < kQuantileKnots; ++k) {
    knots_[k] = bisect(static_cast<double>(k) / last, knots_[k - 1], 2.0);
  }
}

double SatoTateSampler::quantile(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("SatoTateSampler: u outside [0,1]");
  const double pos = u * static_cast<double>(kQuantileKnots - 1);
  const std::size_t k = std::min(static_cast<std::size_t>(pos), kQuantileKnots - 2);
  return bisect(u, knots_[k], knots_[k + 1]);
}

double sample_sato_tate(Rng& rng) {
  static const SatoTateSampler sampler;
  return sampler(rng);
}

SeriesSample sample_K(int N, std::size_t grid_size, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("sample_K: N must be >= 1");
  if (grid_size < 2) throw std::invalid_argument("sample_K: grid_size must be >= 2");
  SeriesSample s;
  s.N = N;
  s.seed = seed;
  Rng rng = make_rng(seed);
  s.st = draw_coefficients(N, rng);
  const std::size_t M = grid_size - 1;
  const TrigTable trig(M);
  s.grid.resize(grid_size);
  for (std::size_t i = 0; i <= M; ++i) s.grid[i] = series_at(s.st, N, i, M, trig);
  return s;
}

AlphaSequence series_alpha(const SeriesSample& s) {
  AlphaSequence seq;
  seq.f1 = s.coefficient(0);
  for (int h = 1; h <= s.N; ++h) {
    seq.alphas.emplace_back(h, s.coefficient(h));
    seq.alphas.emplace_back(-h, s.coefficient(-h));
  }
  seq.tail_bound = 0.0;
  seq.listed_cutoff = s.N;
  return seq;
}

double mc_ball_probability(const PathFn& center, double eps, int N, std::int64_t trials, std::uint64_t seed,
                           std::size_t grid_size) {
  validate_mc(eps, N, trials, grid_size);
  const BallSetup setup(center, grid_size);
  std::int64_t hits = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : hits)
  for (std::int64_t k = 0; k < trials; ++k) {
    if (trial_hits(setup, eps, N, seed ^ static_cast<std::uint64_t>(k))) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

double mc_ball_probability_serial(const PathFn& center, double eps, int N, std::int64_t trials,
                                  std::uint64_t seed, std::size_t grid_size) {
  validate_mc(eps, N, trials, grid_size);
  const BallSetup setup(center, grid_size);
  std::int64_t hits = 0;
  for (std::int64_t k = 0; k < trials; ++k) {
    if (trial_hits(setup, eps, N, seed ^ static_cast<std::uint64_t>(k))) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

EmpiricalComparison empirical_vs_limit(std::int64_t p, std::int64_t b, const PathFn& center, double eps, int N,
                                       std::int64_t trials, std::uint64_t seed) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("empirical_vs_limit: p must be an odd prime");
  const RootTable roots(p);
  std::vector<cplx> target(static_cast<std::size_t>(p));
  for (std::int64_t j = 0; j < p; ++j) target[j] = center(static_cast<double>(j) / static_cast<double>(p - 1));
  std::int64_t inside = 0;
  for (std::int64_t a = 1; a < p; ++a) {
    const PolyPath path = kloosterman_path(a, b, p, roots);
    double dev = 0.0;
    for (std::int64_t j = 0; j < p; ++j) dev = std::max(dev, std::abs(path.vertex(j) - target[j]));
    if (dev < eps) ++inside;
  }
  EmpiricalComparison out;
  out.p = p;
  out.b = b;
  out.eps = eps;
  out.empirical = static_cast<double>(inside) / static_cast<double>(p - 1);
  const std::size_t grid = std::max<std::size_t>(1025, static_cast<std::size_t>(4 * (p - 1) + 1));
  out.monte_carlo = mc_ball_probability(center, eps, N, trials, seed, grid);
  out.N = N;
  out.trials = trials;
  out.seed = seed;
  return out;
}

double ks_statistic(std::vector<double> samples, double (*cdf)(double)) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double F = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - F, F - static_cast<double>(i) / n});
  }
  return d;
}

}  // namespace kloospath
