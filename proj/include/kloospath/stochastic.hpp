#pragma once

// Random Fourier series K(t) = t ST_0 + sum_{h != 0} (e(ht) - 1)/(2 pi i h) ST_h
// with independent Sato-Tate coefficients, and Monte Carlo ball probabilities.
//
// Randomness: std::mt19937_64 seeded with splitmix64(seed). Monte Carlo trial k
// uses seed ^ k, so every trial is reproducible on its own and the result does
// not depend on the thread count.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "kloospath/membership.hpp"
#include "kloospath/path.hpp"

namespace kloospath {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);
Rng make_rng(std::uint64_t seed);
/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng& rng);

/// Semicircle law on [-2, 2]: density sqrt(4 - x^2) / (2 pi).
double sato_tate_cdf(double x);

/// Inverse-CDF sampler: 65537-knot table of quantiles, refined by bisection to 1e-12.
class SatoTateSampler {
 public:
  SatoTateSampler();
  double quantile(double u) const;
  double operator()(Rng& rng) const { return quantile(uniform01(rng)); }

 private:
  std::vector<double> knots_;  // knots_[k] = F^{-1}(k / (size - 1))
};

/// Draw from a process-wide sampler (built once, read-only afterwards).
double sample_sato_tate(Rng& rng);

struct SeriesSample {
  int N = 0;
  std::uint64_t seed = 0;
  std::vector<double> st;    // ST_h at index h + N, |h| <= N
  std::vector<cplx> grid;    // K_N(i / (size - 1))

  double coefficient(int h) const { return st[static_cast<std::size_t>(h + N)]; }
};

/// Symmetric partial sum |h| <= N on a uniform grid of grid_size >= 2 points.
/// Draw order: ST_0, ST_1, ST_{-1}, ST_2, ST_{-2}, ...
SeriesSample sample_K(int N, std::size_t grid_size, std::uint64_t seed);

/// alpha(h) = ST_h, f(1) = ST_0, nothing beyond N.
AlphaSequence series_alpha(const SeriesSample& s);

/// Fraction of trials whose grid sup-distance to center is < eps.
/// OpenMP-parallel over trials.
double mc_ball_probability(const PathFn& center, double eps, int N, std::int64_t trials, std::uint64_t seed,
                           std::size_t grid_size = 1025);
/// Single-threaded reference; returns the same value as mc_ball_probability.
double mc_ball_probability_serial(const PathFn& center, double eps, int N, std::int64_t trials,
                                  std::uint64_t seed, std::size_t grid_size = 1025);

struct EmpiricalComparison {
  std::int64_t p = 0;
  std::int64_t b = 1;  // a varies over 1..p-1, b is fixed
  double eps = 0.0;
  double empirical = 0.0;
  double monte_carlo = 0.0;
  int N = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Fraction of a with max_j |z_j - f(j/(p-1))| < eps over the plain Kloosterman
/// paths K_p(a,b), next to the Monte Carlo estimate for the limit law.
EmpiricalComparison empirical_vs_limit(std::int64_t p, std::int64_t b, const PathFn& center, double eps, int N,
                                       std::int64_t trials, std::uint64_t seed);

/// Kolmogorov-Smirnov statistic sup |F_n - F| of the samples against cdf.
double ks_statistic(std::vector<double> samples, double (*cdf)(double));

}  // namespace kloospath
