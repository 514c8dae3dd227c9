#pragma once

// Faber-Schauder expansions on dyadic grids and symmetric reparametrizations
// phi(1 - t) = 1 - phi(t).

#include <vector>

#include "kloospath/path.hpp"

namespace kloospath {

/// Tent of height 1 on [(j-1)/2^m, j/2^m] peaking at (2j-1)/2^{m+1}; 1 <= j <= 2^m.
double schauder_tent(int m, int j, double t);

/// f(t) = f(0) + (f(1) - f(0)) t + sum_{m < depth} sum_{j=1}^{2^m} beta(m,j) tent(m,j,t)
/// where beta(m,j) = f((2j-1)/2^{m+1}) - (f((j-1)/2^m) + f(j/2^m))/2.
struct FaberExpansion {
  cplx f0;
  cplx f1;
  int depth = 0;
  std::vector<std::vector<cplx>> beta;  // beta[m][j-1]

  cplx coefficient(int m, int j) const;
  /// Partial reconstruction; exact at the dyadic points k/2^depth.
  cplx evaluate(double t) const;
};

/// 0 <= depth <= 20.
FaberExpansion faber_coefficients(const PathFn& f, int depth);

/// Increasing piecewise-linear homeomorphism of [0,1] with phi(1 - t) = 1 - phi(t).
class SymmetricHomeo {
 public:
  /// Full knot lists; throws std::invalid_argument unless strictly increasing,
  /// anchored at (0,0) and (1,1), and symmetric to within 1e-12.
  SymmetricHomeo(std::vector<double> knots, std::vector<double> values);

  static SymmetricHomeo identity();
  /// Knots k/2^level, k = 0..2^level, with the images of the left-half interior
  /// knots given (2^{level-1} - 1 values); phi(1/2) = 1/2 and the right half mirrors.
  static SymmetricHomeo dyadic(int level, const std::vector<double>& left_values);

  double operator()(double t) const;
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
};

PathFn compose(const PathFn& f, const SymmetricHomeo& phi);

struct ReparamResult {
  SymmetricHomeo phi = SymmetricHomeo::identity();
  double initial = 0.0;   // objective at phi = identity
  double achieved = 0.0;  // objective at the returned phi
  bool success = false;   // achieved <= 1/pi
  int evaluations = 0;
};

struct ReparamOptions {
  int budget = 400;           // objective evaluations
  long long H = 32;           // objective uses 1 <= |h| <= H
  int level = 4;              // phi knots at k/2^level
  std::size_t panels = 4096;  // sample grid for the coefficients
};

/// Coordinate descent over dyadic symmetric phi minimizing
/// sup_{1<=|h|<=H} |h ghat(h)| of f o phi, ghat the coefficients of f(t) - f(1) t.
/// Best effort; stops early on success.
ReparamResult reparam_search(const PathFn& f, const ReparamOptions& opts = {});

/// sup_{1<=|h|<=H} |h ghat(h)| from a uniform sample grid.
double reparam_objective(const PathFn& f, long long H, std::size_t panels);

}  // namespace kloospath
