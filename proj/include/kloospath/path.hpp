#pragma once

// Polygonal paths on [0,1], the Kloosterman-type path constructions and the
// reflection-symmetry test f(t) + conj(f(1-t)) = f(1).

#include <functional>
#include <span>
#include <vector>

#include "kloospath/modarith.hpp"

namespace kloospath {

/// Any continuous function [0,1] -> C.
using PathFn = std::function<cplx(double)>;

/// Piecewise-linear path through vertices z_0..z_n at knots 0 = t_0 < ... < t_n = 1.
class PolyPath {
 public:
  /// Equally spaced knots t_j = j/n.
  explicit PolyPath(std::vector<cplx> vertices);
  PolyPath(std::vector<cplx> vertices, std::vector<double> knots);

  std::size_t segments() const { return vertices_.size() - 1; }
  std::span<const cplx> vertices() const { return vertices_; }
  std::span<const double> knots() const { return knots_; }
  cplx vertex(std::size_t j) const { return vertices_[j]; }
  double knot(std::size_t j) const { return knots_[j]; }
  cplx start() const { return vertices_.front(); }
  cplx end() const { return vertices_.back(); }

  /// Step differences d_j = z_{j+1} - z_j.
  std::vector<cplx> steps() const;
  /// Segment durations Delta_j = t_{j+1} - t_j.
  std::vector<double> durations() const;
  /// Sum of |z_{j+1} - z_j|.
  double total_variation() const;
  /// True when every knot equals j/n to within 1e-12.
  bool equally_spaced() const;

  /// Linear interpolation; throws std::domain_error outside [0,1].
  cplx eval(double t) const;
  cplx operator()(double t) const { return eval(t); }

  PolyPath scaled(double lambda) const;
  PolyPath conjugated() const;
  /// t -> f(1) - conj(f(1-t)).
  PolyPath reflected() const;

 private:
  std::vector<cplx> vertices_;
  std::vector<double> knots_;
};

// Path constructors. Each takes the residues modulo an odd prime p.

/// n = p-1 segments at t_j = j/(p-1) through the Kloosterman partial sums.
PolyPath kloosterman_path(std::int64_t a, std::int64_t b, std::int64_t p);
PolyPath kloosterman_path(std::int64_t a, std::int64_t b, std::int64_t p, const RootTable& roots);

/// n = p segments at t_j = j/p with a zero-length step between j = (p-1)/2 and (p+1)/2.
PolyPath swiss_clock_path(std::int64_t a, std::int64_t b, std::int64_t p);
PolyPath swiss_clock_path(std::int64_t a, std::int64_t b, std::int64_t p, const RootTable& roots);

/// n = p+1 segments with pauses of length 1/(2p) at both ends; t_i = (i - 1/2)/p.
PolyPath padded_kloosterman_path(std::int64_t a, std::int64_t b, std::int64_t p);

/// Birch partial sums with the x = 0 summand split between the two end segments.
PolyPath padded_birch_path(std::int64_t a, std::int64_t p);

/// Legendre-symbol partial sums with end pauses of length 1/(2p).
PolyPath padded_character_path(std::int64_t p);

/// Knots shared by the padded constructions: 0, (i - 1/2)/p for i = 1..p, 1.
std::vector<double> padded_knots(std::int64_t p);

struct SymmetryReport {
  bool is_F0 = false;
  cplx f1;
  double max_defect = 0.0;
  double f0_defect = 0.0;
};

inline constexpr double kSymmetryTol = 1e-9;
inline constexpr std::size_t kDefaultSymmetryGrid = 4097;

/// Tests the knots together with their reflections 1 - t_j; exact for polygonal paths.
SymmetryReport symmetry_report(const PolyPath& path, double tol = kSymmetryTol);
/// Tests a uniform grid of grid_size >= 2 points.
SymmetryReport symmetry_report(const PathFn& f, std::size_t grid_size = kDefaultSymmetryGrid,
                               double tol = kSymmetryTol);

}  // namespace kloospath
