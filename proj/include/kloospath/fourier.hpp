#pragma once

// Fourier coefficients of paths on [0,1]:
//   fhat(h) = int_0^1 f(t) e(-ht) dt
//   ghat(h) = fhat of g(t) = f(t) - f(1) t
//   alpha(h) = f(1) + 2 pi i h fhat(h) = 2 pi i h ghat(h)

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kloospath/dft.hpp"
#include "kloospath/path.hpp"

namespace kloospath {

/// sin(x)/x with sinc(0) = 1.
double sinc(double x);

/// Exact Fourier coefficient of a polygonal path (telescoped segment sum). h != 0.
cplx polygonal_fourier(const PolyPath& path, long long h);

/// Step sums ftilde(h) = sum_j d_j e(-h(j + 1/2)/n) of an equally spaced path, h in [-n, n] \ {0}.
class TildeTable {
 public:
  TildeTable(std::size_t n, std::vector<cplx> values, std::vector<cplx> steps);

  std::size_t segments() const { return n_; }
  cplx operator()(long long h) const;
  std::span<const cplx> steps() const { return steps_; }

 private:
  std::size_t n_;
  std::vector<cplx> values_;  // index h + n
  std::vector<cplx> steps_;
};

/// One length-n DFT of the steps plus the half-sample phase. Rejects unequal spacing.
TildeTable tilde_table(const PolyPath& path);
TildeTable tilde_table(const PolyPath& path, const DftPlan& plan);

/// Direct O(n) evaluation of ftilde(h) for any integer h (reference path).
cplx tilde_naive(std::span<const cplx> steps, long long h);

struct CoeffEntry {
  cplx fhat;
  cplx ghat;
  cplx alpha;
};

/// Fourier data of a path for 1 <= |h| <= H, both signs stored.
class CoeffTable {
 public:
  CoeffTable(cplx f1, long long H);

  cplx f1() const { return f1_; }
  long long cutoff() const { return H_; }

  /// Sets fhat(h) and derives ghat(h), alpha(h).
  void set_fhat(long long h, cplx fhat);
  const CoeffEntry& operator()(long long h) const;

 private:
  std::size_t index(long long h) const;

  cplx f1_;
  long long H_;
  std::vector<CoeffEntry> entries_;  // h = -H..-1, 1..H
};

CoeffTable coeff_table(const PolyPath& path, long long H);

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, cplx previous, cplx last)
      : std::runtime_error(what), previous_(previous), last_(last) {}
  cplx previous() const { return previous_; }
  cplx last() const { return last_; }

 private:
  cplx previous_;
  cplx last_;
};

struct QuadratureOptions {
  std::size_t panels = 1024;          // starting panel count, >= 64
  std::size_t max_panels = 1u << 22;
  double tol = 1e-9;                  // stop when two successive estimates differ by less
};

/// fhat(h) of a continuous f by panel doubling: each estimate is the exact
/// Fourier integral of the piecewise-linear interpolant of f on a uniform grid.
cplx quadrature_fourier(const PathFn& f, long long h, const QuadratureOptions& opts = {});
cplx quadrature_fourier(const PathFn& f, long long h, std::size_t panels);

/// Coefficient table of f for 1 <= |h| <= H from one uniform sample grid of `panels`
/// intervals (exact for the piecewise-linear interpolant; computed by FFT).
CoeffTable coeff_table(const PathFn& f, long long H, std::size_t panels);

/// f(1) t + sum_{1<=|h|<=N} alpha(h) (e(ht) - 1)/(2 pi i h) (1 - |h|/N).
cplx cesaro_reconstruct(const CoeffTable& coeffs, long long N, double t);

}  // namespace kloospath
