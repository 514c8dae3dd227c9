#pragma once

// Independent reference computations used by the tests. They share no code
// with the library beyond the cplx alias.

#include <cstdint>
#include <vector>

#include "kloospath/modarith.hpp"

namespace oracle {

using kloospath::cplx;

std::int64_t inverse_by_search(std::int64_t x, std::int64_t p);
cplx e(double x);

/// p^{-1/2} sum_{x=1}^{p-1} e((ax + b xbar)/p), straight from the definition.
cplx kloosterman(std::int64_t a, std::int64_t b, std::int64_t p);
/// Normalized partial sums z_0..z_{p-1}.
std::vector<cplx> kloosterman_partials(std::int64_t a, std::int64_t b, std::int64_t p);
/// Swiss clock vertices z_0..z_p.
std::vector<cplx> swiss_vertices(std::int64_t a, std::int64_t b, std::int64_t p);

/// sum_j x_j e(-jk/n) term by term.
std::vector<cplx> dft(const std::vector<cplx>& x);

/// int_0^1 f(t) e(-ht) dt for the polygon, by 16-point Gauss-Legendre on
/// sub-panels of each segment.
cplx polygon_fhat(const std::vector<cplx>& z, const std::vector<double>& t, long long h);

/// Legendre symbol by listing the squares.
int legendre_by_squares(std::int64_t x, std::int64_t p);

/// J1 by its ascending series (accurate for |x| <= 20).
double bessel_j1_series(double x);

}  // namespace oracle
