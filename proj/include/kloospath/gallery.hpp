#pragma once

// Classical example functions with evaluators, closed-form alpha(h) and verdicts.

#include <cstdint>
#include <string>
#include <vector>

#include "kloospath/membership.hpp"
#include "kloospath/path.hpp"

namespace kloospath {

/// Takagi function sum_{j < terms} <2^j t> / 2^j.
double takagi(double t, int terms = 52);

/// rho(t) = sum_{n <= terms} sin(pi n^2 t) / (pi n^2).
double riemann_rho(double t, int terms = 512);

/// Cantor staircase by ternary digits; exact at ternary endpoints.
double cantor(double t, int iterations = 60);

int mobius(std::int64_t n);
int liouville(std::int64_t n);

enum class ArithWeight { Mobius, Liouville };

/// sum_{1 <= h <= terms} w(h) (e(ht) - 1) / (2 pi i h).
cplx davenport(double t, int terms, ArithWeight w);

/// Bessel J1 (std::cyl_bessel_j, extended to x < 0 by oddness).
double bessel_j1(double x);

enum class Semicircle { Sqrt, Trig };

/// ghat(h) for the semicircle over [0, 2 alpha]:
///   Sqrt: 2 alpha t + i sqrt(alpha^2 - alpha^2 (2t-1)^2)
///   Trig: alpha (1 - cos(pi t) + i sin(pi t))
cplx semicircle_coeff(Semicircle variant, double alpha, long long h);

/// Exponents delta_n(j) in Z/4, j < 4^n, 1 <= n <= 8.
std::vector<int> hilbert_delta(int n);
/// Path with steps 2^{-n} i^{delta_n(j)}, anchored at 0.
PolyPath hilbert_path(int n);
/// 2^{-n} sum_j i^{delta_n(j)} e(-h(j + 1/2)/4^n).
cplx hilbert_tilde(int n, long long h);

enum class GalleryId {
  Line,
  Parabola,
  SemicircleSqrt,
  SemicircleTrig,
  TakagiGraph,
  RiemannGraph,
  Cantor,
  Davenport,
  LiouvilleVariant,
  HilbertApprox,
};

struct GalleryItem {
  GalleryId id = GalleryId::Line;
  double param = 0.0;  // alpha for the parametric families
  int level = 1;       // HilbertApprox only
};

/// Parses "line:2", "parabola:6.28", "semicircle-sqrt:1", "semicircle-trig:-1",
/// "takagi", "riemann", "cantor", "davenport", "liouville", "hilbert:3".
/// Throws std::invalid_argument on unknown ids or bad parameters.
GalleryItem parse_gallery_id(const std::string& text);
std::string gallery_name(const GalleryItem& item);
/// All ids accepted by parse_gallery_id, without parameters.
std::vector<std::string> gallery_ids();

/// Evaluator of the function t -> f(t) on [0,1].
PathFn gallery_function(const GalleryItem& item);

/// Closed-form alpha(h) for 1 <= |h| <= H with a certified tail bound.
/// Throws std::invalid_argument for HilbertApprox (polygonal, no closed form needed).
AlphaSequence gallery_alpha(const GalleryItem& item, long long H = 256);

/// Closed-form items go through check_alpha_sequence (conv is irrelevant there);
/// Hilbert approximations through check_polygonal with conv.
MembershipVerdict gallery_verdict(const GalleryItem& item, Convention conv = Convention::Exact);

}  // namespace kloospath
