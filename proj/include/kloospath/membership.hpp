#pragma once

// Membership of a path in the support of the limiting random Fourier series:
// f is in the support iff f is reflection-symmetric, |f(1)| <= 2 and every
// |alpha(h)| <= 2. For an equally spaced polygon alpha(h) = sinc(pi h/n) ftilde(h).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kloospath/dft.hpp"
#include "kloospath/path.hpp"

namespace kloospath {

enum class Status { InS_Easy, InS_Hard, NotInS, InS_Analytic, Unknown };

std::string to_string(Status s);
bool in_support(Status s);

/// Magnitudes above kBound + kDecisionTol count as violations; within kDecisionTol of kBound is borderline.
inline constexpr double kBound = 2.0;
inline constexpr double kDecisionTol = 1e-9;

struct MembershipVerdict {
  Status status = Status::Unknown;
  std::optional<long long> witness_h;  // argmax of |alpha(h)| over the checked range
  double witness_value = 0.0;
  bool f1_ok = false;
  bool symmetry_ok = false;
  double sinc_profile_max = 0.0;       // sup |alpha(h)| over the checked range
  double tilde_max = 0.0;              // sup of the unweighted step sums (easy condition)
  bool borderline = false;
  long long checked_h = 0;             // largest |h| examined
  double tail_bound = 0.0;             // certified sup |alpha(h)| for |h| > checked_h
};

/// Exact: the full criterion over all h != 0.
/// Published: the computation behind the published numerical results. Equally
///   spaced polygons are checked for h >= 1 only. Swiss clock classification uses
///   cos(pi h/p) Kl2(a,b;p) + 2 sin(pi h/p) Im Klm(a,b;p), h = 1..p-1, with a held fixed.
enum class Convention { Exact, Published };

std::string to_string(Convention c);

/// Criterion for equally spaced polygons. Only h = +-r, r = 1..n-1 are
/// examined: |ftilde| has period n in h and |sinc(pi h/n)| is largest at the
/// smallest |h| of each residue class. Throws std::invalid_argument for unequal spacing.
MembershipVerdict check_polygonal(const PolyPath& path, Convention conv = Convention::Exact);
MembershipVerdict check_polygonal(const PolyPath& path, const DftPlan& plan, Convention conv = Convention::Exact);

/// Any knot spacing: alpha(h) from the exact polygon coefficients for |h| up to
/// a cutoff beyond which sum_j |d_j| min(1, 1/(pi |h| Delta_j)) <= 2 certifies the tail.
MembershipVerdict check_polygonal_general(const PolyPath& path);

/// Literal check of every 1 <= |h| <= H with direct sums (reference for the residue reduction).
MembershipVerdict brute_force_verdict(const PolyPath& path, long long H);

enum class PathKind { Plain, SwissClock };

std::string to_string(PathKind k);


/// The published-table verdict for one path (see Convention::Published).
MembershipVerdict published_verdict(PathKind kind, std::int64_t a, std::int64_t b, std::int64_t p,
                                    const RootTable& roots, const DftPlan& plan);

struct ClassRow {
  std::int64_t p = 0;
  std::int64_t easy = 0;
  std::int64_t hard = 0;
  std::int64_t not_in = 0;

  bool operator==(const ClassRow&) const = default;
};

PolyPath kloosterman_kind_path(PathKind kind, std::int64_t a, std::int64_t b, std::int64_t p,
                               const RootTable& roots);

/// Verdicts for a = 1..p-1 (index a-1). OpenMP-parallel over a.
std::vector<MembershipVerdict> classify_verdicts(std::int64_t p, std::int64_t b, PathKind kind,
                                                Convention conv = Convention::Exact);
/// Single-threaded reference for classify_verdicts.
std::vector<MembershipVerdict> classify_verdicts_serial(std::int64_t p, std::int64_t b, PathKind kind,
                                                       Convention conv = Convention::Exact);

ClassRow classify_prime(std::int64_t p, std::int64_t b, PathKind kind, Convention conv = Convention::Exact);
ClassRow classify_prime_serial(std::int64_t p, std::int64_t b, PathKind kind, Convention conv = Convention::Exact);

struct AlphaSequence {
  double f1 = 0.0;
  std::vector<std::pair<long long, double>> alphas;  // (h, alpha(h)), h != 0
  std::optional<double> tail_bound;                  // sup |alpha(h)| beyond the listed range
  long long listed_cutoff = 0;
};

/// InS_Analytic iff |f1|, every listed |alpha| and the tail bound are <= 2.
MembershipVerdict check_alpha_sequence(const AlphaSequence& seq);

}  // namespace kloospath
