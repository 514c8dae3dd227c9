#include "kloospath/membership.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kloospath/fourier.hpp"

namespace kloospath {

namespace {

constexpr double kPi = std::numbers::pi;

bool exceeds(double v) { return v > kBound + kDecisionTol; }
bool near_bound(double v) { return std::abs(v - kBound) <= kDecisionTol; }

struct Tracker {
  double max = 0.0;
  std::optional<long long> arg;
  void offer(long long h, double v) {
    if (!arg || v > max) {
      max = v;
      arg = h;
    }
  }
};

// Shared decision rule once the symmetry, endpoint and coefficient scans are done.
MembershipVerdict decide(const SymmetryReport& sym, const Tracker& alpha, double tilde_max) {
  MembershipVerdict v;
  v.symmetry_ok = sym.is_F0;
  const double f1 = std::abs(sym.f1);
  v.f1_ok = !exceeds(f1);
  v.witness_h = alpha.arg;
  v.witness_value = alpha.max;
  v.sinc_profile_max = alpha.max;
  v.tilde_max = tilde_max;
  v.borderline = near_bound(f1) || near_bound(alpha.max) || near_bound(tilde_max);
  if (!v.symmetry_ok || !v.f1_ok || exceeds(alpha.max)) {
    v.status = Status::NotInS;
  } else {
    v.status = exceeds(tilde_max) ? Status::InS_Hard : Status::InS_Easy;
  }
  return v;
}

// sum_j d_j e(-h(t_j + Delta_j/2)), the sinc-free counterpart of alpha(h).
cplx unweighted_sum(const PolyPath& path, long long h) {
  const auto z = path.vertices();
  const auto t = path.knots();
  cplx acc = 0.0;
  for (std::size_t j = 0; j + 1 < z.size(); ++j) {
    const cplx d = z[j + 1] - z[j];
    if (d == cplx(0.0)) continue;
    double turns = -static_cast<double>(h) * 0.5 * (t[j] + t[j + 1]);
    turns -= std::floor(turns);
    acc += d * std::polar(1.0, 2.0 * kPi * turns);
  }
  return acc;
}

// sup_{|h| >= H} |alpha(h)| <= sum_j |d_j| min(1, 1/(pi H Delta_j)).
double envelope(const PolyPath& path, long long H) {
  const auto z = path.vertices();
  const auto t = path.knots();
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < z.size(); ++j) {
    const double len = std::abs(z[j + 1] - z[j]);
    const double delta = t[j + 1] - t[j];
    acc += len * std::min(1.0, 1.0 / (kPi * static_cast<double>(H) * delta));
  }
  return acc;
}

// Scans 1 <= |h| <= H with the exact polygon coefficients.
void scan_alpha(const PolyPath& path, long long H, Tracker& alpha, double& tilde_max) {
  const cplx f1 = path.end();
  for (long long k = 1; k <= H; ++k) {
    for (const long long h : {k, -k}) {
      const cplx a = f1 + cplx(0.0, 2.0 * kPi * static_cast<double>(h)) * polygonal_fourier(path, h);
      alpha.offer(h, std::abs(a));
      tilde_max = std::max(tilde_max, std::abs(unweighted_sum(path, h)));
    }
  }
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::InS_Easy: return "InS_Easy";
    case Status::InS_Hard: return "InS_Hard";
    case Status::NotInS: return "NotInS";
    case Status::InS_Analytic: return "InS_Analytic";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool in_support(Status s) { return s == Status::InS_Easy || s == Status::InS_Hard || s == Status::InS_Analytic; }

std::string to_string(PathKind k) { return k == PathKind::Plain ? "plain" : "swiss"; }

std::string to_string(Convention c) { return c == Convention::Exact ? "exact" : "published"; }

MembershipVerdict check_polygonal(const PolyPath& path, Convention conv) {
  return check_polygonal(path, DftPlan(path.segments()), conv);
}

MembershipVerdict check_polygonal(const PolyPath& path, const DftPlan& plan, Convention conv) {
  if (!path.equally_spaced()) {
    throw std::invalid_argument("check_polygonal: unequal spacing, use check_polygonal_general");
  }
  const std::size_t n = path.segments();
  if (plan.size() != n) throw std::invalid_argument("check_polygonal: plan length mismatch");
  const SymmetryReport sym = symmetry_report(path);
  // |ftilde(h)| = |F[h mod n]|; the half-sample phase has modulus one.
  const auto F = plan.forward(path.steps());
  double tilde_max = 0.0;
  for (const cplx& v : F) tilde_max = std::max(tilde_max, std::abs(v));
  Tracker alpha;
  const double nd = static_cast<double>(n);
  for (std::size_t r = 1; r < n; ++r) {
    const double weight = std::abs(std::sin(kPi * static_cast<double>(r) / nd)) * nd / (kPi * static_cast<double>(r));
    alpha.offer(static_cast<long long>(r), weight * std::abs(F[r]));
    if (conv == Convention::Exact) alpha.offer(-static_cast<long long>(r), weight * std::abs(F[n - r]));
  }
  MembershipVerdict v = decide(sym, alpha, tilde_max);
  v.checked_h = static_cast<long long>(n) - 1;
  // Beyond |h| = n-1 every class has already been seen at a larger weight.
  v.tail_bound = alpha.max;
  return v;
}

MembershipVerdict check_polygonal_general(const PolyPath& path) {
  const SymmetryReport sym = symmetry_report(path);
  long long H = std::max<long long>(1, static_cast<long long>(path.segments()));
  while (envelope(path, H + 1) > kBound) H *= 2;
  // Shrink back to the smallest certified cutoff >= n.
  long long lo = std::max<long long>(1, static_cast<long long>(path.segments())), hi = H;
  while (lo < hi) {
    const long long mid = lo + (hi - lo) / 2;
    if (envelope(path, mid + 1) <= kBound) hi = mid; else lo = mid + 1;
  }
  H = lo;
  Tracker alpha;
  double tilde_max = 0.0;
  scan_alpha(path, H, alpha, tilde_max);
  MembershipVerdict v = decide(sym, alpha, tilde_max);
  v.checked_h = H;
  v.tail_bound = envelope(path, H + 1);
  return v;
}

MembershipVerdict brute_force_verdict(const PolyPath& path, long long H) {
  if (H < 1) throw std::invalid_argument("brute_force_verdict: H must be >= 1");
  const SymmetryReport sym = symmetry_report(path);
  Tracker alpha;
  double tilde_max = std::abs(path.end() - path.start());
  if (path.equally_spaced()) {
    const auto d = path.steps();
    const double n = static_cast<double>(path.segments());
    for (long long k = 1; k <= H; ++k) {
      for (const long long h : {k, -k}) {
        const double ft = std::abs(tilde_naive(d, h));
        alpha.offer(h, std::abs(sinc(kPi * static_cast<double>(h) / n)) * ft);
        tilde_max = std::max(tilde_max, ft);
      }
    }
  } else {
    scan_alpha(path, H, alpha, tilde_max);
  }
  MembershipVerdict v = decide(sym, alpha, tilde_max);
  v.checked_h = H;
  v.tail_bound = std::numeric_limits<double>::quiet_NaN();
  return v;
}

PolyPath kloosterman_kind_path(PathKind kind, std::int64_t a, std::int64_t b, std::int64_t p,
                               const RootTable& roots) {
  return kind == PathKind::Plain ? kloosterman_path(a, b, p, roots) : swiss_clock_path(a, b, p, roots);
}

MembershipVerdict published_verdict(PathKind kind, std::int64_t a, std::int64_t b, std::int64_t p,
                                    const RootTable& roots, const DftPlan& plan) {
  const PolyPath path = kloosterman_kind_path(kind, a, b, p, roots);
  if (kind == PathKind::Plain) return check_polygonal(path, plan, Convention::Published);
  const SymmetryReport sym = symmetry_report(path);
  Tracker alpha;
  double tilde_max = 0.0;
  const double kl = path.end().real();
  const double im_half = path.vertex(static_cast<std::size_t>((p - 1) / 2)).imag();
  const double pd = static_cast<double>(p);
  for (std::int64_t h = 1; h < p; ++h) {
    const double x = kPi * static_cast<double>(h) / pd;
    const double ft = std::abs(std::cos(x) * kl + 2.0 * std::sin(x) * im_half);
    tilde_max = std::max(tilde_max, ft);
    alpha.offer(h, std::abs(std::sin(x)) / x * ft);
  }
  MembershipVerdict v = decide(sym, alpha, tilde_max);
  v.checked_h = p - 1;
  v.tail_bound = std::numeric_limits<double>::quiet_NaN();
  return v;
}

namespace {

MembershipVerdict verdict_for(PathKind kind, Convention conv, std::int64_t a, std::int64_t b, std::int64_t p,
                              const RootTable& roots, const DftPlan& plan) {
  if (conv == Convention::Published) return published_verdict(kind, a, b, p, roots, plan);
  return check_polygonal(kloosterman_kind_path(kind, a, b, p, roots), plan);
}

std::size_t kind_segments(PathKind kind, std::int64_t p) {
  return static_cast<std::size_t>(kind == PathKind::Plain ? p - 1 : p);
}

void validate_classify(std::int64_t p, std::int64_t b) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("classify: " + std::to_string(p) + " is not an odd prime");
  if (b % p == 0) throw std::invalid_argument("classify: b must be coprime to p");
}

ClassRow tally(std::int64_t p, const std::vector<MembershipVerdict>& verdicts) {
  ClassRow row{p, 0, 0, 0};
  for (const auto& v : verdicts) {
    if (v.status == Status::InS_Easy) ++row.easy;
    else if (v.status == Status::InS_Hard) ++row.hard;
    else ++row.not_in;
  }
  return row;
}

}  // namespace

std::vector<MembershipVerdict> classify_verdicts(std::int64_t p, std::int64_t b, PathKind kind, Convention conv) {
  validate_classify(p, b);
  const RootTable roots(p);
  const DftPlan plan(kind_segments(kind, p));
  std::vector<MembershipVerdict> out(static_cast<std::size_t>(p - 1));
  // Each a writes only its own slot; roots and plan are read-only.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t a = 1; a < p; ++a) {
    out[static_cast<std::size_t>(a - 1)] = verdict_for(kind, conv, a, b, p, roots, plan);
  }
  return out;
}

std::vector<MembershipVerdict> classify_verdicts_serial(std::int64_t p, std::int64_t b, PathKind kind,
                                                       Convention conv) {
  validate_classify(p, b);
  const RootTable roots(p);
  const DftPlan plan(kind_segments(kind, p));
  std::vector<MembershipVerdict> out;
  out.reserve(static_cast<std::size_t>(p - 1));
  for (std::int64_t a = 1; a < p; ++a) {
    out.push_back(verdict_for(kind, conv, a, b, p, roots, plan));
  }
  return out;
}

ClassRow classify_prime(std::int64_t p, std::int64_t b, PathKind kind, Convention conv) {
  return tally(p, classify_verdicts(p, b, kind, conv));
}

ClassRow classify_prime_serial(std::int64_t p, std::int64_t b, PathKind kind, Convention conv) {
  return tally(p, classify_verdicts_serial(p, b, kind, conv));
}

MembershipVerdict check_alpha_sequence(const AlphaSequence& seq) {
  MembershipVerdict v;
  v.symmetry_ok = true;  // real alpha(h) is the symmetry condition
  v.f1_ok = !exceeds(std::abs(seq.f1));
  Tracker alpha;
  for (const auto& [h, a] : seq.alphas) {
    if (h == 0) throw std::invalid_argument("check_alpha_sequence: h = 0 is carried by f1");
    alpha.offer(h, std::abs(a));
  }
  v.witness_h = alpha.arg;
  v.witness_value = alpha.max;
  v.sinc_profile_max = alpha.max;
  v.tilde_max = alpha.max;
  v.checked_h = seq.listed_cutoff;
  v.borderline = near_bound(std::abs(seq.f1)) || near_bound(alpha.max) ||
                 (seq.tail_bound && near_bound(*seq.tail_bound));
  if (!v.f1_ok || exceeds(alpha.max)) {
    v.status = Status::NotInS;
  } else if (!seq.tail_bound) {
    v.status = Status::Unknown;
    v.tail_bound = std::numeric_limits<double>::quiet_NaN();
  } else {
    v.tail_bound = *seq.tail_bound;
    v.status = exceeds(*seq.tail_bound) ? Status::Unknown : Status::InS_Analytic;
  }
  return v;
}

}  // namespace kloospath
