#pragma once

// Output formats. CSV: UTF-8, LF line ends, '.' decimal point, fixed column order.
// Numbers are written with 17 significant digits so files round-trip.

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "kloospath/faber.hpp"
#include "kloospath/fourier.hpp"
#include "kloospath/membership.hpp"
#include "kloospath/path.hpp"
#include "kloospath/stochastic.hpp"

namespace kloospath {

std::string format_double(double x);

/// Columns t,re,im at the knots.
void write_path_csv(std::ostream& os, const PolyPath& path);
/// Columns t,re,im at the given sample points.
void write_samples_csv(std::ostream& os, std::span<const double> t, std::span<const cplx> z);

/// SVG 1.1 polyline through the points, 1024x768, fitted with a 5% margin,
/// stroke width 1. The imaginary axis points up.
void write_svg(std::ostream& os, std::span<const cplx> points);

/// Columns h,re_fhat,im_fhat,re_alpha,im_alpha for h = -H..-1, 1..H.
void write_coeff_csv(std::ostream& os, const CoeffTable& table);

/// {p, a, b, kind, status, witness_h, witness_value, borderline}; witness_h is null when absent.
nlohmann::json verdict_json(std::int64_t p, std::int64_t a, std::int64_t b, PathKind kind,
                            const MembershipVerdict& v);
/// Verdict record for a gallery item: {id, status, witness_h, witness_value, borderline, f1_ok, symmetry_ok}.
nlohmann::json gallery_verdict_json(const std::string& id, const MembershipVerdict& v);

/// Header p,count_easy,count_hard,count_not then one row per entry.
void write_classification_csv(std::ostream& os, std::span<const ClassRow> rows);
nlohmann::json classification_json(std::span<const ClassRow> rows, PathKind kind, std::int64_t b,
                                   Convention conv);

/// {f_id, eps, N, trials, seed, frequency}.
nlohmann::json mc_json(const std::string& f_id, double eps, int N, std::int64_t trials, std::uint64_t seed,
                       double frequency);

/// Columns t,phi.
void write_phi_csv(std::ostream& os, const SymmetricHomeo& phi);

}  // namespace kloospath
