#include "kloospath/io.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace kloospath {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_path_csv(std::ostream& os, const PolyPath& path) {
  const auto t = path.knots();
  const auto z = path.vertices();
  write_samples_csv(os, t, z);
}

void write_samples_csv(std::ostream& os, std::span<const double> t, std::span<const cplx> z) {
  if (t.size() != z.size()) throw std::invalid_argument("write_samples_csv: size mismatch");
  os << "t,re,im\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << format_double(t[i]) << ',' << format_double(z[i].real()) << ',' << format_double(z[i].imag()) << '\n';
  }
}

void write_svg(std::ostream& os, std::span<const cplx> points) {
  if (points.empty()) throw std::invalid_argument("write_svg: no points");
  constexpr double W = 1024.0, H = 768.0, margin = 0.05;
  double xmin = points[0].real(), xmax = xmin, ymin = points[0].imag(), ymax = ymin;
  for (const cplx& z : points) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  }
  const double spanx = std::max(xmax - xmin, 1e-12);
  const double spany = std::max(ymax - ymin, 1e-12);
  // Same scale on both axes so shapes are not distorted.
  const double scale = std::min(W * (1 - 2 * margin) / spanx, H * (1 - 2 * margin) / spany);
  const double ox = (W - scale * spanx) / 2.0, oy = (H - scale * spany) / 2.0;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1024\" height=\"768\" "
        "viewBox=\"0 0 1024 768\">\n"
     << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
  char buf[64];
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double x = ox + (points[i].real() - xmin) * scale;
    const double y = H - (oy + (points[i].imag() - ymin) * scale);
    std::snprintf(buf, sizeof buf, "%s%.4f,%.4f", i ? " " : "", x, y);
    os << buf;
  }
  os << "\"/>\n</svg>\n";
}

void write_coeff_csv(std::ostream& os, const CoeffTable& table) {
  os << "h,re_fhat,im_fhat,re_alpha,im_alpha\n";
  const long long H = table.cutoff();
  for (long long h = -H; h <= H; ++h) {
    if (h == 0) continue;
    const auto& e = table(h);
    os << h << ',' << format_double(e.fhat.real()) << ',' << format_double(e.fhat.imag()) << ','
       << format_double(e.alpha.real()) << ',' << format_double(e.alpha.imag()) << '\n';
  }
}

namespace {

void put_witness(nlohmann::json& j, const MembershipVerdict& v) {
  j["status"] = to_string(v.status);
  j["witness_h"] = v.witness_h ? nlohmann::json(*v.witness_h) : nlohmann::json(nullptr);
  j["witness_value"] = v.witness_value;
  j["borderline"] = v.borderline;
}

}  // namespace

nlohmann::json verdict_json(std::int64_t p, std::int64_t a, std::int64_t b, PathKind kind,
                            const MembershipVerdict& v) {
  nlohmann::json j;
  j["p"] = p;
  j["a"] = a;
  j["b"] = b;
  j["kind"] = to_string(kind);
  put_witness(j, v);
  return j;
}

nlohmann::json gallery_verdict_json(const std::string& id, const MembershipVerdict& v) {
  nlohmann::json j;
  j["id"] = id;
  put_witness(j, v);
  j["f1_ok"] = v.f1_ok;
  j["symmetry_ok"] = v.symmetry_ok;
  return j;
}

void write_classification_csv(std::ostream& os, std::span<const ClassRow> rows) {
  os << "p,count_easy,count_hard,count_not\n";
  for (const auto& r : rows) os << r.p << ',' << r.easy << ',' << r.hard << ',' << r.not_in << '\n';
}

nlohmann::json classification_json(std::span<const ClassRow> rows, PathKind kind, std::int64_t b,
                                   Convention conv) {
  nlohmann::json out;
  out["kind"] = to_string(kind);
  out["b"] = b;
  out["convention"] = to_string(conv);
  out["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    out["rows"].push_back({{"p", r.p}, {"count_easy", r.easy}, {"count_hard", r.hard}, {"count_not", r.not_in}});
  }
  return out;
}

nlohmann::json mc_json(const std::string& f_id, double eps, int N, std::int64_t trials, std::uint64_t seed,
                       double frequency) {
  return {{"f_id", f_id}, {"eps", eps}, {"N", N}, {"trials", trials}, {"seed", seed}, {"frequency", frequency}};
}

void write_phi_csv(std::ostream& os, const SymmetricHomeo& phi) {
  os << "t,phi\n";
  for (std::size_t k = 0; k < phi.knots().size(); ++k) {
    os << format_double(phi.knots()[k]) << ',' << format_double(phi.values()[k]) << '\n';
  }
}

}  // namespace kloospath
