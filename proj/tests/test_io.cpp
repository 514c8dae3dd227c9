#include <doctest.h>

#include <sstream>

#include "kloospath/io.hpp"

using namespace kloospath;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
  for (double x : {0.0, 1.0, -0.1, 1.0 / 3.0, 1e-300, 6.02214076e23}) CHECK(std::stod(format_double(x)) == x);
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("path CSV") {
  std::ostringstream os;
  write_path_csv(os, PolyPath({0.0, cplx(0.5, -1.0), 1.0}));
  const auto l = lines(os.str());
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "t,re,im");
  CHECK(l[1] == "0,0,0");
  CHECK(l[2] == "0.5,0.5,-1");
  CHECK(l[3] == "1,1,0");
  CHECK(os.str().find('\r') == std::string::npos);
  std::ostringstream bad;
  const std::vector<double> t{0.0};
  CHECK_THROWS_AS(write_samples_csv(bad, t, std::vector<cplx>{}), std::invalid_argument);
}

TEST_CASE("SVG") {
  std::ostringstream os;
  const std::vector<cplx> pts{0.0, cplx(1, 1), cplx(2, 0)};
  write_svg(os, pts);
  const auto s = os.str();
  CHECK(s.find("<svg") != std::string::npos);
  CHECK(s.find("width=\"1024\"") != std::string::npos);
  CHECK(s.find("<polyline") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
  // Leftmost point sits at the 5% margin; the imaginary axis points up.
  CHECK(s.find("points=\"51.2000,") != std::string::npos);
  CHECK_THROWS_AS(write_svg(os, std::vector<cplx>{}), std::invalid_argument);
}

TEST_CASE("coefficient CSV") {
  const auto table = coeff_table(kloosterman_path(1, 1, 5), 2);
  std::ostringstream os;
  write_coeff_csv(os, table);
  const auto l = lines(os.str());
  REQUIRE(l.size() == 5);
  CHECK(l[0] == "h,re_fhat,im_fhat,re_alpha,im_alpha");
  CHECK(l[1].rfind("-2,", 0) == 0);
  CHECK(l[4].rfind("2,", 0) == 0);
}

TEST_CASE("JSON records") {
  MembershipVerdict v;
  v.status = Status::NotInS;
  v.witness_h = -3;
  v.witness_value = 2.5;
  const auto j = verdict_json(19, 8, 1, PathKind::Plain, v);
  CHECK(j["status"] == "NotInS");
  CHECK(j["witness_h"] == -3);
  CHECK(j["kind"] == "plain");
  CHECK(j["borderline"] == false);
  v.witness_h.reset();
  CHECK(verdict_json(19, 8, 1, PathKind::Plain, v)["witness_h"].is_null());
  const auto g = gallery_verdict_json("takagi", v);
  CHECK(g["id"] == "takagi");

  const std::vector<ClassRow> rows{{5, 4, 0, 0}, {7, 6, 0, 0}};
  const auto c = classification_json(rows, PathKind::SwissClock, 1, Convention::Published);
  CHECK(c["rows"].size() == 2);
  CHECK(c["rows"][0]["count_easy"] == 4);
  CHECK(c["convention"] == "published");
  std::ostringstream os;
  write_classification_csv(os, rows);
  CHECK(os.str() == "p,count_easy,count_hard,count_not\n5,4,0,0\n7,6,0,0\n");

  const auto m = mc_json("zero", 0.5, 128, 10000, 7, 0.25);
  CHECK(m["seed"] == 7);
  CHECK(m["frequency"] == 0.25);
}

TEST_CASE("phi CSV") {
  std::ostringstream os;
  write_phi_csv(os, SymmetricHomeo::identity());
  CHECK(os.str() == "t,phi\n0,0\n1,1\n");
}
