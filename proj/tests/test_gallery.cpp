#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kloospath/fourier.hpp"
#include "kloospath/gallery.hpp"
#include "oracles.hpp"

using namespace kloospath;

namespace {

constexpr double kPi = std::numbers::pi;

double listed_alpha(const AlphaSequence& seq, long long h) {
  for (const auto& [k, v] : seq.alphas) {
    if (k == h) return v;
  }
  FAIL("h not listed");
  return 0.0;
}

// Closed-form alpha against the coefficients of the sampled function.
void check_against_samples(const std::string& id, double tol, std::size_t panels = 1u << 16) {
  const auto item = parse_gallery_id(id);
  const auto seq = gallery_alpha(item, 8);
  const auto table = coeff_table(gallery_function(item), 8, panels);
  CHECK(std::abs(table.f1() - seq.f1) < 1e-9);
  for (long long h = -8; h <= 8; ++h) {
    if (h == 0) continue;
    INFO(id << " h=" << h);
    CHECK(std::abs(table(h).alpha - listed_alpha(seq, h)) < tol);
  }
}

}  // namespace

TEST_CASE("pointwise values of the classical functions") {
  CHECK(takagi(0.0) == 0.0);
  CHECK(takagi(0.5) == doctest::Approx(0.5));
  CHECK(takagi(1.0 / 3.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(takagi(0.25) == doctest::Approx(0.5));
  CHECK(cantor(1.0 / 3.0) == doctest::Approx(0.5));
  CHECK(cantor(0.25) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(cantor(1.0) == 1.0);
  CHECK(cantor(0.0) == 0.0);
  CHECK(riemann_rho(0.0) == 0.0);
  CHECK(riemann_rho(1.0) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("arithmetic weights") {
  const int mu[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  const int lam[] = {1, -1, -1, 1, -1, 1, -1, -1, 1, 1, -1, -1};
  for (int n = 1; n <= 12; ++n) {
    CHECK(mobius(n) == mu[n - 1]);
    CHECK(liouville(n) == lam[n - 1]);
  }
  const auto seq = gallery_alpha(parse_gallery_id("davenport"), 30);
  CHECK(listed_alpha(seq, 30) == -1.0);
  CHECK(listed_alpha(seq, 12) == 0.0);
  CHECK(listed_alpha(seq, -7) == 0.0);
}

TEST_CASE("Bessel J1 against its ascending series") {
  for (double x : {-7.5, -1.0, 0.0, 0.3, 2.0, kPi, 10.0, 19.0}) {
    CHECK(bessel_j1(x) == doctest::Approx(oracle::bessel_j1_series(x)).epsilon(1e-10));
  }
  CHECK(std::abs(bessel_j1(256.0 * kPi)) < 0.06);
}

TEST_CASE("closed forms agree with the sampled functions") {
  check_against_samples("line:1.5", 1e-9);
  check_against_samples("parabola:3", 1e-6);
  check_against_samples("semicircle-trig:0.7", 1e-6);
  check_against_samples("semicircle-sqrt:1", 1e-5);
  check_against_samples("takagi", 1e-9);
  check_against_samples("cantor", 1e-4, 3u * 3u * 3u * 3u * 3u * 3u * 3u * 3u * 3u * 3u);
}

TEST_CASE("semicircle coefficients") {
  for (double a : {-1.0, 0.5, 1.0}) {
    for (long long h : {-3, -1, 1, 2, 5}) {
      const auto seq = gallery_alpha(GalleryItem{GalleryId::SemicircleSqrt, a, 1}, 5);
      const cplx alpha = 2.0 * kPi * cplx(0, 1) * static_cast<double>(h) * semicircle_coeff(Semicircle::Sqrt, a, h);
      CHECK(std::abs(alpha - listed_alpha(seq, h)) < 1e-12);
      const auto trig = gallery_alpha(GalleryItem{GalleryId::SemicircleTrig, a, 1}, 5);
      const cplx at = 2.0 * kPi * cplx(0, 1) * static_cast<double>(h) * semicircle_coeff(Semicircle::Trig, a, h);
      CHECK(std::abs(at - listed_alpha(trig, h)) < 1e-12);
    }
  }
}

TEST_CASE("Hilbert curve approximations") {
  CHECK(hilbert_delta(1) == std::vector<int>{1, 0, 0, 3});
  const auto d2 = hilbert_delta(2);
  REQUIRE(d2.size() == 16);
  CHECK(std::vector<int>(d2.begin(), d2.begin() + 4) == std::vector<int>{0, 1, 1, 2});
  CHECK_THROWS_AS(hilbert_delta(0), std::invalid_argument);
  CHECK_THROWS_AS(hilbert_delta(9), std::invalid_argument);
  for (int n = 1; n <= 4; ++n) {
    const auto path = hilbert_path(n);
    CHECK(path.segments() == (1u << (2 * n)));
    CHECK(symmetry_report(path).is_F0);
    const auto tt = tilde_table(path);
    for (long long h : {1LL, 2LL, 4LL, -3LL}) CHECK(std::abs(hilbert_tilde(n, h) - tt(h)) < 1e-12);
  }
}

TEST_CASE("gallery verdicts") {
  const auto status = [](const std::string& id, Convention conv = Convention::Exact) {
    return gallery_verdict(parse_gallery_id(id), conv).status;
  };
  CHECK(status("line:2") == Status::InS_Analytic);
  CHECK(status("line:-2") == Status::InS_Analytic);
  CHECK(status("line:2.5") == Status::NotInS);
  CHECK(status("parabola:6.283185307179586") == Status::InS_Analytic);
  CHECK(status("parabola:6.3") == Status::NotInS);
  CHECK(status("parabola:-6.2") == Status::InS_Analytic);
  for (const char* id : {"semicircle-sqrt:1", "semicircle-sqrt:-1", "semicircle-sqrt:0.4", "semicircle-trig:1",
                         "semicircle-trig:-1", "takagi", "riemann", "cantor", "davenport", "liouville"}) {
    INFO(id);
    CHECK(status(id) == Status::InS_Analytic);
  }
  for (int n = 1; n <= 3; ++n) CHECK(in_support(status("hilbert:" + std::to_string(n), Convention::Published)));
  CHECK(status("hilbert:4", Convention::Published) == Status::NotInS);
}

TEST_CASE("gallery ids") {
  CHECK(gallery_name(parse_gallery_id("hilbert:3")) == "hilbert:3");
  CHECK(parse_gallery_id("line:2").param == 2.0);
  CHECK(parse_gallery_id("line").param == 1.0);
  CHECK(gallery_ids().size() == 10);
  for (const char* bad : {"weierstrass", "line:x", "hilbert:0", "hilbert:9", "hilbert:2.5", "takagi:1", ""}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_gallery_id(bad), std::invalid_argument);
  }
  CHECK_THROWS_AS(gallery_alpha(parse_gallery_id("hilbert:2")), std::invalid_argument);
}

TEST_CASE("gallery functions are in F0") {
  for (const char* id : {"line:2", "parabola:3", "semicircle-sqrt:1", "semicircle-trig:1", "takagi", "cantor",
                         "hilbert:2"}) {
    INFO(id);
    CHECK(symmetry_report(gallery_function(parse_gallery_id(id)), 1025, 1e-8).is_F0);
  }
}
