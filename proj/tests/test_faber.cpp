#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kloospath/faber.hpp"
#include "kloospath/gallery.hpp"
#include "kloospath/membership.hpp"

using namespace kloospath;

TEST_CASE("Schauder tents") {
  CHECK(schauder_tent(0, 1, 0.5) == 1.0);
  CHECK(schauder_tent(0, 1, 0.25) == 0.5);
  CHECK(schauder_tent(1, 2, 0.75) == 1.0);
  CHECK(schauder_tent(1, 2, 0.25) == 0.0);
  CHECK(schauder_tent(2, 1, 0.0) == 0.0);
}

TEST_CASE("Faber-Schauder coefficients") {
  const PathFn line = [](double t) { return cplx(t, 0.0); };
  const auto fl = faber_coefficients(line, 6);
  for (int m = 0; m < 6; ++m) {
    for (int j = 1; j <= (1 << m); ++j) CHECK(std::abs(fl.coefficient(m, j)) < 1e-15);
  }
  const PathFn tak = [](double t) { return cplx(takagi(t), 0.0); };
  const auto ft = faber_coefficients(tak, 8);
  CHECK(ft.coefficient(0, 1) == cplx(0.5));
  for (int m = 0; m < 8; ++m) CHECK(std::abs(ft.coefficient(m, 1) - std::ldexp(1.0, -m - 1)) < 1e-15);
  const PathFn spike = [](double t) { return cplx(0.0, 1.0 - std::abs(2.0 * t - 1.0)); };
  CHECK(faber_coefficients(spike, 3).coefficient(0, 1) == cplx(0, 1));
  CHECK_THROWS_AS(ft.coefficient(8, 1), std::out_of_range);
  CHECK_THROWS_AS(ft.coefficient(1, 3), std::out_of_range);
  CHECK_THROWS_AS(faber_coefficients(line, 21), std::invalid_argument);
}

TEST_CASE("Faber-Schauder reconstruction is exact on the dyadic grid") {
  const PathFn f = [](double t) { return cplx(std::sin(5 * t) + 0.3, t * t * t); };
  const int depth = 7;
  const auto fe = faber_coefficients(f, depth);
  for (int k = 0; k <= (1 << depth); ++k) {
    const double t = std::ldexp(k, -depth);
    CHECK(std::abs(fe.evaluate(t) - f(t)) < 1e-12);
  }
  CHECK(std::abs(fe.evaluate(0.3) - f(0.3)) < 1e-3);
}

TEST_CASE("symmetric homeomorphisms") {
  const auto id = SymmetricHomeo::identity();
  CHECK(id(0.3) == doctest::Approx(0.3));
  const auto phi = SymmetricHomeo::dyadic(2, {0.1});
  CHECK(phi(0.25) == doctest::Approx(0.1));
  CHECK(phi(0.75) == doctest::Approx(0.9));
  CHECK(phi(0.5) == 0.5);
  for (double t : {0.05, 0.2, 0.4, 0.6, 0.93}) CHECK(phi(1.0 - t) == doctest::Approx(1.0 - phi(t)));
  CHECK_THROWS_AS(SymmetricHomeo({0.0, 0.5, 1.0}, {0.0, 0.4, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricHomeo({0.0, 0.5, 1.0}, {0.0, 0.5, 0.9}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricHomeo({0.0, 0.25, 0.75, 1.0}, {0.0, 0.6, 0.4, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(SymmetricHomeo::dyadic(2, {0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(phi(1.5), std::domain_error);
}

TEST_CASE("composition keeps F0 and the midpoint coefficient") {
  const PathFn spike = [](double t) { return cplx(0.0, 1.0 - std::abs(2.0 * t - 1.0)); };
  const auto phi = SymmetricHomeo::dyadic(3, {0.05, 0.2, 0.3});
  const auto g = compose(spike, phi);
  CHECK(symmetry_report(g).is_F0);
  CHECK(std::abs(g(0.125) - spike(0.05)) < 1e-15);
  // phi fixes 0, 1/2, 1, so beta(0,1) does not change.
  CHECK(faber_coefficients(g, 4).coefficient(0, 1) == faber_coefficients(spike, 4).coefficient(0, 1));
}

TEST_CASE("reparametrization search") {
  const PathFn line = [](double t) { return cplx(2.0 * t, 0.0); };
  const auto r = reparam_search(line);
  CHECK(r.success);
  CHECK(r.achieved < 1e-12);
  CHECK(r.evaluations == 1);

  // Antisymmetric pulse of height 3 about t = 1/2.
  const PathFn pulse = [](double t) {
    const double x = t < 0.5 ? t : 1.0 - t;
    const double v = 3.0 * std::max(0.0, 1.0 - std::abs(8.0 * x - 2.0));
    return cplx(t < 0.5 ? v : -v, 0.0);
  };
  ReparamOptions opts;
  opts.budget = 150;
  opts.H = 16;
  opts.panels = 1024;
  const auto rp = reparam_search(pulse, opts);
  CHECK(rp.achieved <= rp.initial);
  CHECK(rp.evaluations <= 150);
  CHECK(rp.achieved == doctest::Approx(reparam_objective(compose(pulse, rp.phi), 16, 1024)));

  // The parabola with height parameter 7 is outside the support; a symmetric
  // reparametrization brings its first coefficients under 1/pi.
  const auto item = parse_gallery_id("parabola:7");
  CHECK(gallery_verdict(item).status == Status::NotInS);
  ReparamOptions popts;
  popts.level = 6;
  popts.budget = 500;
  const auto pr = reparam_search(gallery_function(item), popts);
  CHECK(pr.initial > 1.0 / std::numbers::pi);
  CHECK(pr.success);
  CHECK(pr.achieved <= 1.0 / std::numbers::pi + 1e-9);
}
