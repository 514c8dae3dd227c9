#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kloospath/membership.hpp"
#include "oracles.hpp"

using namespace kloospath;

TEST_CASE("status strings and support") {
  CHECK(to_string(Status::InS_Easy) == "InS_Easy");
  CHECK(to_string(Status::NotInS) == "NotInS");
  CHECK(in_support(Status::InS_Hard));
  CHECK(in_support(Status::InS_Analytic));
  CHECK_FALSE(in_support(Status::NotInS));
  CHECK_FALSE(in_support(Status::Unknown));
  CHECK(to_string(Convention::Published) == "published");
  CHECK(to_string(PathKind::SwissClock) == "swiss");
}

TEST_CASE("first counterexamples") {
  const auto plain = check_polygonal(kloosterman_path(8, 1, 19));
  CHECK(plain.status == Status::NotInS);
  REQUIRE(plain.witness_h.has_value());
  CHECK(plain.witness_value > 2.0);
  CHECK(check_polygonal(swiss_clock_path(8, 1, 17)).status == Status::NotInS);
  const RootTable r17(17);
  const DftPlan d17(17);
  CHECK(published_verdict(PathKind::SwissClock, 8, 1, 17, r17, d17).status == Status::NotInS);
  for (std::int64_t p : {3, 5, 7, 11, 13, 17}) {
    for (std::int64_t a = 1; a < p; ++a) CHECK(in_support(check_polygonal(kloosterman_path(a, 1, p)).status));
  }
}

TEST_CASE("residue reduction agrees with the brute force check") {
  for (std::int64_t p : {5, 7, 13}) {
    for (std::int64_t a = 1; a < p; ++a) {
      for (auto kind : {PathKind::Plain, PathKind::SwissClock}) {
        const auto path = kloosterman_kind_path(kind, a, 1, p, RootTable(p));
        const auto fast = check_polygonal(path);
        const auto n = static_cast<long long>(path.segments());
        const auto slow = brute_force_verdict(path, 2 * n * n);
        CHECK(in_support(fast.status) == in_support(slow.status));
        CHECK(fast.sinc_profile_max == doctest::Approx(slow.sinc_profile_max).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("general knot spacing agrees with the equally spaced check") {
  for (std::int64_t a = 1; a < 19; ++a) {
    const auto path = kloosterman_path(a, 1, 19);
    const auto eq = check_polygonal(path);
    const auto gen = check_polygonal_general(path);
    CHECK(in_support(eq.status) == in_support(gen.status));
    CHECK(gen.sinc_profile_max == doctest::Approx(eq.sinc_profile_max).epsilon(1e-9));
  }
}

TEST_CASE("padded constructions are in the support") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 19, 23, 29}) {
    for (std::int64_t a = 1; a < p; ++a) {
      CHECK(in_support(check_polygonal_general(padded_kloosterman_path(a, 1, p)).status));
      CHECK(in_support(check_polygonal_general(padded_birch_path(a, p)).status));
    }
    // Reflection symmetry needs chi(-1) = 1.
    const auto v = check_polygonal_general(padded_character_path(p));
    CHECK(in_support(v.status) == (p % 4 == 1));
    CHECK(v.symmetry_ok == (p % 4 == 1));
  }
}

TEST_CASE("simple polygons") {
  // A straight segment from 0 to 2 sits on the boundary value f(1) = 2.
  const auto seg = check_polygonal(PolyPath({0.0, 1.0, 2.0}));
  CHECK(in_support(seg.status));
  CHECK(seg.f1_ok);
  CHECK(check_polygonal(PolyPath({0.0, 2.5})).status == Status::NotInS);
  // Not reflection symmetric.
  const auto bent = check_polygonal(PolyPath({0.0, cplx(0, 1), cplx(1, 1)}));
  CHECK(bent.status == Status::NotInS);
  CHECK_FALSE(bent.symmetry_ok);
  CHECK_THROWS_AS(check_polygonal(PolyPath({0.0, 1.0, 0.0}, {0.0, 0.2, 1.0})), std::invalid_argument);
}

TEST_CASE("decision boundary tolerance") {
  AlphaSequence seq;
  seq.f1 = 0.0;
  seq.alphas = {{1, 2.0 + 5e-10}, {-1, 1.0}};
  seq.tail_bound = 0.0;
  auto v = check_alpha_sequence(seq);
  CHECK(v.status == Status::InS_Analytic);
  CHECK(v.borderline);
  seq.alphas[0].second = 2.0 + 2e-9;
  v = check_alpha_sequence(seq);
  CHECK(v.status == Status::NotInS);
  REQUIRE(v.witness_h.has_value());
  CHECK(*v.witness_h == 1);
  seq.alphas[0].second = 1.0;
  seq.tail_bound = 3.0;
  CHECK(check_alpha_sequence(seq).status != Status::InS_Analytic);
  seq.tail_bound.reset();
  CHECK(check_alpha_sequence(seq).status != Status::InS_Analytic);
}

TEST_CASE("parallel classification equals the serial reference") {
  for (auto kind : {PathKind::Plain, PathKind::SwissClock}) {
    for (auto conv : {Convention::Exact, Convention::Published}) {
      for (std::int64_t p : {13, 29, 101}) {
        CHECK(classify_prime(p, 1, kind, conv) == classify_prime_serial(p, 1, kind, conv));
        const auto a = classify_verdicts(p, 1, kind, conv);
        const auto b = classify_verdicts_serial(p, 1, kind, conv);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          CHECK(a[i].status == b[i].status);
          CHECK(a[i].witness_value == b[i].witness_value);
        }
      }
    }
  }
}

TEST_CASE("small table rows") {
  CHECK(classify_prime(5, 1, PathKind::Plain, Convention::Published) == ClassRow{5, 4, 0, 0});
  CHECK(classify_prime(13, 1, PathKind::Plain, Convention::Published) == ClassRow{13, 9, 3, 0});
  CHECK(classify_prime(19, 1, PathKind::Plain, Convention::Published) == ClassRow{19, 1, 14, 3});
  CHECK(classify_prime(29, 1, PathKind::SwissClock, Convention::Published) == ClassRow{29, 26, 2, 0});
  CHECK(classify_prime(17, 1, PathKind::SwissClock, Convention::Exact) == ClassRow{17, 6, 4, 6});
  CHECK_THROWS_AS(classify_prime(15, 1, PathKind::Plain), std::invalid_argument);
}

TEST_CASE("the published convention is weaker than the exact criterion") {
  // Whatever passes the full criterion also passes the h >= 1 restriction.
  for (std::int64_t p : {23, 29, 101}) {
    const auto ex = classify_verdicts(p, 1, PathKind::Plain, Convention::Exact);
    const auto pub = classify_verdicts(p, 1, PathKind::Plain, Convention::Published);
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (in_support(ex[i].status)) CHECK(in_support(pub[i].status));
    }
  }
}
