#include "doctest.h"

#include <random>

#include "roughdist/feasibility.hpp"

using namespace roughdist;

TEST_CASE("case 0") {
  CHECK(case0_k(2) == Integer(1));
  CHECK(case0_k(6) == Integer(2));  // (sqrt(25)-1)/2
  CHECK_FALSE(case0_k(7).has_value());
  CHECK_FALSE(case0_k(0).has_value());

  // present iff n = k^2 + k, cross-checked by substitution
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    auto k = case0_k(n);
    bool expected = false;
    for (std::uint64_t c = 1; c * c + c <= n; ++c)
      if (c * c + c == n) expected = true;
    CHECK(k.has_value() == expected);
    if (k) CHECK(*k * *k + *k == Integer(n));
  }
}

TEST_CASE("case 1") {
  CHECK(case1_k(4) == Integer(2));
  CHECK(case1_k(9) == Integer(3));
  CHECK_FALSE(case1_k(5).has_value());

  for (std::uint64_t n = 1; n <= 20000; ++n) {
    auto k = case1_k(n);
    if (k) {
      CHECK(Integer(n) - *k == *k * *k - *k);  // n - k = k^2 - k
    } else {
      std::uint64_t s = isqrt_floor_u64(n);
      CHECK(s * s != n);
    }
  }
}

TEST_CASE("power-set models") {
  auto models = case1_powerset_models(16);
  REQUIRE(models.size() == 3);
  CHECK(models[0].x == 0);
  CHECK(models[0].k == 1);
  CHECK(models[0].n == 1);
  CHECK(models[1].x == 2);
  CHECK(models[1].k == 2);
  CHECK(models[1].n == 4);
  CHECK(models[2].x == 4);
  CHECK(models[2].k == 4);
  CHECK(models[2].n == 16);

  CHECK(case1_powerset_models(3).size() == 1);

  // every emitted model satisfies 2^x = k^2 exactly
  for (const auto& m : case1_powerset_models(Integer(100000000))) {
    CHECK((Integer(1) << m.x) == m.k * m.k);
    CHECK(m.n == (Integer(1) << m.x));
  }
}

TEST_CASE("case 2 admissible ks") {
  auto report = case2_admissible_ks(9, 1);
  REQUIRE(report.admissible.size() == 1);
  CHECK(report.admissible[0].k == 3);
  CHECK(*report.admissible[0].pi == Rational(1));

  // n = 100, alpha = 1/2: compare against a direct rational scan
  auto r100 = case2_admissible_ks(100, Rational(1, 2));
  std::vector<Integer> expected;
  for (Integer k = 2; k <= 14; ++k) {
    Rational pi(Integer(100) - k, k * k - k);
    if (pi > 0 && pi <= Rational(1, 2)) expected.push_back(k);
  }
  REQUIRE(r100.admissible.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(r100.admissible[i].k == expected[i]);

  CHECK_THROWS_AS(case2_admissible_ks(2, 1), FeasibilityError);
  CHECK_THROWS_AS(case2_admissible_ks(9, 2), FeasibilityError);
}

TEST_CASE("case 2 candidate range matches the published figure") {
  auto report = case2_admissible_ks(1000000, Rational(1, 2));
  CHECK(report.k_max == 1414);
  CHECK(report.candidate_count == 1413);
}

TEST_CASE("case 2 k from pi") {
  CHECK(case2_k_from_pi(9, 1) == std::vector<Integer>{3});
  CHECK(case2_k_from_pi(12, Rational(1, 2)).empty());  // discriminant 97
  CHECK(case2_k_from_pi(17, Rational(1, 2)).empty());

  // matched (n, pi, k) triples from an exhaustive small scan
  for (Integer n = 3; n <= 200; ++n) {
    for (Integer k = 2; k * k <= n; ++k) {
      Rational pi(n - k, k * k - k);
      if (pi <= 0 || pi > 1) continue;
      auto ks = case2_k_from_pi(n, pi);
      REQUIRE(ks.size() == 1);
      CHECK(ks[0] == k);
    }
  }
}

TEST_CASE("case 2 round trip over a grid") {
  for (Integer n = 3; n <= 2000; ++n)
    for (Integer k = 2; k <= isqrt_floor(n); ++k) {
      Rational pi(n - k, k * k - k);
      if (pi <= 0 || pi > 1) continue;
      auto ks = case2_k_from_pi(n, pi);
      bool found = false;
      for (const auto& c : ks)
        if (c == k) found = true;
      CHECK(found);
    }
}

TEST_CASE("case 2 value counts") {
  CHECK(case2_count_values(1000000, Rational(1, 2), false) == 1413);
  CHECK(case2_count_values(1000000, Rational(1, 2), true) == 999);
  CHECK(case2_count_values(4, 1, false) == 1);
  CHECK(case2_count_values(4, 1, true) == 1);
  // strict reading: only exactly-admissible k
  CHECK(case2_count_values(9, 1, false, true) == 1);
}

TEST_CASE("alpha scan") {
  auto entries = alpha_scan(9, AlphaScanRange::OpenRoot);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].k == 2);
  CHECK(entries[0].alpha == Rational(7, 2));
  CHECK_FALSE(entries[0].admissible);

  auto extended = alpha_scan(9, AlphaScanRange::TheoremBound);
  REQUIRE(extended.size() == 2);
  CHECK(extended[1].k == 3);
  CHECK(extended[1].alpha == Rational(1));
  CHECK(extended[1].admissible);

  auto e12 = alpha_scan(12, AlphaScanRange::TheoremBound);
  CHECK(e12[0].alpha == Rational(5));
  CHECK_FALSE(e12[0].admissible);
  CHECK(e12[1].alpha == Rational(3, 2));
  CHECK_FALSE(e12[1].admissible);

  CHECK_THROWS_AS(alpha_scan(3, AlphaScanRange::OpenRoot), FeasibilityError);
}

TEST_CASE("alpha refinement") {
  AlphaSearchConfig config;
  config.grid_n = 10;
  config.epsilon = Rational(1, 1000000);
  config.max_rounds = 10;

  auto bracket_for = [](const Rational& target) {
    return [target](const Rational& lo, const Rational& hi) {
      return lo <= target && target <= hi;
    };
  };

  auto half = alpha_refine(bracket_for(Rational(1, 2)), config);
  REQUIRE(half.has_value());
  CHECK(*half == Rational(1, 2));  // exact grid hit, round 1

  auto third = alpha_refine(bracket_for(Rational(1, 3)), config);
  REQUIRE(third.has_value());
  Rational err = *third - Rational(1, 3);
  if (err < 0) err = -err;
  CHECK(err < Rational(1, 1000000));

  // predicate never true
  config.max_rounds = 5;
  auto never = alpha_refine([](const Rational&, const Rational&) { return false; }, config);
  CHECK_FALSE(never.has_value());

  AlphaSearchConfig bad;
  bad.grid_n = 1;
  bad.epsilon = Rational(1, 10);
  CHECK_THROWS_AS(alpha_refine(bracket_for(Rational(1, 2)), bad), FeasibilityError);
}

TEST_CASE("alpha refinement terminates quickly on random rational targets") {
  std::mt19937_64 rng(99);
  AlphaSearchConfig config;
  config.grid_n = 10;
  config.epsilon = Rational(1, 1000000);
  config.max_rounds = 7;
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t den = 2 + rng() % 999999;
    std::uint64_t num = 1 + rng() % (den - 1);
    Rational target{Integer(num), Integer(den)};
    auto found = alpha_refine(
        [&](const Rational& lo, const Rational& hi) { return lo <= target && target <= hi; },
        config);
    REQUIRE(found.has_value());
    Rational err = *found - target;
    if (err < 0) err = -err;
    CHECK(err < Rational(1, 1000000));
  }
}
