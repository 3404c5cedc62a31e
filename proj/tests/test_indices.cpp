#include "doctest.h"

#include <cmath>
#include <random>

#include "roughdist/indices.hpp"

using namespace roughdist;

TEST_CASE("nu table") {
  ApproximationPair a{0b00, 0b11};
  CHECK(nu(a, a) == NuValue::Zero);
  CHECK(nu(a, {0b100, 0b1100}) == NuValue::One);
  CHECK(nu(a, {0b00, 0b111}) == NuValue::InvE);
  CHECK(nu(a, {0b01, 0b11}) == NuValue::InvPi);

  // symmetry over random pairs
  std::mt19937 rng(41);
  for (int t = 0; t < 500; ++t) {
    ApproximationPair x{Subset(rng() % 16), Subset(rng() % 16)};
    ApproximationPair y{Subset(rng() % 16), Subset(rng() % 16)};
    CHECK(nu(x, y) == nu(y, x));
  }
}

TEST_CASE("iota") {
  ApproximationPair p{0b00, 0b11};
  auto same = iota({p, p, p});
  CHECK(same.c1 == 0);
  CHECK(same.c_pi == 0);
  CHECK(same.c_e == 0);
  CHECK(same.c0 == 9);
  CHECK(same.numeric() == 0.0);

  auto both = iota({{0b00, 0b11}, {0b100, 0b1100}});
  CHECK(both.c1 == 2);
  CHECK(both.numeric() == 2.0);

  auto uppers = iota({{0b00, 0b11}, {0b00, 0b111}});
  CHECK(uppers.c_e == 2);
  CHECK(uppers.numeric() == doctest::Approx(2 / std::exp(1)).epsilon(1e-12));
}

TEST_CASE("iota star") {
  SymbolicIndex zero{0, 0, 0, 0};
  CHECK(iota_star(zero, 5, 2).numeric() == 0.0);

  SymbolicIndex two{2, 2, 0, 0};
  auto rel = iota_star(two, 4, 2);
  CHECK(rel.q1 == Rational(1, 2));
  CHECK(rel.numeric() == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(iota_star(two, 3, 3), IndexError);
}

TEST_CASE("iota bounds and permutation invariance") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t count = 1 + rng() % 8;
    std::vector<ApproximationPair> pairs;
    for (std::size_t i = 0; i < count; ++i)
      pairs.push_back({Subset(rng() % 32), Subset(rng() % 32)});
    auto idx = iota(pairs);
    double v = idx.numeric();
    CHECK(v >= 0.0);
    CHECK(v <= double(count * count));
    CHECK(idx.pair_count() == Integer(count * count));

    auto shuffled = pairs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto idx2 = iota(shuffled);
    CHECK(idx.c0 == idx2.c0);
    CHECK(idx.c1 == idx2.c1);
    CHECK(idx.c_pi == idx2.c_pi);
    CHECK(idx.c_e == idx2.c_e);

    // iota = 0 exactly when all pairs coincide
    bool all_same = true;
    for (const auto& p : pairs)
      if (!(p == pairs[0])) all_same = false;
    CHECK((v == 0.0) == all_same);
  }
}

TEST_CASE("iota agrees with a direct double loop on a Pawlak oracle") {
  auto g = GranularOperatorSpace::pawlak({"1", "2", "3"}, {0b011, 0b100});
  auto inst = build_framework(g);
  std::vector<ApproximationPair> pairs;
  for (Subset x : inst.rough) pairs.push_back({g.lower(x), g.upper(x)});
  auto idx = iota(pairs);

  double direct = 0;
  for (const auto& a : pairs)
    for (const auto& b : pairs) {
      bool le = a.lower == b.lower, ue = a.upper == b.upper;
      if (!le && !ue) direct += 1;
      else if (!le) direct += 1 / std::acos(-1.0);
      else if (!ue) direct += 1 / std::exp(1.0);
    }
  CHECK(idx.numeric() == doctest::Approx(direct).epsilon(1e-12));
  // two classes of two mutually-equal pairs: 8 diagonal-ish, 8 full disagreements
  CHECK(idx.c0 == 8);
  CHECK(idx.c1 == 8);
}
