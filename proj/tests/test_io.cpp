#include "doctest.h"

#include <sstream>

#include "roughdist/io.hpp"

using namespace roughdist;

TEST_CASE("poset parsing") {
  std::istringstream in(
      "# a diamond\n"
      "elements 0 a b 1\n"
      "order 0 <= a\n"
      "order 0 <= b\n"
      "order a <= 1\n"
      "order b <= 1\n");
  auto p = parse_poset(in);
  CHECK(p.size() == 4);
  CHECK(p.leq(0, 3));  // via closure
  CHECK_FALSE(p.comparable(1, 2));

  std::istringstream cyc(
      "elements a b\n"
      "order a <= b\n"
      "order b <= a\n");
  CHECK_THROWS_AS(parse_poset(cyc), ParseError);

  std::istringstream unk(
      "elements a\n"
      "order a <= z\n");
  try {
    parse_poset(unk);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
  }
}

TEST_CASE("gos parsing, pawlak mode") {
  std::istringstream in(
      "universe 1 2 3\n"
      "block 1 2\n"
      "block 3\n"
      "pawlak\n");
  auto g = parse_gos(in);
  CHECK(g.universe_size() == 3);
  CHECK(g.lower(0b001) == 0);
  CHECK(g.upper(0b001) == 0b011);
}

TEST_CASE("gos parsing, explicit tables") {
  std::istringstream in(
      "universe 1 2\n"
      "block 1\n"
      "block 2\n"
      "approx {} {} {}\n"
      "approx {1} {1} {1}\n"
      "approx {2} {2} {2}\n"
      "approx {1,2} {1,2} {1,2}\n");
  auto g = parse_gos(in);
  CHECK(g.lower(0b01) == 0b01);
  CHECK(g.upper(0b11) == 0b11);

  std::istringstream missing(
      "universe 1 2\n"
      "approx {} {} {}\n");
  CHECK_THROWS_AS(parse_gos(missing), ParseError);

  std::istringstream both(
      "universe 1\n"
      "block 1\n"
      "pawlak\n"
      "approx {} {} {}\n"
      "approx {1} {1} {1}\n");
  CHECK_THROWS_AS(parse_gos(both), ParseError);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(render_rational(Rational(3, 6)) == "1/2");
  CHECK(render_rational(Rational(4)) == "4");
}
