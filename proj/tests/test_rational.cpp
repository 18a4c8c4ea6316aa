#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdb/rational.hpp"

using qdb::Rational;

TEST_CASE("rationals reduce and normalize signs") {
  CHECK(Rational(8, 6) == Rational(4, 3));
  CHECK(Rational(8, 6).num() == 4);
  CHECK(Rational(8, 6).den() == 3);
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4).num() == -1);
  CHECK(Rational(0, 5) == Rational());
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("comparisons are exact") {
  CHECK(Rational(8, 7) != Rational(7, 6));
  CHECK(Rational(8, 7) < Rational(7, 6));
  CHECK(Rational(3, 1) > Rational(1, 1));
  CHECK(Rational(10, 5) == Rational(2, 1));
  CHECK(Rational(7, 5).str() == "7/5");
  CHECK(Rational(3, 1).str() == "3/1");
}
