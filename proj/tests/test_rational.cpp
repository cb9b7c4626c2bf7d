#include "umac/rational.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace umac;
using Catch::Approx;

TEST_CASE("parse and print exact rationals", "[rational]") {
  CHECK(parse_rational("7/10") == Rational(7, 10));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(to_string(Rational(11, 20)) == "11/20");
  CHECK(to_string(Rational(4, 2)) == "2");
  for (const char* bad : {"", "0.5", "1/0", "a/b", "1/2/3"})
    CHECK_THROWS_AS(parse_rational(bad), ConfigError);
}

TEST_CASE("mixed int comparisons terminate and are exact", "[rational]") {
  CHECK(Rational(1, 2) < 1);
  CHECK(1 == Rational(2, 2));
  CHECK(Rational(3, 2) >= 1);
  CHECK(0 != Rational(1, 3));
}

TEST_CASE("mod reduces into [0, m)", "[rational]") {
  CHECK(mod(Rational(-1, 2), 2) == Rational(3, 2));
  CHECK(mod(Rational(7, 3), 2) == Rational(1, 3));
  CHECK(mod(Rational(4), 2) == Rational(0));
}

TEST_CASE("sin_pi has exact zeros and matches std::sin", "[rational]") {
  for (int k = -6; k <= 6; ++k) CHECK(sin_pi<double>(Rational(k)) == 0.0);
  CHECK(sin_pi<double>(Rational(1, 2)) == 1.0);
  CHECK(sin_pi<double>(Rational(-1, 2)) == -1.0);
  CHECK(sin_pi<double>(Rational(1, 6)) == Approx(0.5).epsilon(1e-15));
  for (int p = -50; p <= 50; ++p)
    for (int q : {3, 7, 10, 13}) {
      const Rational r(p, q);
      CHECK(std::abs(sin_pi<double>(r) - std::sin(std::numbers::pi * p / q)) < 1e-14);
      CHECK(std::abs(static_cast<double>(sin_pi<long double>(r)) - sin_pi<double>(r)) < 1e-15);
    }
}

TEST_CASE("unit_phase lands on the circle", "[rational]") {
  const auto i = unit_phase(Rational(1, 4));
  CHECK(std::abs(i - std::complex<double>(0, 1)) < 1e-15);
  for (int p = 0; p < 30; ++p) CHECK(std::abs(std::abs(unit_phase(Rational(p, 17))) - 1.0) < 1e-15);
}

TEST_CASE("vector helpers", "[rational]") {
  const QVec a{Rational(1), Rational(1, 2)}, b{Rational(2), Rational(-1)};
  CHECK(inner(a, b) == Rational(3, 2));
  CHECK(add(a, b) == QVec{Rational(3), Rational(-1, 2)});
  CHECK(sub(a, b) == QVec{Rational(-1), Rational(3, 2)});
  CHECK(scaled(a, Rational(2)) == QVec{Rational(2), Rational(1)});
}
