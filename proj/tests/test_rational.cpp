#include <catch2/catch_amalgamated.hpp>
#include <latpoly/rational.hpp>

using latpoly::Rational;
using latpoly::errc;
using latpoly::parse_rational;
using latpoly::to_string;

TEST_CASE("integers and fractions parse") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("7/2") == Rational(7, 2));
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK(parse_rational("0/5") == Rational(0));
}

TEST_CASE("values normalize to lowest terms") {
  CHECK(to_string(parse_rational("4/6")) == "2/3");
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("parse and print round-trip") {
  for (const char* s : {"0", "-7", "2/3", "-2/3", "41/12", "100"}) {
    CHECK(to_string(parse_rational(s)) == s);
  }
}

TEST_CASE("malformed input is rejected as BadRational") {
  for (const char* s : {"", "x", "1.5", "1/0", "2/-3", "1/", "/2", "1 / 2",
                        " 3", "3 ", "two"}) {
    try {
      parse_rational(s);
      FAIL("expected a parse failure for '" << s << "'");
    } catch (const latpoly::error& e) {
      CHECK(e.code() == errc::bad_rational);
    }
  }
}

TEST_CASE("arithmetic stays exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(to_string(a + a + a) == "1");
}
