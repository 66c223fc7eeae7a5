#include "doctest.h"
#include "homjet/scalar.hpp"

using namespace homjet;

namespace {
Scalar s2(long a_num, long a_den, long b_num, long b_den) {
  return Scalar(Rational(a_num, a_den), Rational(b_num, b_den), 2);
}
} // namespace

TEST_CASE("field arithmetic in Q(sqrt(2))") {
  Scalar x = s2(1, 1, 1, 1);   // 1 + sqrt(2)
  Scalar y = s2(-1, 1, 1, 1);  // -1 + sqrt(2)
  CHECK(x * y == Scalar(1));
  CHECK(x + y == s2(0, 1, 2, 1));
  CHECK((x - x).is_zero());
  CHECK((x - x).d() == 1);  // vanished irrational part folds back to plain Q

  Scalar inv = x.inverse();
  CHECK(inv == y);  // 1/(1+sqrt 2) = sqrt(2)-1
  CHECK(x * inv == Scalar(1));
  CHECK(Scalar(Rational(3, 2)) + s2(1, 2, 1, 1) == s2(2, 1, 1, 1));
}

TEST_CASE("rationals embed into any extension") {
  Scalar r(Rational(5, 3));
  Scalar x = s2(0, 1, 1, 1);
  CHECK((r * x).d() == 2);
  CHECK(r.d() == 1);
  CHECK((x * Scalar(0)).d() == 1);
}

TEST_CASE("mixing distinct extensions throws") {
  Scalar a(Rational(1), Rational(1), 2);
  Scalar b(Rational(1), Rational(1), 3);
  CHECK_THROWS_AS(a + b, InternalError);
  CHECK_THROWS_AS(a * b, InternalError);
}

TEST_CASE("exact sign and ordering") {
  CHECK(s2(-1, 1, 1, 1).sign() == 1);    // sqrt(2) > 1
  CHECK(s2(-3, 2, 1, 1).sign() == -1);   // sqrt(2) < 3/2
  CHECK(s2(10, 7, -1, 1).sign() == 1);   // 10/7 > sqrt(2)
  CHECK(s2(7, 5, -1, 1).sign() == -1);   // 7/5 < sqrt(2)
  CHECK(Scalar(0).sign() == 0);
  CHECK(s2(0, 1, -1, 2).sign() == -1);
  CHECK(s2(1, 1, 1, 1) > Scalar(2));
  CHECK(Scalar(Rational(3, 2)) < s2(0, 1, 2, 1));
}

TEST_CASE("render and parse round trip") {
  Scalar vals[] = {Scalar(0),
                   Scalar(-7),
                   Scalar(Rational(3, 4)),
                   s2(1, 2, -3, 4),
                   s2(0, 1, 1, 1),
                   s2(-2, 3, 5, 7)};
  for (const Scalar& v : vals) {
    CAPTURE(v.str());
    CHECK(parse_scalar(v.str(), 2) == v);
  }
  CHECK(s2(1, 2, -3, 4).str() == "1/2-3/4*sqrt(2)");
  CHECK(s2(0, 1, 1, 1).str() == "0+1*sqrt(2)");
  CHECK(Scalar(Rational(-10, 4)).str() == "-5/2");
}

TEST_CASE("parser rejects malformed scalars") {
  CHECK_THROWS_AS(parse_scalar("1/0", 2), ParseError);
  CHECK_THROWS_AS(parse_scalar("1+2", 2), ParseError);
  CHECK_THROWS_AS(parse_scalar("1+1*sqrt(4)", 2), ParseError);  // not squarefree
  CHECK_THROWS_AS(parse_scalar("1+1*sqrt(3)", 2), ParseError);  // wrong extension
  CHECK_THROWS_AS(parse_scalar("1+1*sqrt(2)x", 2), ParseError);
  CHECK_THROWS_AS(parse_scalar("", 2), ParseError);
  CHECK_THROWS_AS(parse_scalar("1.5", 2), ParseError);
  CHECK_THROWS_AS(parse_scalar("1 + 1*sqrt(2)", 2), ParseError);
}

TEST_CASE("discriminant validation") {
  CHECK(is_squarefree(1));
  CHECK(is_squarefree(2));
  CHECK(is_squarefree(6));
  CHECK(!is_squarefree(4));
  CHECK(!is_squarefree(12));
  CHECK(!is_squarefree(0));
  CHECK_THROWS_AS(require_valid_discriminant(8), ValidationError);
}

TEST_CASE("square roots inside the field") {
  CHECK(*sqrt_in_field(Scalar(Rational(9, 4)), 1) == Scalar(Rational(3, 2)));
  CHECK(!sqrt_in_field(Scalar(2), 1).has_value());
  CHECK(*sqrt_in_field(Scalar(2), 2) == s2(0, 1, 1, 1));
  CHECK(*sqrt_in_field(Scalar(8), 2) == s2(0, 1, 2, 1));
  CHECK(!sqrt_in_field(Scalar(-1), 2).has_value());
  // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
  CHECK(*sqrt_in_field(s2(3, 1, 2, 1), 2) == s2(1, 1, 1, 1));
  CHECK(!sqrt_in_field(s2(1, 1, 1, 1), 2).has_value());
  CHECK(*sqrt_in_field(Scalar(0), 2) == Scalar(0));
}
