#include "doctest.h"
#include "orbital/error.hpp"
#include "orbital/rational.hpp"

#include <random>

using orbital::Rational;

TEST_CASE("rational normalizes sign and lowest terms") {
  Rational q(6, -4);
  CHECK(q.num() == -3);
  CHECK(q.den() == 2);
  CHECK(q.str() == "-3/2");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), orbital::InvalidArgument);
}

TEST_CASE("rational field arithmetic") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(-7, 2) < Rational(-3));
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(floor(Rational(4)) == 4);
}

TEST_CASE("rational overflow is reported, not wrapped") {
  Rational big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-1.5") == Rational(-3, 2));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("x"), orbital::InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("1/"), orbital::InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), orbital::InvalidArgument);
}

TEST_CASE("field axioms on random inputs") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  for (int i = 0; i < 500; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b - b == a);
    if (b != Rational(0)) CHECK(a / b * b == a);
  }
}

TEST_CASE("exact solve") {
  using orbital::MatrixXq;
  using orbital::VectorXq;
  MatrixXq A(3, 2);
  A << Rational(1), Rational(1), Rational(1), Rational(-1), Rational(2), Rational(0);
  VectorXq b(3);
  b << Rational(3), Rational(1), Rational(4);
  VectorXq x = orbital::solve_exact(A, b);
  CHECK(x(0) == Rational(2));
  CHECK(x(1) == Rational(1));
  b(2) = Rational(5);
  CHECK_THROWS_AS(orbital::solve_exact(A, b), orbital::InvalidArgument);
  MatrixXq S(1, 2);
  S << Rational(1), Rational(1);
  VectorXq c(1);
  c << Rational(1);
  CHECK_THROWS_AS(orbital::solve_exact(S, c), orbital::InvalidArgument);
}
