#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parkstat/errors.hpp"
#include "parkstat/poly.hpp"
#include "parkstat/rational.hpp"

using namespace parkstat;

TEST_CASE("integer powers, binomials, factorials") {
  CHECK(int_pow(BigInt(7), 0) == 1);
  CHECK(int_pow(BigInt(0), 0) == 1);
  CHECK(int_pow(BigInt(4), 5) == 1024);
  CHECK(int_pow(101UL, 99UL) == int_pow(BigInt(101), 99));
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}

TEST_CASE("rational powers handle both signs") {
  const BigRat half(1, 2);
  CHECK(rat_pow(half, 3) == make_rat(1, 8));
  CHECK(rat_pow(half, -2) == BigRat(4));
  CHECK(rat_pow(half, 0) == 1);
  CHECK(rat_pow(BigRat(0), 0) == 1);  // 0^0 = 1 by convention
  CHECK(rat_pow(BigRat(0), 3) == 0);
  CHECK(rat_pow(BigRat(-2, 3), -2) == make_rat(9, 4));
  CHECK(rat_pow(BigRat(1), -5) == 1);  // the 1^(-1) = 1 boundary convention
  CHECK_THROWS_AS((void)rat_pow(BigRat(0), -1), ZeroBaseNegativeExponentError);
}

TEST_CASE("make_rat canonicalizes and rejects zero denominators") {
  CHECK(make_rat(2, 4) == make_rat(1, 2));
  CHECK(make_rat(3, -6) == make_rat(-1, 2));
  CHECK(rat_string(make_rat(3, -6)) == "-1/2");
  CHECK(rat_string(make_rat(10, 2)) == "5/1");
  CHECK_THROWS_AS((void)make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rat round-trips rat_string") {
  for (const char* text : {"3/4", "-1/2", "5/1", "0/1", "22/7"}) {
    const BigRat q = parse_rat(text);
    CHECK(rat_string(q) == text);
  }
  CHECK(parse_rat("7") == BigRat(7));
  CHECK(parse_rat("-14/21") == make_rat(-2, 3));  // canonicalized on parse
  CHECK_THROWS_AS((void)parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_rat("abc"), std::invalid_argument);
}

TEST_CASE("rat_double") {
  CHECK(rat_double(make_rat(1, 2)) == 0.5);
  CHECK(rat_double(make_rat(-3, 4)) == -0.75);
}

TEST_CASE("polynomial arithmetic and normalization") {
  const PolyP x = PolyP::variable();
  const PolyP one{BigRat(1)};
  const PolyP a = one - x;  // 1 - p
  CHECK(a.degree() == 1);
  CHECK((a * a).coeffs() == std::vector<BigRat>{BigRat(1), BigRat(-2), BigRat(1)});
  CHECK((a + x) == one);                // trailing zero trimmed
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == 0);         // zero poly is {0}
  CHECK((x * x + x).eval(make_rat(1, 2)) == make_rat(3, 4));
  const PolyP scaled = a * BigRat(3);
  CHECK(scaled.coeff(0) == 3);
  CHECK(scaled.coeff(1) == -3);
  CHECK(scaled.coeff(7) == 0);
}

TEST_CASE("reflection substitutes p -> 1-p") {
  const PolyP x = PolyP::variable();
  const PolyP poly = BigRat(2) * x - x * x;  // 2p - p^2
  const PolyP mirror = poly.reflected();     // 2(1-p) - (1-p)^2 = 1 - p^2
  CHECK(mirror.coeffs() ==
        std::vector<BigRat>{BigRat(1), BigRat(0), BigRat(-1)});
  CHECK(mirror.reflected() == poly);  // involution
  for (int num = 0; num <= 4; ++num) {
    const BigRat p(num, 4);
    CHECK(mirror.eval(p) == poly.eval(1 - p));
  }
}

TEST_CASE("pretty printing matches the canonical ascending form") {
  const PolyP x = PolyP::variable();
  CHECK((BigRat(2) * x - x * x).str() == "2p - p^2");
  CHECK((PolyP{BigRat(1)} - x).str() == "1 - p");
  CHECK(PolyP{BigRat(1)}.str() == "1");
  CHECK(PolyP().str() == "0");
  CHECK((x * x).str() == "p^2");
  CHECK((PolyP{make_rat(1, 3)} * x).str() == "(1/3)p");
  CHECK((PolyP{BigRat(-1)} + x * x * x).str() == "-1 + p^3");
  const PolyQ q = PolyQ::variable();
  CHECK((PolyQ{BigInt(3)} + BigInt(2) * q).str("q") == "3 + 2q");
}

TEST_CASE("integer polynomials") {
  const PolyQ q = PolyQ::variable();
  const PolyQ prod = (PolyQ{BigInt(2)} + q) * (PolyQ{BigInt(3)} + BigInt(2) * q);
  CHECK(prod.coeffs() == std::vector<BigInt>{BigInt(6), BigInt(7), BigInt(2)});
  CHECK(prod.eval(BigInt(1)) == 15);
}
