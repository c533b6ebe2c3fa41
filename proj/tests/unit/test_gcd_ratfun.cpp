#include <doctest.h>

#include "ratrec/errors.hpp"
#include "test_support.hpp"

using namespace ratrec;
using ratrec::testing::F;
using ratrec::testing::P;
using ratrec::testing::random_mpoly;
using ratrec::testing::random_nonzero_mpoly;

namespace {
const std::vector<std::string> XY = {"x", "y"};
}

TEST_CASE("multivariate gcd") {
  SUBCASE("coprime pair") {
    MPoly g = gcd_mpoly(P("x*y", XY), P("x^2 + y^2", XY));
    CHECK(g == P("1", XY));
    // Confirmed coprime by trial division.
    CHECK_FALSE(is_divisible(P("x^2 + y^2", XY), P("x*y", XY)));
    CHECK_FALSE(is_divisible(P("x*y", XY), P("x^2 + y^2", XY)));
  }
  SUBCASE("gcd with itself normalizes") {
    MPoly f = P("4*x^2 - 4*y^2", XY);
    CHECK(gcd_mpoly(f, f) == P("x^2 - y^2", XY));
    MPoly g = P("-2*x - 2*y", XY);
    CHECK(gcd_mpoly(g, g) == P("x + y", XY));
  }
  SUBCASE("zero operands") {
    MPoly zero = P("0", XY);
    CHECK(gcd_mpoly(zero, zero).is_zero());
    CHECK(gcd_mpoly(zero, P("6*x", XY)) == P("x", XY));
  }
  SUBCASE("common factor pulls out of random coprime pairs") {
    Rng rng(21);
    int done = 0;
    while (done < 15) {
      MPoly f = random_nonzero_mpoly(rng, 2, 3, 3, 5);
      MPoly g = random_nonzero_mpoly(rng, 2, 3, 3, 5);
      if (!gcd_mpoly(f, g).is_constant()) continue;
      ++done;
      MPoly common = P("x + y", XY);
      MPoly got = gcd_mpoly(common * f, common * g);
      CHECK(got == normalize_primitive(common * gcd_mpoly(f, g)));
    }
  }
  SUBCASE("gcd divides both inputs exactly") {
    Rng rng(22);
    for (int i = 0; i < 20; ++i) {
      MPoly f = random_mpoly(rng, 3, 4, 4, 9);
      MPoly g = random_mpoly(rng, 3, 4, 4, 9);
      MPoly d = gcd_mpoly(f, g);
      if (d.is_zero()) continue;
      CHECK(is_divisible(f, d));
      CHECK(is_divisible(g, d));
    }
  }
}

TEST_CASE("fraction canonicalization") {
  SUBCASE("shared factor cancels") {
    RatFun f = F("x*y*(x^2 + y^2)", "(x^2 + y^2)^2", XY);
    CHECK(f.num() == P("x*y", XY));
    CHECK(f.den() == P("x^2 + y^2", XY));
  }
  SUBCASE("zero numerator") {
    RatFun f = F("0", "x + 1", XY);
    CHECK(f.num().is_zero());
    CHECK(f.den() == P("1", XY));
  }
  SUBCASE("content normalization") {
    RatFun f = F("6*x^2", "4*x", XY);
    CHECK(f.num() == P("3*x", XY));
    CHECK(f.den() == P("2", XY));
  }
  SUBCASE("sign fixed by the denominator") {
    RatFun f = F("x", "-x*y + 1", XY);
    CHECK(f.den().leading_coeff() > 0);
    std::vector<Rat> p = {Rat(2), Rat(3)};
    CHECK(*f.eval(p) == Rat(2) / Rat(-5));
  }
  SUBCASE("idempotence") {
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
      MPoly num = random_mpoly(rng, 2, 4, 4, 9);
      MPoly den = random_nonzero_mpoly(rng, 2, 4, 4, 9);
      RatFun once = reduce_fraction(num, den);
      RatFun twice = reduce_fraction(once.num(), once.den());
      CHECK(once == twice);
    }
  }
  SUBCASE("common polynomial factors never change the result") {
    Rng rng(24);
    for (int i = 0; i < 10; ++i) {
      MPoly num = random_mpoly(rng, 2, 3, 3, 7);
      MPoly den = random_nonzero_mpoly(rng, 2, 3, 3, 7);
      MPoly common = random_nonzero_mpoly(rng, 2, 2, 2, 5);
      CHECK(reduce_fraction(num, den) == reduce_fraction(num * common, den * common));
    }
  }
  SUBCASE("zero denominator is rejected") {
    CHECK_THROWS_AS(F("x", "0", XY), InputError);
  }
}

TEST_CASE("fraction field arithmetic") {
  RatFun a = F("x", "y", XY);
  RatFun b = F("1", "x + y", XY);
  RatFun sum = a + b;
  std::vector<Rat> p = {Rat(2), Rat(3)};
  CHECK(*sum.eval(p) == Rat(2) / Rat(3) + Rat(1) / Rat(5));
  RatFun prod = a * b;
  CHECK(*prod.eval(p) == Rat(2) / Rat(15));
  RatFun quot = a / b;
  CHECK(*quot.eval(p) == Rat(10) / Rat(3));
  CHECK((a - a).is_zero());
}
