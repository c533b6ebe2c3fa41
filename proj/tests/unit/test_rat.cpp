#include <doctest.h>

#include "ratrec/errors.hpp"
#include "test_support.hpp"

using namespace ratrec;
using ratrec::testing::Q;

TEST_CASE("rational parsing and printing") {
  CHECK(Q("3/6") == Q("1/2"));
  CHECK(Q("-4/2") == Rat(-2));
  CHECK(rat_to_string(Q("10/4")) == "5/2");
  CHECK(rat_to_string(Rat(7)) == "7");
  CHECK_THROWS_AS(Q("1/0"), InputError);
  CHECK_THROWS_AS(Q("1.5"), InputError);
  CHECK_THROWS_AS(Q("x"), InputError);
}

TEST_CASE("rational powers") {
  CHECK(rat_pow(Q("2/3"), 3) == Q("8/27"));
  CHECK(rat_pow(Q("5"), 0) == 1);
  CHECK(rat_pow(Rat(0), 0) == 1);
}
