#include <doctest.h>

#include "ratrec/errors.hpp"
#include "ratrec/reconstruct.hpp"
#include "test_support.hpp"

using namespace ratrec;
using ratrec::testing::F;
using ratrec::testing::P;
using ratrec::testing::oracle_from_ratfun;
using ratrec::testing::random_canonical_ratfun;

namespace {
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

ReconParams params_with_seed(std::uint64_t seed) {
  ReconParams p;
  p.r_max = 4;
  p.s_max = 4;
  p.seed = seed;
  return p;
}

Oracle plane_example_oracle() {
  auto spec = parse_oracle_spec("vars x y; x*y/(x^2+y^2) default 0");
  return oracle_from_spec(std::move(spec));
}

Oracle curve_example_oracle() {
  auto spec = parse_oracle_spec(
      "vars x y z; if (y - x^2)^2 + (z - x^3)^2 == 0 then x else 0");
  return oracle_from_spec(std::move(spec));
}

}  // namespace

TEST_CASE("generic type probing") {
  SUBCASE("plane example probes to (1,2) along the last variable") {
    CHECK(probe_generic_type(plane_example_oracle(), params_with_seed(5)) == TypeRS{1, 2});
  }
  SUBCASE("linear function") {
    Oracle f = oracle_from_ratfun(F("x + y", "1", XY));
    CHECK(probe_generic_type(f, params_with_seed(5)) == TypeRS{1, 0});
  }
  SUBCASE("even denominator probes to (0,2)") {
    Oracle f = oracle_from_ratfun(F("1", "1 + x^2*y^2", XY));
    CHECK(probe_generic_type(f, params_with_seed(5)) == TypeRS{0, 2});
  }
  SUBCASE("univariate input is rejected") {
    Oracle f = oracle_from_ratfun(F("x", "1", {"x"}));
    CHECK_THROWS_AS(probe_generic_type(f, params_with_seed(5)), InputError);
  }
}

TEST_CASE("reconstruction of the plane example") {
  RatFun got = reconstruct(plane_example_oracle(), params_with_seed(42));
  CHECK(got.num() == P("x*y", XY));
  CHECK(got.den() == P("x^2 + y^2", XY));
}

TEST_CASE("reconstruction of simple polynomials") {
  Oracle f = oracle_from_ratfun(F("x + y", "1", XY));
  RatFun got = reconstruct(f, params_with_seed(42));
  CHECK(got == F("x + y", "1", XY));
}

TEST_CASE("univariate reconstruction") {
  Oracle f = oracle_from_ratfun(F("x^2 - 1", "x^2 + 1", {"x"}));
  RatFun got = reconstruct(f, params_with_seed(9));
  CHECK(got == F("x^2 - 1", "x^2 + 1", {"x"}));
}

TEST_CASE("round trip on random canonical fractions") {
  Rng rng(601);
  int done = 0;
  while (done < 10) {
    int n = 2 + static_cast<int>(rng.uniform(0, 1));
    RatFun expected = random_canonical_ratfun(rng, n, 3);
    ++done;
    RatFun got = reconstruct(oracle_from_ratfun(expected), params_with_seed(1000 + done));
    CHECK(got == expected);
  }
}

TEST_CASE("determinism") {
  Oracle f = plane_example_oracle();
  RatFun a = reconstruct(f, params_with_seed(77));
  RatFun b = reconstruct(f, params_with_seed(77));
  CHECK(a == b);
}

TEST_CASE("dense reconstruction") {
  SUBCASE("plane example with tight bounds") {
    RatFun got = reconstruct_dense(plane_example_oracle(), 2, 2, params_with_seed(42));
    CHECK(got.num() == P("x*y", XY));
    CHECK(got.den() == P("x^2 + y^2", XY));
  }
  SUBCASE("constants") {
    Oracle f = oracle_from_ratfun(F("5", "1", XY));
    RatFun got = reconstruct_dense(f, 0, 0, params_with_seed(42));
    CHECK(got == F("5", "1", XY));
  }
  SUBCASE("bounds too small") {
    Oracle f = plane_example_oracle();
    CHECK_THROWS_AS(reconstruct_dense(f, 1, 1, params_with_seed(42)), MethodFailure);
  }
  SUBCASE("agreement with the recursive method where both succeed") {
    Rng rng(602);
    for (int i = 0; i < 6; ++i) {
      RatFun expected = random_canonical_ratfun(rng, 2, 3);
      Oracle f = oracle_from_ratfun(expected);
      RatFun recursive = reconstruct(f, params_with_seed(2000 + i));
      try {
        RatFun dense = reconstruct_dense(f, 3, 3, params_with_seed(2000 + i));
        CHECK(recursive == dense);
      } catch (const MethodFailure&) {
        // Dense sampling hit the filled-in zero set; agreement is only
        // required when both methods succeed.
      }
    }
  }
}

TEST_CASE("space-curve example exposes the sampling caveat") {
  Oracle f = curve_example_oracle();
  SUBCASE("reconstruction sees the dense-open zero function") {
    RatFun got = reconstruct(f, params_with_seed(42));
    CHECK(got.is_zero());
    CHECK(got.den() == P("1", XYZ));
    // The oracle disagrees on the curve itself.
    std::vector<Rat> on_curve = {Rat(1), Rat(1), Rat(1)};
    CHECK(f.eval(on_curve) == 1);
    CHECK(*got.eval(on_curve) == 0);
  }
  SUBCASE("pinning a curve point fails verification honestly") {
    ReconParams params = params_with_seed(42);
    params.extra_verify_points = {{Rat(1), Rat(1), Rat(1)}};
    CHECK_THROWS_AS(reconstruct(f, params), VerificationFailed);
  }
}
