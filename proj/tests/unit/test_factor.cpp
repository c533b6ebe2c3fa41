#include <doctest.h>

#include <algorithm>

#include "ratrec/errors.hpp"
#include "ratrec/factor.hpp"
#include "test_support.hpp"

using namespace ratrec;
using ratrec::testing::P;
using ratrec::testing::Q;
using ratrec::testing::U;

namespace {

UPoly rebuild(const SquarefreeDecomposition& d) {
  UPoly out = UPoly::constant(d.unit);
  for (const auto& [factor, mult] : d.parts) out *= factor.pow(mult);
  return out;
}

UPoly rebuild(const UniFactorization& f) {
  UPoly out = UPoly::constant(f.unit);
  for (const auto& [factor, mult] : f.factors) out *= factor.pow(mult);
  return out;
}

}  // namespace

TEST_CASE("squarefree decomposition") {
  SUBCASE("worked example") {
    UPoly f = U("(t - 1)^2 * (t + 2)");
    auto d = squarefree_decomposition(f);
    REQUIRE(d.parts.size() == 2);
    CHECK(rebuild(d) == f);
    bool saw_double = false, saw_single = false;
    for (const auto& [factor, mult] : d.parts) {
      if (mult == 2 && factor == U("t - 1")) saw_double = true;
      if (mult == 1 && factor == U("t + 2")) saw_single = true;
    }
    CHECK(saw_double);
    CHECK(saw_single);
  }
  SUBCASE("pure power") {
    auto d = squarefree_decomposition(U("t^5"));
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0].factor == U("t"));
    CHECK(d.parts[0].multiplicity == 5);
  }
  SUBCASE("already squarefree") {
    UPoly f = U("3*t^2 + 3");
    auto d = squarefree_decomposition(f);
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0].factor == U("t^2 + 1"));
    CHECK(d.parts[0].multiplicity == 1);
    CHECK(d.unit == 3);
  }
  SUBCASE("zero input") {
    CHECK_THROWS_AS(squarefree_decomposition(UPoly()), InputError);
  }
  SUBCASE("squarefree iff derivative coprime") {
    Rng rng(201);
    for (int i = 0; i < 25; ++i) {
      UPoly f = ratrec::testing::random_monic_upoly(rng, 1 + static_cast<int>(rng.uniform(0, 5)), 6);
      auto d = squarefree_decomposition(f);
      bool all_simple = std::all_of(d.parts.begin(), d.parts.end(),
                                    [](const SquarefreePart& p) { return p.multiplicity == 1; });
      bool coprime = gcd_upoly(f, f.derivative()).degree() == 0;
      CHECK(all_simple == coprime);
      CHECK(rebuild(d) == f);
    }
  }
}

TEST_CASE("univariate factorization") {
  SUBCASE("difference of squares") {
    auto f = factor_univariate(U("t^2 - 1"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].factor == U("t - 1"));
    CHECK(f.factors[1].factor == U("t + 1"));
    CHECK(f.unit == 1);
  }
  SUBCASE("irreducible quadratic") {
    auto f = factor_univariate(U("t^2 + 1"));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].factor == U("t^2 + 1"));
    CHECK(f.factors[0].multiplicity == 1);
  }
  SUBCASE("two irreducible quadratics") {
    auto f = factor_univariate(U("t^4 - 4"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].factor == U("t^2 - 2"));
    CHECK(f.factors[1].factor == U("t^2 + 2"));
  }
  SUBCASE("unit and multiplicities") {
    UPoly f = U("6*(t - 1/2)^2 * (t^2 + t + 1)");
    auto factored = factor_univariate(f);
    CHECK(factored.unit == 6);
    CHECK(rebuild(factored) == f);
    REQUIRE(factored.factors.size() == 2);
    for (const auto& [factor, mult] : factored.factors) {
      if (factor.degree() == 1) {
        CHECK(factor == U("t - 1/2"));
        CHECK(mult == 2);
      } else {
        CHECK(factor == U("t^2 + t + 1"));
        CHECK(mult == 1);
      }
    }
  }
  SUBCASE("degree eight swinnerton-dyer-like product") {
    UPoly f = U("(t^4 - 10*t^2 + 1) * (t^4 + 1)");
    auto factored = factor_univariate(f);
    REQUIRE(factored.factors.size() == 2);
    CHECK(rebuild(factored) == f);
    for (const auto& [factor, mult] : factored.factors) CHECK(factor.degree() == 4);
  }
  SUBCASE("many rational roots") {
    UPoly f = U("(t - 1)*(t - 2)*(t - 3)*(t - 4)*(t + 5)*(t + 7)");
    auto factored = factor_univariate(f);
    CHECK(factored.factors.size() == 6);
    CHECK(rebuild(factored) == f);
  }
  SUBCASE("zero input") {
    CHECK_THROWS_AS(factor_univariate(UPoly()), InputError);
  }
}

TEST_CASE("constant-term section split") {
  const std::vector<std::string> XYZ = {"x", "y", "z"};
  SUBCASE("power times a unit factor") {
    MPoly h = P("z^2 + z + x + y", XYZ);
    auto split = split_constant_term(h);
    CHECK(split.power == 1);
    REQUIRE(split.parts.size() == 1);
    CHECK(split.parts[0] == U("t + 1"));
  }
  SUBCASE("pure power") {
    MPoly h = P("z^2 - x*y", XYZ);
    auto split = split_constant_term(h);
    CHECK(split.power == 2);
    CHECK(split.parts.empty());
  }
  SUBCASE("power times an irreducible quadratic") {
    MPoly h = P("z^3 + z + x", XYZ);
    auto split = split_constant_term(h);
    CHECK(split.power == 1);
    REQUIRE(split.parts.size() == 1);
    CHECK(split.parts[0] == U("t^2 + 1"));
  }
  SUBCASE("repeated section factor signals a re-shear") {
    MPoly h = P("(z - 1)^2 * z + x", XYZ);
    CHECK_THROWS_AS(split_constant_term(h), NotSquarefreeAfterShear);
  }
  SUBCASE("non-monic input is rejected") {
    CHECK_THROWS_AS(split_constant_term(P("x*z + 1", XYZ)), InputError);
  }
}
