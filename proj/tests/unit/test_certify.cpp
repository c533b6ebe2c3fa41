#include <doctest.h>

#include "ratrec/certify.hpp"
#include "ratrec/errors.hpp"
#include "ratrec/serialize.hpp"
#include "test_support.hpp"

using namespace ratrec;
using ratrec::testing::F;
using ratrec::testing::P;
using ratrec::testing::Q;

namespace {
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};
const std::vector<std::string> UV = {"u", "v"};
}  // namespace

TEST_CASE("shear to general position") {
  SUBCASE("already in position") {
    auto result = shear_to_general_position(P("z^2 - x*y", XYZ), 1);
    CHECK(result.offsets == std::vector<Rat>{Rat(0), Rat(0)});
    CHECK(result.sheared == P("z^2 - x*y", XYZ));
    CHECK(result.scale == 1);
  }
  SUBCASE("degree deficit forces a shear") {
    auto result = shear_to_general_position(P("x*z + 1", XYZ), 1);
    CHECK(result.offsets == std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(result.sheared == P("z^2 + x*z + 1", XYZ));
  }
  SUBCASE("squarefree section accepted directly") {
    auto result = shear_to_general_position(P("z^2 + z + x + y", XYZ), 1);
    CHECK(result.offsets == std::vector<Rat>{Rat(0), Rat(0)});
  }
  SUBCASE("postconditions on random inputs") {
    Rng rng(501);
    int done = 0;
    while (done < 100) {
      MPoly h = ratrec::testing::random_nonzero_mpoly(rng, 3, 4, 5, 6);
      if (h.is_constant()) continue;
      ++done;
      auto result = shear_to_general_position(h, 77 + done);
      const MPoly& sheared = result.sheared;
      CHECK(sheared.degree_in_last() == h.total_degree());
      MPoly lead = sheared.coeff_of_last(sheared.degree_in_last());
      CHECK(lead.is_constant());
      CHECK(lead.constant_term() == 1);
      UPoly section = last_var_section(sheared);
      int e = 0;
      while (section[e] == 0) ++e;
      std::vector<Rat> rest(section.coeffs().begin() + e, section.coeffs().end());
      UPoly q{std::vector<Rat>(rest)};
      CHECK(q.eval(Rat(0)) != 0);
      if (q.degree() > 0) CHECK(gcd_upoly(q, q.derivative()).degree() == 0);
    }
  }
}

TEST_CASE("witness plane verification") {
  SUBCASE("plane example certifies directly") {
    PlaneDir identity{{Rat(1)}};
    auto result = verify_witness_plane(P("x*y", XY), P("x^2 + y^2", XY), identity);
    CHECK(result.status == WitnessStatus::VerifiedNonRegular);
    CHECK(result.plane.num == P("u*v", UV));
    CHECK(result.plane.den == P("u^2 + v^2", UV));
  }
  SUBCASE("quadric cone with the diagonal plane") {
    PlaneDir diag{{Rat(1), Rat(1)}};
    auto result = verify_witness_plane(P("1", XYZ), P("z^2 - x*y", XYZ), diag);
    CHECK(result.status == WitnessStatus::VerifiedNonRegular);
    // v^2 - u^2 canonicalizes with a positive leading coefficient.
    CHECK(result.plane.den == P("u^2 - v^2", UV));
    CHECK(result.plane.num == P("-1", UV));
  }
  SUBCASE("full cancellation is not a witness") {
    PlaneDir diag{{Rat(1), Rat(1)}};
    auto result = verify_witness_plane(P("z^2 - x*y", XYZ), P("z^2 - x*y", XYZ), diag);
    CHECK(result.status == WitnessStatus::NotAWitness);
    CHECK(result.plane.den == P("1", UV));
  }
  SUBCASE("plane inside the zero set") {
    PlaneDir dir{{Rat(0)}};
    CHECK_THROWS_AS(verify_witness_plane(P("y", XY), P("x", XY), dir), PlaneInsideZeroSet);
  }
}

TEST_CASE("certificate for the quadric cone") {
  auto cert = compute_certificate(P("1", XYZ), P("z^2 - x*y", XYZ), {}, 42);
  CHECK(cert.shear == std::vector<Rat>{Rat(0), Rat(0)});
  CHECK(cert.rem_main_deg == 0);
  CHECK(cert.top_rem_form == P("1", XY));
  CHECK(cert.power == 2);
  CHECK(cert.seed_factors.empty());
  CHECK(cert.witnesses.empty());
  CHECK(cert.certificate_poly == P("1", XY));
  CHECK(cert.direction == std::vector<Rat>{Rat(1), Rat(1)});
  CHECK(cert.plane.den == P("u^2 - v^2", UV));
  CHECK(cert.plane.num == P("-1", UV));
  CHECK_NOTHROW(recheck_certificate(cert));
}

TEST_CASE("certificate with a hand-lifted witness") {
  auto cert = compute_certificate(P("1", XYZ), P("z^2 + z + x + y", XYZ), {}, 42);
  CHECK(cert.shear == std::vector<Rat>{Rat(0), Rat(0)});
  CHECK(cert.power == 1);
  REQUIRE(cert.seed_factors.size() == 1);
  CHECK(cert.seed_factors[0] == ratrec::testing::U("t + 1"));
  REQUIRE(cert.witnesses.size() == 1);
  CHECK(cert.witnesses[0].subset == std::vector<int>{1});
  CHECK(cert.witnesses[0].main_power == 0);
  // The factor with unit section lifts to z + 1 - (x+y) - (x+y)^2 - ...; the
  // first series term beyond the linear part is -(x+y)^2.
  CHECK(cert.witnesses[0].form == P("-(x + y)^2", XY));
  CHECK(cert.certificate_poly == P("-(x + y)^2", XY));
  CHECK(cert.certificate_poly.eval(std::vector<Rat>{Rat(1), Rat(1)}) == Rat(-4));
  CHECK(cert.plane.den == P("v^2 + v + 2*u", UV));
  CHECK(cert.plane.num == P("1", UV));
  CHECK_NOTHROW(recheck_certificate(cert));
}

TEST_CASE("certificate with a nonconstant remainder form") {
  auto cert = compute_certificate(P("x", XYZ), P("z^2 + z + x + y", XYZ), {}, 42);
  CHECK(cert.top_rem_form == P("x", XY));
  CHECK(cert.certificate_poly == P("-x*(x + y)^2", XY));
  CHECK_NOTHROW(recheck_certificate(cert));
}

TEST_CASE("certificate error taxonomy") {
  CHECK_THROWS_AS(compute_certificate(P("1", XYZ), P("1 + x^2 + y^2", XYZ), {}, 1),
                  OriginNotOnZeroSet);
  CHECK_THROWS_AS(compute_certificate(P("z^2 - x*y", XYZ), P("z^2 - x*y", XYZ), {}, 1),
                  ZeroRemainder);
  // A denominator splitting into polynomial factors defeats the witness
  // search: every subset product stays polynomial, so no series term ever
  // exceeds the degree bound. The failure is surfaced, never faked.
  CHECK_THROWS_AS(
      compute_certificate(P("1", XYZ), P("(z - x)*(z - x - 1)", XYZ), {}, 1),
      MethodFailure);
}

TEST_CASE("certificates survive serialization and tampering is caught") {
  auto cert = compute_certificate(P("1", XYZ), P("z^2 + z + x + y", XYZ), {}, 7);
  std::string text = certificate_to_json(cert);
  Certificate parsed = certificate_from_json(text);
  CHECK_NOTHROW(recheck_certificate(parsed));
  CHECK(certificate_to_json(parsed) == text);

  SUBCASE("tampered direction fails the recheck") {
    Certificate bad = parsed;
    bad.direction = {Rat(0), Rat(0)};
    CHECK_THROWS_AS(recheck_certificate(bad), VerificationFailed);
  }
  SUBCASE("tampered witness form fails the recheck") {
    Certificate bad = parsed;
    bad.witnesses[0].form = P("x^2", XY);
    CHECK_THROWS_AS(recheck_certificate(bad), VerificationFailed);
  }
  SUBCASE("tampered plane pair fails the recheck") {
    Certificate bad = parsed;
    bad.plane.den = P("u", UV);
    CHECK_THROWS_AS(recheck_certificate(bad), VerificationFailed);
  }
  SUBCASE("malformed documents are rejected") {
    CHECK_THROWS_AS(certificate_from_json("{not json"), InputError);
    CHECK_THROWS_AS(certificate_from_json("{\"format\": \"other\"}"), InputError);
  }
}

TEST_CASE("regularity decisions at the origin") {
  SUBCASE("regular with value") {
    auto decision = decide_regular_at_origin(F("x + y", "1 + x^2 + y^2", XY));
    CHECK(decision.regular);
    CHECK(decision.value == 0);
  }
  SUBCASE("the plane example is not regular") {
    auto decision = decide_regular_at_origin(F("x*y", "x^2 + y^2", XY));
    CHECK_FALSE(decision.regular);
    REQUIRE(decision.certificate.has_value());
    CHECK(decision.justification == "witness-plane");
    CHECK_NOTHROW(recheck_certificate(*decision.certificate));
  }
  SUBCASE("reduction happens before the test") {
    auto decision = decide_regular_at_origin(F("(1 + x)*(x^2 + y^2)", "x^2 + y^2", XY));
    CHECK(decision.regular);
    CHECK(decision.value == 1);
  }
  SUBCASE("reducible denominators fall back to the reduced-denominator argument") {
    auto decision = decide_regular_at_origin(F("1", "(z - x)*(z - x - 1)", XYZ));
    CHECK_FALSE(decision.regular);
    CHECK_FALSE(decision.certificate.has_value());
    CHECK(decision.justification == "reduced-denominator");
  }
  SUBCASE("univariate pole at the origin") {
    auto decision = decide_regular_at_origin(F("1", "x", {"x"}));
    CHECK_FALSE(decision.regular);
    CHECK(decision.justification == "reduced-denominator");
  }
}

TEST_CASE("determinism per seed") {
  auto a = compute_certificate(P("x", XYZ), P("z^2 + z + x + y", XYZ), {}, 99);
  auto b = compute_certificate(P("x", XYZ), P("z^2 + z + x + y", XYZ), {}, 99);
  CHECK(certificate_to_json(a) == certificate_to_json(b));
}
