#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratrec/mpoly.hpp"
#include "ratrec/ratfun.hpp"
#include "ratrec/upoly.hpp"

namespace ratrec {

struct CertifyParams {
  int shear_retry = 200;      // random shear draws after the deterministic scan
  int direction_retry = 64;   // direction draws
  int trunc_cap = 64;         // adaptive truncation ceiling
};

// Coordinate change x_i -> x_i + offsets[i] * x_n putting the input in
// general position: full degree in the last variable (normalized monic by
// `scale`), and the constant-term section squarefree apart from a pure power
// of x_n.
struct ShearResult {
  std::vector<Rat> offsets;
  MPoly sheared;  // monic in the last variable
  Rat scale;      // leading coefficient removed from the raw substitution
};
ShearResult shear_to_general_position(const MPoly& h, std::uint64_t seed,
                                      const CertifyParams& params = {});

// One subset witness: the lifted product over `subset` has, at x_n power
// `main_power`, a coefficient with the nonzero homogeneous part `form` of
// total degree beyond the sheared denominator's series degree.
struct SubsetWitness {
  std::vector<int> subset;  // 1-based indices into the lifted factors
  int main_power;
  MPoly form;  // n-1 variables, homogeneous
};

// Reduced restriction of the sheared pair to the emitted plane.
struct PlanePair {
  MPoly num;  // in (u, v)
  MPoly den;
};

// Self-contained record of a non-regularity witness; every invariant is
// re-checkable from the fields alone (see recheck_certificate).
struct Certificate {
  int nvars = 0;
  MPoly input_num, input_den;      // reduced input pair
  std::vector<Rat> shear;          // n-1 offsets
  MPoly sheared_num, sheared_den;  // sheared pair, denominator monic
  int power = 0;                   // pure x_n exponent of the section
  std::vector<UPoly> seed_factors; // remaining monic irreducible section parts
  int trunc = 0;                   // series truncation used for the witnesses
  int rem_main_deg = 0;            // x_n degree of the division remainder
  MPoly top_rem_form;              // initial form of its top coefficient
  std::vector<SubsetWitness> witnesses;
  MPoly certificate_poly;          // top_rem_form times all witness forms
  std::vector<Rat> direction;      // plane direction, certificate_poly != 0
  PlanePair plane;

  Certificate() : input_num(0), input_den(0), sheared_num(0), sheared_den(0),
                  top_rem_form(0), certificate_poly(0), plane{MPoly(2), MPoly(2)} {}
};

// Builds and verifies a certificate for a reduced pair (G, H) with H(0) = 0.
// Throws OriginNotOnZeroSet, ZeroRemainder, or VerificationFailed: no
// unverified certificate is ever returned.
Certificate compute_certificate(const MPoly& num, const MPoly& den,
                                const CertifyParams& params, std::uint64_t seed);

enum class WitnessStatus { VerifiedNonRegular, NotAWitness };
struct WitnessResult {
  WitnessStatus status;
  PlanePair plane;  // reduced restriction either way
};

// Restricts the pair to the plane x' = a u, x_n = v, reduces, and tests
// whether the reduced denominator vanishes at the origin: any regular
// representation of the restriction would force the denominator to divide
// its unit, so vanishing certifies non-regularity on this plane. Throws
// PlaneInsideZeroSet when the denominator restricts to zero.
WitnessResult verify_witness_plane(const MPoly& num, const MPoly& den, const PlaneDir& dir);

// Re-derives every stored invariant from the certificate fields alone;
// throws VerificationFailed naming the first violated one.
void recheck_certificate(const Certificate& cert);

struct RegularityDecision {
  bool regular = false;
  Rat value;  // when regular
  std::optional<Certificate> certificate;
  // "witness-plane" when a certificate is attached, otherwise
  // "reduced-denominator" (the denominator of the reduced fraction vanishes
  // at the origin, which already rules out a regular representation).
  std::string justification;
};

RegularityDecision decide_regular_at_origin(const RatFun& f,
                                            const CertifyParams& params = {},
                                            std::uint64_t seed = 42);

}  // namespace ratrec
