#pragma once

#include <cstdint>
#include <vector>

#include "ratrec/oracle.hpp"
#include "ratrec/ratfun.hpp"
#include "ratrec/unifit.hpp"

namespace ratrec {

struct ReconParams {
  int r_max = 6;          // numerator degree cap per variable
  int s_max = 6;          // denominator degree cap per variable
  int n_type_probes = 3;  // random slices examined for the generic type
  int n_verify = 10;      // fresh verification samples
  int retry_budget = 5;
  std::uint64_t seed = 42;
  // Extra points every candidate must match (where its denominator allows
  // evaluation); lets callers pin down behavior on specific inputs.
  std::vector<std::vector<Rat>> extra_verify_points;
};

// Componentwise maximum of detect_type over random slices x' of the last
// variable. Needs at least two variables; propagates NoFitWithinCaps.
TypeRS probe_generic_type(const Oracle& f, const ReconParams& params);

// Recursive reconstruction from axis-parallel line restrictions: detect the
// generic type along the last variable, reconstruct the slice functions at
// small integer nodes, solve the interpolation system symbolically over the
// rational-function field in the remaining variables, clear denominators,
// reduce and verify. Throws VerificationFailed after the retry budget.
RatFun reconstruct(const Oracle& f, const ReconParams& params);

// Independent cross-check: one dense homogeneous linear system over all
// monomial coefficients of the numerator and denominator up to the given
// total-degree bounds, solved from random samples.
RatFun reconstruct_dense(const Oracle& f, int num_total_degree, int den_total_degree,
                         const ReconParams& params);

}  // namespace ratrec
