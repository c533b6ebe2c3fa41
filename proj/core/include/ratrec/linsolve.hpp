#pragma once

#include <vector>

#include "ratrec/rat.hpp"

namespace ratrec {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

// Exact description of the solution set of A x = b.
struct LinearSolveResult {
  enum class Kind {
    Unique,        // exactly one solution
    Singular,      // consistent, solution set of positive dimension
    Inconsistent,  // no solution
  };
  Kind kind;
  // A particular solution when consistent (free variables set to zero).
  RatVector solution;
  // Basis of the homogeneous nullspace when Singular.
  std::vector<RatVector> nullspace;
};

// Fraction-free (Bareiss) elimination over the integers after clearing row
// denominators; back-substitution over the rationals. Exact throughout.
LinearSolveResult solve_linear(const RatMatrix& a, const RatVector& b);

}  // namespace ratrec
