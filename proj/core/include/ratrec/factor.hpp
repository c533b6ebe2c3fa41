#pragma once

#include <vector>

#include "ratrec/mpoly.hpp"
#include "ratrec/upoly.hpp"

namespace ratrec {

// f = unit * prod(parts[i].factor ^ parts[i].multiplicity); parts are monic,
// pairwise coprime and squarefree.
struct SquarefreePart {
  UPoly factor;
  int multiplicity;
};
struct SquarefreeDecomposition {
  Rat unit;
  std::vector<SquarefreePart> parts;
};
SquarefreeDecomposition squarefree_decomposition(const UPoly& f);

// f = unit * prod(factor ^ multiplicity) with monic irreducible factors,
// pairwise distinct. Verified internally by exact multiplication.
struct UniFactor {
  UPoly factor;
  int multiplicity;
};
struct UniFactorization {
  Rat unit;
  std::vector<UniFactor> factors;
};
UniFactorization factor_univariate(const UPoly& f);

// For H monic in the last variable: H(0,...,0,x_n) = x_n^power * prod(parts),
// with the parts monic irreducible, nonzero at the origin and pairwise
// distinct. Throws NotSquarefreeAfterShear when an irreducible factor other
// than x_n repeats, signalling the caller to pick another shear.
struct ConstantTermSplit {
  int power = 0;
  std::vector<UPoly> parts;
};
ConstantTermSplit split_constant_term(const MPoly& h);

}  // namespace ratrec
