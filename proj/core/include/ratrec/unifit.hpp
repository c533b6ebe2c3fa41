#pragma once

#include <functional>
#include <span>

#include "ratrec/upoly.hpp"

namespace ratrec {

// Degrees (numerator, denominator) of a reduced monic-denominator
// representation of a univariate rational function.
struct TypeRS {
  int num_deg = 0;
  int den_deg = 0;
  bool operator==(const TypeRS&) const = default;
};

// Deterministic, side-effect-free evaluator along a line.
using LineOracle = std::function<Rat(const Rat&)>;

enum class FitStatus { Unique, NotUnique, Inconsistent };

struct FitResult {
  FitStatus status = FitStatus::Inconsistent;
  UPoly num;  // degree <= r when Unique
  UPoly den;  // monic of degree s when Unique
};

// Solves the interpolation system
//   B_0 x_i^r + ... + B_r - f(x_i)(C_1 x_i^{s-1} + ... + C_s) = f(x_i) x_i^s
// from exactly r+s+1 pairwise distinct nodes. Unique is returned precisely
// when the linear system has exactly one solution.
FitResult fit_fixed_type(std::span<const Rat> nodes, std::span<const Rat> values,
                         int r, int s);

struct DetectResult {
  TypeRS type;
  UPoly num;  // reduced pair, den monic, gcd(num, den) = 1
  UPoly den;
};

// Searches types in increasing r+s (ties broken by smaller s) until a fit
// succeeds and matches the oracle at n_verify fresh random points where the
// fitted denominator does not vanish. Throws NoFitWithinCaps.
DetectResult detect_type(const LineOracle& f, int r_max, int s_max, int n_verify,
                         std::uint64_t seed);

}  // namespace ratrec
