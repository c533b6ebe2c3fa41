#pragma once

#include <functional>
#include <span>

#include "ratrec/rat.hpp"

namespace ratrec {

// Deterministic, side-effect-free black-box function from Q^n to Q, total on
// every point it is asked about.
struct Oracle {
  int nvars = 0;
  std::function<Rat(std::span<const Rat>)> eval;
};

}  // namespace ratrec
