#pragma once

#include "ratrec/mpoly.hpp"

namespace ratrec {

// Scales a nonzero polynomial so its coefficients are integers with content
// one and the grlex-leading coefficient is positive. Zero maps to zero.
MPoly normalize_primitive(const MPoly& f);

// Exact multivariate division. Returns true and sets quot when divisor | f.
bool try_divide(const MPoly& f, const MPoly& divisor, MPoly& quot);

// f / divisor, throwing if the division is not exact.
MPoly divide_exact(const MPoly& f, const MPoly& divisor);

bool is_divisible(const MPoly& f, const MPoly& divisor);

// Greatest common divisor, normalized primitive with positive leading
// coefficient; gcd(0, 0) = 0. Primitive polynomial remainder sequences over
// one variable at a time.
MPoly gcd_mpoly(const MPoly& a, const MPoly& b);

// lcm(a, b) normalized like gcd_mpoly; lcm with zero is zero.
MPoly lcm_mpoly(const MPoly& a, const MPoly& b);

}  // namespace ratrec
