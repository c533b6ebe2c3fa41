#pragma once

#include <string>
#include <string_view>

#include "ratrec/certify.hpp"

namespace ratrec {

// Certificate interchange format: a single JSON document whose polynomials
// are lists of [exponent-vector, numerator-string, denominator-string]
// triples with all coefficient integers in decimal strings. The output is
// byte-deterministic: terms appear in ascending graded-lexicographic order
// and object keys in a fixed order.
std::string certificate_to_json(const Certificate& cert, int indent = 2);

// Parses and structurally validates; invariant checking is a separate step
// (recheck_certificate).
Certificate certificate_from_json(std::string_view text);

}  // namespace ratrec
