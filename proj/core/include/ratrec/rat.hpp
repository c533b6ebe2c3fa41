#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ratrec {

// Exact scalar arithmetic. mpq_class keeps fractions canonical (reduced,
// positive denominator) through every operation; nothing here ever rounds.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p", or "p/q" in decimal. Throws InputError on anything else
// or on a zero denominator.
Rat rat_from_string(std::string_view text);

// Inverse of rat_from_string: "p" or "p/q".
std::string rat_to_string(const Rat& value);

Rat rat_pow(const Rat& base, unsigned exponent);

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace ratrec
