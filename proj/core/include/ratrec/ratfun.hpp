#pragma once

#include <optional>
#include <span>

#include "ratrec/mpoly.hpp"

namespace ratrec {

// Canonical reduced fraction of multivariate polynomials. The stored pair is
// fully reduced (polynomial gcd one), both parts have integer coefficients
// with coprime contents, and the denominator's grlex-leading coefficient is
// positive. Two RatFun are equal as functions iff they are structurally
// equal.
class RatFun {
public:
  RatFun() : num_(0), den_(MPoly::constant(0, Rat(1))) {}
  // Canonicalizes; throws InputError when den is zero.
  RatFun(MPoly num, MPoly den);

  static RatFun zero(int nvars);
  static RatFun constant(int nvars, const Rat& value);
  static RatFun from_poly(MPoly p);

  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  RatFun operator-() const;
  RatFun operator+(const RatFun&) const;
  RatFun operator-(const RatFun&) const;
  RatFun operator*(const RatFun&) const;
  RatFun operator/(const RatFun&) const;  // throws on zero divisor
  RatFun operator*(const Rat&) const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  bool operator==(const RatFun&) const = default;

  // Exact value, or nullopt when the denominator vanishes at the point.
  std::optional<Rat> eval(std::span<const Rat> point) const;

  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

private:
  MPoly num_, den_;
};

RatFun operator*(const Rat& c, const RatFun& f);

// Canonical form of G/H; the entry point named by the algebra layer.
RatFun reduce_fraction(const MPoly& num, const MPoly& den);

}  // namespace ratrec
