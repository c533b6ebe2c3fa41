#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ratrec/rat.hpp"

namespace ratrec {

// Dense univariate polynomial over Rat, coefficients stored lowest degree
// first. The zero polynomial has an empty coefficient list and degree -1.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  UPoly(std::initializer_list<Rat> coeffs);

  static UPoly constant(const Rat& value);
  static UPoly monomial(const Rat& coeff, int degree);
  static UPoly variable();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  // Coefficient of x^k; zero beyond the degree.
  const Rat& operator[](int k) const;
  Rat leading() const;
  bool is_monic() const;

  UPoly operator-() const;
  UPoly operator+(const UPoly&) const;
  UPoly operator-(const UPoly&) const;
  UPoly operator*(const UPoly&) const;
  UPoly operator*(const Rat&) const;
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  bool operator==(const UPoly&) const = default;

  Rat eval(const Rat& x) const;
  UPoly derivative() const;
  UPoly pow(unsigned exponent) const;
  UPoly monic() const;  // throws on zero

  // x^k * this
  UPoly shifted_up(int k) const;

  std::string to_string(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Rat> coeffs_;
};

UPoly operator*(const Rat& c, const UPoly& p);

// Field division: num = quot * den + rem with deg rem < deg den.
struct UPolyDivMod {
  UPoly quot;
  UPoly rem;
};
UPolyDivMod divmod(const UPoly& num, const UPoly& den);

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd_upoly(const UPoly& a, const UPoly& b);

// Extended gcd: g = u*a + v*b with g the monic gcd.
struct UPolyXgcd {
  UPoly g, u, v;
};
UPolyXgcd xgcd_upoly(const UPoly& a, const UPoly& b);

}  // namespace ratrec
