#include "ratrec/upoly.hpp"

#include <sstream>

#include "ratrec/errors.hpp"

namespace ratrec {

namespace {
const Rat kZero(0);
}

UPoly::UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

UPoly UPoly::constant(const Rat& value) { return UPoly({value}); }

UPoly UPoly::monomial(const Rat& coeff, int degree) {
  std::vector<Rat> c(degree + 1, Rat(0));
  c[degree] = coeff;
  return UPoly(std::move(c));
}

UPoly UPoly::variable() { return monomial(Rat(1), 1); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& UPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

Rat UPoly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

bool UPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

UPoly UPoly::operator-() const {
  std::vector<Rat> c(coeffs_);
  for (auto& x : c) x = -x;
  return UPoly(std::move(c));
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return UPoly(std::move(c));
}

UPoly UPoly::operator*(const Rat& s) const {
  if (s == 0) return UPoly();
  std::vector<Rat> c(coeffs_);
  for (auto& x : c) x *= s;
  return UPoly(std::move(c));
}

UPoly operator*(const Rat& c, const UPoly& p) { return p * c; }

Rat UPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return UPoly();
  std::vector<Rat> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return UPoly(std::move(c));
}

UPoly UPoly::pow(unsigned exponent) const {
  UPoly result = constant(Rat(1));
  UPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

UPoly UPoly::monic() const {
  if (is_zero()) throw InputError("cannot normalize the zero polynomial to monic");
  return *this * (Rat(1) / leading());
}

UPoly UPoly::shifted_up(int k) const {
  if (is_zero()) return UPoly();
  std::vector<Rat> c(coeffs_.size() + k, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
  return UPoly(std::move(c));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& c = (*this)[k];
    if (c == 0) continue;
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0 || a != 1) out << rat_to_string(a);
    if (k > 0) {
      if (a != 1) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

UPolyDivMod divmod(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw InputError("division by the zero polynomial");
  UPoly rem = num;
  std::vector<Rat> quot(std::max(0, num.degree() - den.degree() + 1), Rat(0));
  const Rat lead = den.leading();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    Rat c = rem.leading() / lead;
    quot[shift] = c;
    rem -= UPoly::monomial(c, shift) * den;
  }
  return {UPoly(std::move(quot)), std::move(rem)};
}

UPoly gcd_upoly(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).rem;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

UPolyXgcd xgcd_upoly(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly u0 = UPoly::constant(Rat(1)), u1;
  UPoly v0, v1 = UPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly u2 = u0 - q * u1;
    u0 = std::move(u1);
    u1 = std::move(u2);
    UPoly v2 = v0 - q * v1;
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rat s = Rat(1) / r0.leading();
  return {r0 * s, u0 * s, v0 * s};
}

}  // namespace ratrec
