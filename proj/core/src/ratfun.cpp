#include "ratrec/ratfun.hpp"

#include "ratrec/errors.hpp"
#include "ratrec/mpoly_gcd.hpp"

namespace ratrec {

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) throw InputError("variable count mismatch in fraction");
  if (den_.is_zero()) throw InputError("zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.nvars(), Rat(1));
    return;
  }
  MPoly g = gcd_mpoly(num_, den_);
  if (!g.is_constant() || g.constant_term() != 1) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  // Joint scaling: integer coefficients, coprime contents, positive
  // denominator leading coefficient.
  Int denom_lcm(1);
  for (const auto& [e, c] : num_.terms()) denom_lcm = int_lcm(denom_lcm, c.get_den());
  for (const auto& [e, c] : den_.terms()) denom_lcm = int_lcm(denom_lcm, c.get_den());
  Int numer_gcd(0);
  for (const auto& [e, c] : num_.terms()) {
    numer_gcd = int_gcd(numer_gcd, Int(c.get_num() * (denom_lcm / c.get_den())));
  }
  for (const auto& [e, c] : den_.terms()) {
    numer_gcd = int_gcd(numer_gcd, Int(c.get_num() * (denom_lcm / c.get_den())));
  }
  Rat scale(denom_lcm, numer_gcd);
  scale.canonicalize();
  if (den_.leading_coeff() < 0) scale = -scale;
  num_ *= scale;
  den_ *= scale;
}

RatFun RatFun::zero(int nvars) { return RatFun(MPoly(nvars), MPoly::constant(nvars, Rat(1))); }

RatFun RatFun::constant(int nvars, const Rat& value) {
  return RatFun(MPoly::constant(nvars, value), MPoly::constant(nvars, Rat(1)));
}

RatFun RatFun::from_poly(MPoly p) {
  int n = p.nvars();
  return RatFun(std::move(p), MPoly::constant(n, Rat(1)));
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw InputError("division by the zero fraction");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator*(const Rat& c) const {
  if (c == 0) return zero(nvars());
  RatFun r = *this;
  r.num_ = r.num_ * c;
  // Rescale back to canonical integer form.
  return RatFun(std::move(r.num_), std::move(r.den_));
}

RatFun operator*(const Rat& c, const RatFun& f) { return f * c; }

std::optional<Rat> RatFun::eval(std::span<const Rat> point) const {
  Rat d = den_.eval(point);
  if (d == 0) return std::nullopt;
  return num_.eval(point) / d;
}

std::string RatFun::to_string(std::span<const std::string> names) const {
  return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
}

std::string RatFun::to_string() const {
  auto names = default_var_names(nvars());
  return to_string(names);
}

RatFun reduce_fraction(const MPoly& num, const MPoly& den) { return RatFun(num, den); }

}  // namespace ratrec
