#include "ratrec/mpoly_gcd.hpp"

#include "ratrec/errors.hpp"

namespace ratrec {

namespace {

// gcd up to a rational unit; callers normalize.
MPoly gcd_rec(const MPoly& a, const MPoly& b);

int pick_main_var(const MPoly& a, const MPoly& b) {
  for (int v = a.nvars() - 1; v >= 0; --v) {
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  }
  return -1;
}

// gcd of the coefficients of f viewed as a polynomial in var.
MPoly content_in(const MPoly& f, int var) {
  MPoly g(f.nvars());
  int d = f.degree_in(var);
  for (int k = 0; k <= d; ++k) {
    MPoly c = f.coeff_in(var, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? std::move(c) : gcd_rec(g, c);
    if (g.is_constant()) return MPoly::constant(f.nvars(), Rat(1));
  }
  return normalize_primitive(g);
}

// Pseudo-remainder of a by b in the variable var: lc_b^(da-db+1) * a = q*b + R.
MPoly prem(MPoly a, const MPoly& b, int var) {
  int db = b.degree_in(var);
  MPoly lb = b.coeff_in(var, db);
  int e = a.degree_in(var) - db + 1;
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    MPoly la = a.coeff_in(var, da);
    MPoly shift = MPoly::variable(a.nvars(), var).pow(static_cast<unsigned>(da - db));
    a = lb * a - la * shift * b;
    --e;
  }
  while (e-- > 0) a = lb * a;
  return a;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return MPoly::constant(a.nvars(), Rat(1));
  int var = pick_main_var(a, b);

  MPoly ca = content_in(a, var);
  MPoly cb = content_in(b, var);
  MPoly pa = divide_exact(a, ca);
  MPoly pb = divide_exact(b, cb);
  MPoly cont = gcd_rec(ca, cb);

  // A primitive part free of the main variable is a unit.
  if (pa.degree_in(var) <= 0 || pb.degree_in(var) <= 0) return cont;

  MPoly big = pa, small = pb;
  if (big.degree_in(var) < small.degree_in(var)) std::swap(big, small);
  while (!small.is_zero()) {
    MPoly r = prem(big, small, var);
    big = std::move(small);
    if (r.is_zero()) {
      small = std::move(r);
    } else {
      small = divide_exact(r, content_in(r, var));
    }
  }
  MPoly pp = divide_exact(big, content_in(big, var));
  return cont * pp;
}

}  // namespace

MPoly normalize_primitive(const MPoly& f) {
  if (f.is_zero()) return f;
  Int denom_lcm(1);
  for (const auto& [e, c] : f.terms()) denom_lcm = int_lcm(denom_lcm, c.get_den());
  Int numer_gcd(0);
  for (const auto& [e, c] : f.terms()) {
    numer_gcd = int_gcd(numer_gcd, Int(c.get_num() * (denom_lcm / c.get_den())));
  }
  Rat scale(denom_lcm, numer_gcd);
  scale.canonicalize();
  if (f.leading_coeff() < 0) scale = -scale;
  return f * scale;
}

bool try_divide(const MPoly& f, const MPoly& divisor, MPoly& quot) {
  if (f.nvars() != divisor.nvars()) throw InputError("variable count mismatch in division");
  if (divisor.is_zero()) throw InputError("division by the zero polynomial");
  int n = f.nvars();
  MPoly r = f;
  quot = MPoly(n);
  const Expt& de = divisor.leading_exponents();
  const Rat& dc = divisor.leading_coeff();
  Expt q(n);
  while (!r.is_zero()) {
    const Expt& re = r.leading_exponents();
    for (int i = 0; i < n; ++i) {
      if (re[i] < de[i]) return false;
      q[i] = re[i] - de[i];
    }
    MPoly t = MPoly::monomial(n, q, r.leading_coeff() / dc);
    quot += t;
    r -= t * divisor;
  }
  return true;
}

MPoly divide_exact(const MPoly& f, const MPoly& divisor) {
  MPoly q;
  if (!try_divide(f, divisor, q)) throw InputError("division is not exact");
  return q;
}

bool is_divisible(const MPoly& f, const MPoly& divisor) {
  MPoly q;
  return try_divide(f, divisor, q);
}

MPoly gcd_mpoly(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw InputError("variable count mismatch in gcd");
  if (a.is_zero() && b.is_zero()) return a;
  return normalize_primitive(gcd_rec(a, b));
}

MPoly lcm_mpoly(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly(a.nvars());
  MPoly g = gcd_mpoly(a, b);
  return normalize_primitive(a * divide_exact(b, g));
}

}  // namespace ratrec
