#include "ratrec/factor.hpp"

#include <algorithm>
#include <cassert>

#include "ratrec/errors.hpp"
#include "ratrec/rng.hpp"

namespace ratrec {

namespace {

// ----------------------------------------------------------------------
// Dense integer polynomials (lowest degree first)
// ----------------------------------------------------------------------

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  ztrim(c);
  return c;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  ztrim(c);
  return c;
}

void zadd_inplace(ZPoly& a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Int(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  ztrim(a);
}

void zmod(ZPoly& f, const Int& m) {
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  }
  ztrim(f);
}

void zmod_symmetric(ZPoly& f, const Int& m) {
  Int half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(f);
}

// Division by a divisor monic modulo m (used with genuinely monic divisors).
void zdivmod_mod(const ZPoly& num, const ZPoly& den, const Int& m, ZPoly& quot,
                 ZPoly& rem) {
  assert(!den.empty() && den.back() == 1);
  rem = num;
  zmod(rem, m);
  quot.assign(std::max<std::size_t>(rem.size() >= den.size() ? rem.size() - den.size() + 1 : 0, 0), Int(0));
  int dd = zdeg(den);
  while (zdeg(rem) >= dd) {
    int shift = zdeg(rem) - dd;
    Int c = rem.back();
    quot[shift] = c;
    for (int i = 0; i <= dd; ++i) {
      rem[shift + i] -= c * den[i];
    }
    zmod(rem, m);
  }
  zmod(quot, m);
}

// Exact division in Z[x] by a monic divisor; returns false when not exact.
bool zdivide_monic(const ZPoly& num, const ZPoly& den, ZPoly& quot) {
  assert(!den.empty() && den.back() == 1);
  ZPoly rem = num;
  quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
  int dd = zdeg(den);
  while (zdeg(rem) >= dd) {
    int shift = zdeg(rem) - dd;
    Int c = rem.back();
    quot[shift] = c;
    for (int i = 0; i <= dd; ++i) rem[shift + i] -= c * den[i];
    ztrim(rem);
  }
  ztrim(quot);
  return rem.empty();
}

UPoly zpoly_to_upoly(const ZPoly& f) {
  std::vector<Rat> c;
  c.reserve(f.size());
  for (const auto& x : f) c.emplace_back(x);
  return UPoly(std::move(c));
}

// ----------------------------------------------------------------------
// Arithmetic mod a small prime p
// ----------------------------------------------------------------------

using PPoly = std::vector<long>;

long pnorm(long x, long p) {
  x %= p;
  return x < 0 ? x + p : x;
}

long pinv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = pnorm(a, p);
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  assert(r == 1);
  return pnorm(t, p);
}

void ptrim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int pdeg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<long>((c[i + j] + static_cast<__int128>(a[i]) * b[j]) % p);
    }
  }
  ptrim(c);
  return c;
}

PPoly psub(const PPoly& a, const PPoly& b, long p) {
  PPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = pnorm(c[i] - b[i], p);
  ptrim(c);
  return c;
}

void pdivmod(const PPoly& num, const PPoly& den, long p, PPoly& quot, PPoly& rem) {
  assert(!den.empty());
  rem = num;
  quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  long inv = pinv(den.back(), p);
  int dd = pdeg(den);
  while (pdeg(rem) >= dd) {
    int shift = pdeg(rem) - dd;
    long c = static_cast<long>(static_cast<__int128>(rem.back()) * inv % p);
    quot[shift] = c;
    for (int i = 0; i <= dd; ++i) {
      rem[shift + i] = pnorm(rem[shift + i] - static_cast<long>(static_cast<__int128>(c) * den[i] % p), p);
    }
    ptrim(rem);
  }
  ptrim(quot);
}

PPoly pmod(const PPoly& a, const PPoly& f, long p) {
  PPoly q, r;
  pdivmod(a, f, p, q, r);
  return r;
}

PPoly pmonic(const PPoly& f, long p) {
  if (f.empty()) return f;
  long inv = pinv(f.back(), p);
  PPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    r[i] = static_cast<long>(static_cast<__int128>(f[i]) * inv % p);
  }
  return r;
}

PPoly pgcd(PPoly a, PPoly b, long p) {
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : pmonic(a, p);
}

// Extended gcd mod p: g = u*a + v*b, g monic.
void pxgcd(const PPoly& a, const PPoly& b, long p, PPoly& g, PPoly& u, PPoly& v) {
  PPoly r0 = a, r1 = b;
  PPoly u0 = {1}, u1 = {};
  PPoly v0 = {}, v1 = {1};
  while (!r1.empty()) {
    PPoly q, r;
    pdivmod(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    PPoly u2 = psub(u0, pmul(q, u1, p), p);
    u0 = std::move(u1);
    u1 = std::move(u2);
    PPoly v2 = psub(v0, pmul(q, v1, p), p);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  long inv = pinv(r0.back(), p);
  auto scale = [&](PPoly& f) {
    for (auto& c : f) c = static_cast<long>(static_cast<__int128>(c) * inv % p);
  };
  g = r0;
  u = u0;
  v = v0;
  scale(g);
  scale(u);
  scale(v);
}

PPoly ppowmod(const PPoly& base, const Int& exp, const PPoly& f, long p) {
  PPoly result = {1};
  PPoly b = pmod(base, f, p);
  for (long bit = static_cast<long>(mpz_sizeinbase(exp.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    result = pmod(pmul(result, result, p), f, p);
    if (mpz_tstbit(exp.get_mpz_t(), bit)) result = pmod(pmul(result, b, p), f, p);
  }
  return result;
}

PPoly pderivative(const PPoly& f, long p) {
  if (f.size() <= 1) return {};
  PPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) {
    d[i - 1] = static_cast<long>(static_cast<__int128>(f[i]) * (i % p) % p);
  }
  ptrim(d);
  return d;
}

bool small_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ----------------------------------------------------------------------
// Factorization mod p: distinct-degree then Cantor-Zassenhaus splitting
// ----------------------------------------------------------------------

void equal_degree_split(const PPoly& f, int d, long p, Rng& rng, std::vector<PPoly>& out) {
  int r = pdeg(f) / d;
  if (r == 1) {
    out.push_back(f);
    return;
  }
  Int pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  Int half_order = (pd - 1) / 2;
  for (;;) {
    PPoly a(pdeg(f), 0);
    for (auto& c : a) c = rng.uniform(0, p - 1);
    ptrim(a);
    if (pdeg(a) < 1) continue;
    PPoly b = ppowmod(a, half_order, f, p);
    if (b.empty()) continue;
    b[0] = pnorm(b[0] - 1, p);
    ptrim(b);
    PPoly g = pgcd(b, f, p);
    if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
      PPoly q, r2;
      pdivmod(f, g, p, q, r2);
      assert(r2.empty());
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(pmonic(q, p), d, p, rng, out);
      return;
    }
  }
}

std::vector<PPoly> factor_mod_p(const PPoly& f, long p, Rng& rng) {
  std::vector<PPoly> out;
  PPoly rest = pmonic(f, p);
  PPoly h = {0, 1};  // x
  int k = 0;
  while (pdeg(rest) > 0) {
    ++k;
    if (2 * k > pdeg(rest)) {
      out.push_back(rest);
      break;
    }
    h = ppowmod(h, Int(p), rest, p);
    PPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = pnorm(hx[1] - 1, p);
    ptrim(hx);
    PPoly g = pgcd(hx, rest, p);
    if (pdeg(g) > 0) {
      equal_degree_split(g, k, p, rng, out);
      PPoly q, r;
      pdivmod(rest, g, p, q, r);
      assert(r.empty());
      rest = pmonic(q, p);
      h = pmod(h, rest, p);
    }
  }
  return out;
}

// ----------------------------------------------------------------------
// Multifactor Hensel lifting (quadratic steps, binary factor tree)
// ----------------------------------------------------------------------

struct HenselNode {
  ZPoly g, h, s, t;
  int left = -1, right = -1;  // child node indices; -1 marks a leaf side
};

ZPoly p2z(const PPoly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  return r;
}

int build_hensel_tree(std::vector<HenselNode>& nodes, const std::vector<PPoly>& factors,
                      long p, int lo, int hi) {
  int idx = static_cast<int>(nodes.size());
  nodes.emplace_back();
  int mid = (lo + hi) / 2;
  PPoly g = factors[lo];
  for (int i = lo + 1; i < mid; ++i) g = pmul(g, factors[i], p);
  PPoly h = factors[mid];
  for (int i = mid + 1; i < hi; ++i) h = pmul(h, factors[i], p);
  PPoly one, u, v;
  pxgcd(g, h, p, one, u, v);
  assert(pdeg(one) == 0);

  nodes[idx].g = p2z(g);
  nodes[idx].h = p2z(h);
  nodes[idx].s = p2z(u);
  nodes[idx].t = p2z(v);
  if (mid - lo >= 2) nodes[idx].left = build_hensel_tree(nodes, factors, p, lo, mid);
  if (hi - mid >= 2) nodes[idx].right = build_hensel_tree(nodes, factors, p, mid, hi);
  return idx;
}

// One quadratic step: modulus m -> m^2 against the given target.
void hensel_step(HenselNode& node, const ZPoly& target, const Int& m) {
  Int m2 = m * m;
  ZPoly e = zsub(target, zmul(node.g, node.h));
  zmod(e, m2);
  ZPoly q, r;
  zdivmod_mod(zmul(node.s, e), node.h, m2, q, r);
  ZPoly gstar = node.g;
  zadd_inplace(gstar, zmul(node.t, e));
  zadd_inplace(gstar, zmul(q, node.g));
  zmod(gstar, m2);
  ZPoly hstar = node.h;
  zadd_inplace(hstar, r);
  zmod(hstar, m2);

  // Lift the Bezout pair alongside.
  ZPoly b = zsub(zmul(node.s, gstar), ZPoly{Int(1)});
  zadd_inplace(b, zmul(node.t, hstar));
  zmod(b, m2);
  ZPoly c, d;
  zdivmod_mod(zmul(node.s, b), hstar, m2, c, d);
  ZPoly sstar = zsub(node.s, d);
  zmod(sstar, m2);
  ZPoly tstar = zsub(node.t, zmul(node.t, b));
  tstar = zsub(tstar, zmul(c, gstar));
  zmod(tstar, m2);

  node.g = std::move(gstar);
  node.h = std::move(hstar);
  node.s = std::move(sstar);
  node.t = std::move(tstar);
}

void hensel_lift_tree(std::vector<HenselNode>& nodes, int idx, const ZPoly& target,
                      const Int& m) {
  hensel_step(nodes[idx], target, m);
  if (nodes[idx].left >= 0) hensel_lift_tree(nodes, nodes[idx].left, nodes[idx].g, m);
  if (nodes[idx].right >= 0) hensel_lift_tree(nodes, nodes[idx].right, nodes[idx].h, m);
}

void collect_leaves(const std::vector<HenselNode>& nodes, int idx,
                    std::vector<ZPoly>& out) {
  const auto& node = nodes[idx];
  if (node.left < 0) {
    out.push_back(node.g);
  } else {
    collect_leaves(nodes, node.left, out);
  }
  if (node.right < 0) {
    out.push_back(node.h);
  } else {
    collect_leaves(nodes, node.right, out);
  }
}

// ----------------------------------------------------------------------
// Zassenhaus driver for monic squarefree integer polynomials
// ----------------------------------------------------------------------

Int binomial(int n, int k) {
  Int r(1);
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

Int factor_coeff_bound(const ZPoly& f) {
  Int norm2(0);
  for (const auto& c : f) norm2 += c * c;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  int n = zdeg(f);
  return binomial(n, n / 2) * root;
}

// Deterministic choice: the smallest odd prime keeping the reduction
// squarefree (monic input, so the degree never drops).
long select_prime(const ZPoly& f) {
  for (long p = 3;; p += 2) {
    if (!small_prime(p)) continue;
    PPoly fp(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      fp[i] = static_cast<long>(mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p)));
    }
    ptrim(fp);
    if (pdeg(fp) != zdeg(f)) continue;
    PPoly g = pgcd(fp, pderivative(fp, p), p);
    if (pdeg(g) == 0) return p;
  }
}

std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<ZPoly> zassenhaus_monic(const ZPoly& input) {
  if (zdeg(input) == 1) return {input};

  long p = select_prime(input);
  PPoly fp(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    fp[i] = static_cast<long>(mpz_fdiv_ui(input[i].get_mpz_t(), static_cast<unsigned long>(p)));
  }
  Rng rng(derive_seed(0xfac70ULL + static_cast<std::uint64_t>(p), input.size()));
  std::vector<PPoly> modular = factor_mod_p(fp, p, rng);
  std::sort(modular.begin(), modular.end());
  if (modular.size() == 1) return {input};

  // Lift to p^l beyond twice the factor coefficient bound.
  Int bound = 2 * factor_coeff_bound(input);
  std::vector<HenselNode> nodes;
  build_hensel_tree(nodes, modular, p, 0, static_cast<int>(modular.size()));
  Int m(p);
  while (m <= bound) {
    hensel_lift_tree(nodes, 0, input, m);
    m = m * m;
  }
  std::vector<ZPoly> lifted;
  collect_leaves(nodes, 0, lifted);

  // Exhaustive subset recombination with trial division.
  std::vector<int> live(lifted.size());
  for (std::size_t i = 0; i < lifted.size(); ++i) live[i] = static_cast<int>(i);
  std::vector<ZPoly> result;
  ZPoly rest = input;
  int size = 1;
  while (2 * size <= static_cast<int>(live.size())) {
    bool found = false;
    std::vector<int> comb = first_combination(size);
    do {
      ZPoly candidate = {Int(1)};
      for (int ci : comb) candidate = zmul(candidate, lifted[live[ci]]);
      zmod_symmetric(candidate, m);
      ZPoly quot;
      if (zdivide_monic(rest, candidate, quot)) {
        result.push_back(candidate);
        rest = std::move(quot);
        std::vector<int> remaining;
        for (std::size_t i = 0; i < live.size(); ++i) {
          if (std::find(comb.begin(), comb.end(), static_cast<int>(i)) == comb.end()) {
            remaining.push_back(live[i]);
          }
        }
        live = std::move(remaining);
        found = true;
        break;
      }
    } while (next_combination(comb, static_cast<int>(live.size())));
    if (!found) ++size;
  }
  if (zdeg(rest) > 0) result.push_back(rest);
  return result;
}

// Monic squarefree polynomial over the rationals -> monic irreducible parts.
std::vector<UPoly> factor_squarefree_monic(const UPoly& s) {
  if (s.degree() == 1) return {s};
  // Clear denominators, then substitute x -> x/b to reach a monic integer
  // polynomial; translate factors back afterwards.
  Int l(1);
  for (const auto& c : s.coeffs()) l = int_lcm(l, c.get_den());
  ZPoly a(s.degree() + 1);
  for (int i = 0; i <= s.degree(); ++i) a[i] = s[i].get_num() * (l / s[i].get_den());
  Int b = a.back();
  int d = zdeg(a);
  ZPoly w(a.size());
  // w(x) = b^(d-1) a(x/b): coefficient i picks up b^(d-1-i).
  for (int i = 0; i <= d; ++i) {
    Int scale(1);
    for (int k = 0; k < d - 1 - i; ++k) scale *= b;
    w[i] = (i == d) ? Int(1) : a[i] * scale;
  }

  std::vector<UPoly> out;
  for (const ZPoly& wk : zassenhaus_monic(w)) {
    // Translate back: monic part of wk(b x).
    int dk = zdeg(wk);
    std::vector<Rat> c(dk + 1);
    Int power(1);
    for (int i = 0; i <= dk; ++i) {
      c[i] = Rat(wk[i] * power);
      power *= b;
    }
    UPoly factor = UPoly(std::move(c)).monic();
    out.push_back(std::move(factor));
  }
  return out;
}

bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

SquarefreeDecomposition squarefree_decomposition(const UPoly& f) {
  if (f.is_zero()) throw InputError("cannot decompose the zero polynomial");
  SquarefreeDecomposition out;
  out.unit = f.leading();
  UPoly m = f.monic();
  if (m.degree() == 0) return out;

  // Yun's algorithm; valid in characteristic zero.
  UPoly g = gcd_upoly(m, m.derivative());
  UPoly w = divmod(m, g).quot;
  int i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd_upoly(w, g);
    UPoly z = divmod(w, y).quot;
    if (z.degree() > 0) out.parts.push_back({z.monic(), i});
    w = std::move(y);
    g = divmod(g, w).quot;
    ++i;
  }
  return out;
}

UniFactorization factor_univariate(const UPoly& f) {
  if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
  UniFactorization out;
  out.unit = f.leading();
  if (f.degree() == 0) return out;

  auto squarefree = squarefree_decomposition(f);
  for (const auto& part : squarefree.parts) {
    for (UPoly& irr : factor_squarefree_monic(part.factor)) {
      out.factors.push_back({std::move(irr), part.multiplicity});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const UniFactor& a, const UniFactor& b) { return upoly_less(a.factor, b.factor); });

  UPoly check = UPoly::constant(out.unit);
  for (const auto& [factor, mult] : out.factors) {
    check *= factor.pow(static_cast<unsigned>(mult));
  }
  if (!(check == f)) {
    throw std::logic_error("factorization failed to reproduce its input");
  }
  return out;
}

ConstantTermSplit split_constant_term(const MPoly& h) {
  int d = h.degree_in_last();
  if (d < 0) throw InputError("zero polynomial");
  MPoly lead = h.coeff_of_last(d);
  if (!lead.is_constant() || lead.constant_term() != 1) {
    throw InputError("polynomial is not monic in the last variable");
  }
  UPoly section = last_var_section(h);

  ConstantTermSplit out;
  int e = 0;
  while (section[e] == 0) ++e;
  out.power = e;
  std::vector<Rat> shifted(section.coeffs().begin() + e, section.coeffs().end());
  UPoly rest(std::move(shifted));
  if (rest.degree() == 0) return out;

  auto factored = factor_univariate(rest);
  for (auto& [factor, mult] : factored.factors) {
    if (mult > 1) {
      throw NotSquarefreeAfterShear(
          "constant-term section has a repeated factor besides the pure power; re-shear");
    }
    out.parts.push_back(std::move(factor));
  }
  return out;
}

}  // namespace ratrec
