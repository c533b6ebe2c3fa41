#include "ratrec/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ratrec/errors.hpp"

namespace ratrec {

namespace {

unsigned expt_sum(const Expt& e) {
  unsigned s = 0;
  for (unsigned x : e) s += x;
  return s;
}

void check_same_nvars(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw InputError("variable count mismatch: " + std::to_string(a.nvars()) +
                     " vs " + std::to_string(b.nvars()));
  }
}

}  // namespace

bool GrlexLess::operator()(const Expt& a, const Expt& b) const {
  unsigned da = expt_sum(a), db = expt_sum(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly MPoly::constant(int nvars, const Rat& value) {
  MPoly p(nvars);
  if (value != 0) p.terms_.emplace(Expt(nvars, 0), value);
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw InputError("variable index out of range");
  Expt e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, std::move(e), Rat(1));
}

MPoly MPoly::monomial(int nvars, Expt exponents, const Rat& coeff) {
  if (static_cast<int>(exponents.size()) != nvars) {
    throw InputError("exponent vector length does not match variable count");
  }
  MPoly p(nvars);
  if (coeff != 0) p.terms_.emplace(std::move(exponents), coeff);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && expt_sum(terms_.begin()->first) == 0;
}

Rat MPoly::coeff(const Expt& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MPoly::constant_term() const { return coeff(Expt(nvars_, 0)); }

void MPoly::add_term(const Expt& exponents, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(expt_sum(terms_.rbegin()->first));
}

int MPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d < 0 ? -1 : d;
}

int MPoly::prefix_total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = static_cast<int>(expt_sum(e)) - static_cast<int>(e.back());
    d = std::max(d, s);
  }
  return d;
}

const Expt& MPoly::leading_exponents() const {
  if (terms_.empty()) throw InputError("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rat& MPoly::leading_coeff() const {
  if (terms_.empty()) throw InputError("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_same_nvars(*this, o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  check_same_nvars(*this, o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_same_nvars(*this, o);
  MPoly r(nvars_);
  Expt e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::operator*(const Rat& s) const {
  MPoly r(nvars_);
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

Rat MPoly::eval(std::span<const Rat> point) const {
  if (static_cast<int>(point.size()) != nvars_) {
    throw InputError("evaluation point dimension mismatch");
  }
  // Power tables per variable up to the needed exponent.
  std::vector<std::vector<Rat>> pows(nvars_);
  for (int i = 0; i < nvars_; ++i) pows[i].push_back(Rat(1));
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i) {
      auto& table = pows[i];
      while (table.size() <= e[i]) table.push_back(table.back() * point[i]);
      if (e[i] > 0) t *= table[e[i]];
    }
    acc += t;
  }
  return acc;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result = constant(nvars_, Rat(1));
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

MPoly MPoly::homogeneous_component(int degree) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(expt_sum(e)) == degree) r.terms_.emplace(e, c);
  }
  return r;
}

MPoly MPoly::initial_form() const {
  if (terms_.empty()) throw InputError("zero polynomial has no initial form");
  return homogeneous_component(static_cast<int>(expt_sum(terms_.begin()->first)));
}

MPoly MPoly::coeff_in(int var, int power) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(e[var]) != power) continue;
    Expt f = e;
    f[var] = 0;
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

MPoly MPoly::coeff_of_last(int power) const {
  MPoly r(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(e.back()) != power) continue;
    Expt f(e.begin(), e.end() - 1);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

MPoly MPoly::from_last_coeffs(std::span<const MPoly> coeffs) {
  if (coeffs.empty()) throw InputError("empty coefficient list");
  int m = coeffs[0].nvars();
  MPoly r(m + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].nvars() != m) throw InputError("coefficient variable counts differ");
    for (const auto& [e, c] : coeffs[k].terms()) {
      Expt f(e);
      f.push_back(static_cast<unsigned>(k));
      r.terms_.emplace(std::move(f), c);
    }
  }
  return r;
}

MPoly MPoly::append_var() const {
  MPoly r(nvars_ + 1);
  for (const auto& [e, c] : terms_) {
    Expt f(e);
    f.push_back(0);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (static_cast<int>(names.size()) != nvars_) {
    throw InputError("variable name count mismatch");
  }
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat a = it->second;
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
    bool has_var = expt_sum(it->first) > 0;
    bool printed = false;
    if (!has_var || a != 1) {
      out << rat_to_string(a);
      printed = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      unsigned e = it->first[i];
      if (e == 0) continue;
      if (printed) out << "*";
      out << names[i];
      if (e > 1) out << "^" << e;
      printed = true;
    }
  }
  return out.str();
}

std::string MPoly::to_string() const {
  auto names = default_var_names(nvars_);
  return to_string(names);
}

std::vector<std::string> default_var_names(int nvars) {
  std::vector<std::string> names(nvars);
  for (int i = 0; i < nvars; ++i) names[i] = "x" + std::to_string(i + 1);
  return names;
}

MPoly substitute(const MPoly& f, std::span<const MPoly> images) {
  if (static_cast<int>(images.size()) != f.nvars()) {
    throw InputError("substitution image count mismatch");
  }
  int m = images.empty() ? 0 : images[0].nvars();
  for (const auto& g : images) {
    if (g.nvars() != m) throw InputError("substitution images have mixed variable counts");
  }
  std::vector<std::vector<MPoly>> pows(f.nvars());
  for (int i = 0; i < f.nvars(); ++i) pows[i].push_back(MPoly::constant(m, Rat(1)));
  MPoly r(m);
  for (const auto& [e, c] : f.terms()) {
    MPoly t = MPoly::constant(m, c);
    for (int i = 0; i < f.nvars(); ++i) {
      auto& table = pows[i];
      while (table.size() <= e[i]) table.push_back(table.back() * images[i]);
      if (e[i] > 0) t *= table[e[i]];
    }
    r += t;
  }
  return r;
}

MPoly shear_last(const MPoly& f, std::span<const Rat> offsets) {
  int n = f.nvars();
  if (static_cast<int>(offsets.size()) != n - 1) {
    throw InputError("shear offset count must be one less than the variable count");
  }
  std::vector<MPoly> images;
  images.reserve(n);
  for (int i = 0; i < n - 1; ++i) {
    images.push_back(MPoly::variable(n, i) + MPoly::variable(n, n - 1) * offsets[i]);
  }
  images.push_back(MPoly::variable(n, n - 1));
  return substitute(f, images);
}

MPoly translate(const MPoly& f, std::span<const Rat> point) {
  int n = f.nvars();
  if (static_cast<int>(point.size()) != n) {
    throw InputError("translation point dimension mismatch");
  }
  std::vector<MPoly> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) {
    images.push_back(MPoly::variable(n, i) + MPoly::constant(n, point[i]));
  }
  return substitute(f, images);
}

MPoly restrict_to_plane(const MPoly& f, const PlaneDir& dir) {
  int n = f.nvars();
  if (n < 2) throw InputError("plane restriction needs at least two variables");
  if (static_cast<int>(dir.coords.size()) != n - 1) {
    throw InputError("plane direction must have one entry per non-last variable");
  }
  MPoly r(2);
  for (const auto& [e, c] : f.terms()) {
    Rat coeff = c;
    unsigned u = 0;
    for (int i = 0; i < n - 1; ++i) {
      if (e[i] == 0) continue;
      coeff *= rat_pow(dir.coords[i], e[i]);
      u += e[i];
    }
    if (coeff == 0) continue;
    r.add_term({u, e.back()}, coeff);
  }
  return r;
}

UPoly restrict_to_line(const MPoly& f, const AffineLine& line) {
  int n = f.nvars();
  if (static_cast<int>(line.base.size()) != n || static_cast<int>(line.dir.size()) != n) {
    throw InputError("line dimension mismatch");
  }
  bool dir_zero = true;
  for (const auto& d : line.dir) {
    if (d != 0) dir_zero = false;
  }
  if (dir_zero) throw InputError("line direction must be nonzero");
  std::vector<std::vector<UPoly>> pows(n);
  for (int i = 0; i < n; ++i) pows[i].push_back(UPoly::constant(Rat(1)));
  UPoly r;
  for (const auto& [e, c] : f.terms()) {
    UPoly t = UPoly::constant(c);
    for (int i = 0; i < n; ++i) {
      auto& table = pows[i];
      while (table.size() <= e[i]) {
        table.push_back(table.back() * UPoly({line.base[i], line.dir[i]}));
      }
      if (e[i] > 0) t *= table[e[i]];
    }
    r += t;
  }
  return r;
}

UPoly last_var_section(const MPoly& f) {
  int n = f.nvars();
  std::vector<Rat> coeffs(std::max(0, f.degree_in_last()) + 1, Rat(0));
  for (const auto& [e, c] : f.terms()) {
    bool prefix_zero = true;
    for (int i = 0; i < n - 1; ++i) {
      if (e[i] != 0) prefix_zero = false;
    }
    if (prefix_zero) coeffs[e.back()] = c;
  }
  return UPoly(std::move(coeffs));
}

UPoly upoly_in_var(const MPoly& f, int var) {
  std::vector<Rat> coeffs(std::max(0, f.degree_in(var)) + 1, Rat(0));
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < f.nvars(); ++i) {
      if (i != var && e[i] != 0) {
        throw InputError("polynomial is not univariate in the requested variable");
      }
    }
    coeffs[e[var]] = c;
  }
  return UPoly(std::move(coeffs));
}

MPoly mpoly_from_upoly(const UPoly& p, int nvars, int var) {
  MPoly r(nvars);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[k] == 0) continue;
    Expt e(nvars, 0);
    e[var] = static_cast<unsigned>(k);
    r.add_term(e, p[k]);
  }
  return r;
}

DivModLast divmod_last(const MPoly& num, const MPoly& den) {
  if (num.nvars() != den.nvars()) throw InputError("variable count mismatch in division");
  int n = den.nvars();
  int d = den.degree_in_last();
  if (d < 1) throw InputError("divisor must have positive degree in the last variable");
  MPoly lead = den.coeff_of_last(d);
  if (!lead.is_constant() || lead.constant_term() != 1) {
    throw InputError("divisor is not monic in the last variable");
  }
  int dn = num.degree_in_last();
  std::vector<MPoly> rem;
  rem.reserve(dn + 1);
  for (int k = 0; k <= dn; ++k) rem.push_back(num.coeff_of_last(k));
  std::vector<MPoly> denc;
  denc.reserve(d + 1);
  for (int k = 0; k <= d; ++k) denc.push_back(den.coeff_of_last(k));
  std::vector<MPoly> quot(std::max(0, dn - d + 1), MPoly(n - 1));

  for (int m = dn; m >= d; --m) {
    MPoly t = rem[m];
    if (t.is_zero()) continue;
    quot[m - d] = t;
    for (int j = 0; j <= d; ++j) rem[m - d + j] -= t * denc[j];
  }
  MPoly q = quot.empty() ? MPoly(n) : MPoly::from_last_coeffs(quot);
  rem.resize(static_cast<std::size_t>(d), MPoly(n - 1));
  MPoly r = MPoly::from_last_coeffs(rem);
  return {std::move(q), std::move(r)};
}

}  // namespace ratrec
