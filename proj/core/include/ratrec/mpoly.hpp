#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ratrec/rat.hpp"
#include "ratrec/upoly.hpp"

namespace ratrec {

using Expt = std::vector<unsigned>;

// Graded-lexicographic order on exponent vectors: total degree first, ties
// broken lexicographically with earlier variables ranked higher. Terms of an
// MPoly are kept in ascending grlex order, so the leading term is the last.
struct GrlexLess {
  bool operator()(const Expt& a, const Expt& b) const;
};

// Sparse multivariate polynomial over Rat: a map from exponent vectors to
// nonzero coefficients. Zero coefficients are never stored, so structural
// equality of the term maps is polynomial equality.
class MPoly {
public:
  using TermMap = std::map<Expt, Rat, GrlexLess>;

  explicit MPoly(int nvars = 0) : nvars_(nvars) {}

  static MPoly constant(int nvars, const Rat& value);
  static MPoly variable(int nvars, int index);
  static MPoly monomial(int nvars, Expt exponents, const Rat& coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rat coeff(const Expt& exponents) const;
  Rat constant_term() const;
  // Adds c * x^e, erasing the term if the sum cancels.
  void add_term(const Expt& exponents, const Rat& coeff);

  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;
  // Total degree counting every variable except the last.
  int prefix_total_degree() const;

  const Expt& leading_exponents() const;  // grlex maximum; throws on zero
  const Rat& leading_coeff() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly&) const;
  MPoly operator-(const MPoly&) const;
  MPoly operator*(const MPoly&) const;
  MPoly operator*(const Rat&) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const Rat& s) { return *this = *this * s; }
  bool operator==(const MPoly&) const = default;

  Rat eval(std::span<const Rat> point) const;
  MPoly pow(unsigned exponent) const;

  // Homogeneous part of the given total degree (possibly zero).
  MPoly homogeneous_component(int degree) const;
  // Lowest-degree nonzero homogeneous part; throws on zero input.
  MPoly initial_form() const;

  // Views with respect to one variable.
  // Coefficient of var^power, exponent of var zeroed, variable count kept.
  MPoly coeff_in(int var, int power) const;

  // Views with respect to the last variable; coefficients drop it.
  int degree_in_last() const { return degree_in(nvars_ - 1); }
  MPoly coeff_of_last(int power) const;  // nvars-1 variables
  static MPoly from_last_coeffs(std::span<const MPoly> coeffs);
  // Same polynomial in one more variable (new last exponent 0).
  MPoly append_var() const;

  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;  // default names x1..xn

private:
  int nvars_;
  TermMap terms_;
};

MPoly operator*(const Rat& c, const MPoly& p);

std::vector<std::string> default_var_names(int nvars);

// Direction vector of a plane through the origin in parametric form
// x_i = a_i * u (i < n), x_n = v.
struct PlaneDir {
  std::vector<Rat> coords;  // n-1 entries
};

struct AffineLine {
  std::vector<Rat> base;
  std::vector<Rat> dir;  // nonzero
};

// Ring homomorphism sending variable i to images[i]; all images must share a
// common variable count, which becomes the result's.
MPoly substitute(const MPoly& f, std::span<const MPoly> images);

// x_i -> x_i + offsets[i] * x_last for i < n-1, x_last fixed.
MPoly shear_last(const MPoly& f, std::span<const Rat> offsets);

// x_i -> x_i + point[i].
MPoly translate(const MPoly& f, std::span<const Rat> point);

// f(a_1 u, ..., a_{n-1} u, v) as a polynomial in two variables (u, v).
MPoly restrict_to_plane(const MPoly& f, const PlaneDir& dir);

// f(base + t * dir) as a polynomial in the line parameter t.
UPoly restrict_to_line(const MPoly& f, const AffineLine& line);

// f with every variable except the last set to zero, as a univariate
// polynomial in the last variable.
UPoly last_var_section(const MPoly& f);

// The polynomial must be univariate in `var` (all other exponents zero).
UPoly upoly_in_var(const MPoly& f, int var);
MPoly mpoly_from_upoly(const UPoly& p, int nvars, int var);

// Division with remainder in K[x_1..x_{n-1}][x_n] by a divisor that is monic
// in the last variable: num = quot * den + rem, deg_last rem < deg_last den.
struct DivModLast {
  MPoly quot;
  MPoly rem;
};
DivModLast divmod_last(const MPoly& num, const MPoly& den);

}  // namespace ratrec
