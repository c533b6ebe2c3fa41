#pragma once

#include <span>
#include <vector>

#include "ratrec/mpoly.hpp"
#include "ratrec/upoly.hpp"

namespace ratrec {

// Element of K[[x_1..x_{n-1}]][x_n], truncated at total degree `trunc` in the
// series variables. Stored as coefficients of x_n powers; every coefficient
// lives in n-1 variables and obeys the degree bound. Arithmetic discards all
// series terms above the truncation order.
class SeriesPoly {
public:
  SeriesPoly(int nvars, int trunc);

  static SeriesPoly from_poly(const MPoly& f, int trunc);

  int nvars() const { return nvars_; }
  int trunc() const { return trunc_; }
  int degree_in_main() const;
  bool is_zero() const;
  // Coefficient of x_n^k as a polynomial in the first n-1 variables.
  const MPoly& coeff(int k) const;
  bool is_monic() const;

  SeriesPoly truncated(int trunc) const;
  // Discards terms only; used after accumulating coefficients in place.
  void set_coeff(int k, MPoly value);

  SeriesPoly mul(const SeriesPoly& other) const;
  SeriesPoly operator*(const SeriesPoly& other) const { return mul(other); }
  bool operator==(const SeriesPoly&) const = default;

  // Exact polynomial with all retained terms.
  MPoly to_poly() const;

private:
  int nvars_;
  int trunc_;
  MPoly zero_;                 // shared zero coefficient in n-1 variables
  std::vector<MPoly> coeffs_;  // index = power of the last variable
  void trim();
};

SeriesPoly series_mul(const SeriesPoly& a, const SeriesPoly& b);

// Multifactor Hensel lifting. H must be monic in the last variable with
// deg_last H equal to the degree of its section H(0,...,0,x_n); the seeds
// must be monic, pairwise coprime, and multiply to that section. Returns one
// lifted factor per seed, monic in x_n, congruent to H as a product up to the
// truncation order, with factor i reducing to seed i at x' = 0.
std::vector<SeriesPoly> hensel_lift(const MPoly& h, const std::vector<UPoly>& seeds,
                                    int trunc);

// Truncated product of the selected lifted factors: the indices address
// factors 1..s and the flag additionally selects factor 0. An empty selection
// without the flag is an error.
SeriesPoly subset_product(std::span<const SeriesPoly> lifted, std::span<const int> indices,
                          bool include_first);

}  // namespace ratrec
