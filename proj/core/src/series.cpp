#include "ratrec/series.hpp"

#include <set>

#include "ratrec/errors.hpp"
#include "ratrec/upoly.hpp"

namespace ratrec {

namespace {

MPoly truncate_mpoly(const MPoly& f, int trunc) {
  MPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    unsigned total = 0;
    for (unsigned x : e) total += x;
    if (static_cast<int>(total) <= trunc) r.add_term(e, c);
  }
  return r;
}

}  // namespace

SeriesPoly::SeriesPoly(int nvars, int trunc)
    : nvars_(nvars), trunc_(trunc), zero_(nvars - 1) {
  if (nvars < 2) throw InputError("series polynomials need at least two variables");
  if (trunc < 0) throw InputError("truncation order must be non-negative");
}

SeriesPoly SeriesPoly::from_poly(const MPoly& f, int trunc) {
  SeriesPoly s(f.nvars(), trunc);
  int d = f.degree_in_last();
  s.coeffs_.reserve(d + 1);
  for (int k = 0; k <= d; ++k) {
    s.coeffs_.push_back(truncate_mpoly(f.coeff_of_last(k), trunc));
  }
  s.trim();
  return s;
}

void SeriesPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int SeriesPoly::degree_in_main() const { return static_cast<int>(coeffs_.size()) - 1; }

bool SeriesPoly::is_zero() const { return coeffs_.empty(); }

const MPoly& SeriesPoly::coeff(int k) const {
  if (k >= 0 && k < static_cast<int>(coeffs_.size())) return coeffs_[k];
  return zero_;
}

bool SeriesPoly::is_monic() const {
  if (coeffs_.empty()) return false;
  const MPoly& lead = coeffs_.back();
  return lead.is_constant() && lead.constant_term() == 1;
}

SeriesPoly SeriesPoly::truncated(int trunc) const {
  SeriesPoly s(nvars_, trunc);
  s.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) s.coeffs_.push_back(truncate_mpoly(c, trunc));
  s.trim();
  return s;
}

void SeriesPoly::set_coeff(int k, MPoly value) {
  if (value.nvars() != nvars_ - 1) throw InputError("series coefficient variable count mismatch");
  if (k >= static_cast<int>(coeffs_.size())) coeffs_.resize(k + 1, MPoly(nvars_ - 1));
  coeffs_[k] = truncate_mpoly(value, trunc_);
  trim();
}

SeriesPoly SeriesPoly::mul(const SeriesPoly& other) const {
  if (nvars_ != other.nvars_) throw InputError("series variable count mismatch");
  if (trunc_ != other.trunc_) throw InputError("mismatched truncation orders");
  SeriesPoly r(nvars_, trunc_);
  if (is_zero() || other.is_zero()) return r;
  r.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, MPoly(nvars_ - 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += truncate_mpoly(coeffs_[i] * other.coeffs_[j], trunc_);
    }
  }
  r.trim();
  return r;
}

MPoly SeriesPoly::to_poly() const {
  if (coeffs_.empty()) return MPoly(nvars_);
  return MPoly::from_last_coeffs(coeffs_);
}

SeriesPoly series_mul(const SeriesPoly& a, const SeriesPoly& b) { return a.mul(b); }

namespace {

// sigma_i with sum_i sigma_i * prod_{j != i} seeds[j] = 1; exists exactly when
// the seeds are pairwise coprime.
std::vector<UPoly> partial_fraction_basis(const std::vector<UPoly>& seeds) {
  std::vector<UPoly> sigma(seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    UPoly rest = UPoly::constant(Rat(1));
    for (std::size_t j = 0; j < seeds.size(); ++j) {
      if (j != i) rest *= seeds[j];
    }
    auto x = xgcd_upoly(rest, seeds[i]);
    if (x.g.degree() != 0) throw InputError("seed factors are not pairwise coprime");
    sigma[i] = divmod(x.u, seeds[i]).rem;
  }
  return sigma;
}

// (sigma * e) mod seed, applied coefficient-wise over the series variables.
// e is given by x_n coefficients; sigma and seed are univariate in x_n.
std::vector<MPoly> reduce_against_seed(const std::vector<MPoly>& e, const UPoly& sigma,
                                       const UPoly& seed, int nvars) {
  int m = nvars - 1;
  // conv = sigma * e in (K[x'])[x_n]
  std::vector<MPoly> conv(std::max<std::size_t>(1, e.size() + sigma.degree()), MPoly(m));
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].is_zero()) continue;
    for (int j = 0; j <= sigma.degree(); ++j) {
      if (sigma[j] == 0) continue;
      conv[i + j] += e[i] * sigma[j];
    }
  }
  int d = seed.degree();
  for (int k = static_cast<int>(conv.size()) - 1; k >= d; --k) {
    if (conv[k].is_zero()) continue;
    MPoly t = conv[k];
    for (int j = 0; j < d; ++j) conv[k - d + j] -= t * seed[j];
    conv[k] = MPoly(m);
  }
  conv.resize(std::max(1, d), MPoly(m));
  return conv;
}

}  // namespace

std::vector<SeriesPoly> hensel_lift(const MPoly& h, const std::vector<UPoly>& seeds,
                                    int trunc) {
  int n = h.nvars();
  if (n < 2) throw InputError("lifting needs at least two variables");
  if (seeds.empty()) throw InputError("need at least one seed factor");
  int d = h.degree_in_last();
  MPoly lead = h.coeff_of_last(d);
  if (d < 1 || !lead.is_constant() || lead.constant_term() != 1) {
    throw InputError("polynomial is not monic in the last variable");
  }

  UPoly product = UPoly::constant(Rat(1));
  for (const auto& s : seeds) {
    if (!s.is_monic()) throw InputError("seed factors must be monic");
    product *= s;
  }
  if (!(product == last_var_section(h))) {
    throw InputError("seed product does not match the constant-term section");
  }
  if (product.degree() != d) {
    throw InputError("degree drops when the series variables vanish; shear first");
  }

  auto sigma = partial_fraction_basis(seeds);

  // Factors start as their seeds; corrections are added one homogeneous
  // series degree at a time.
  std::vector<SeriesPoly> factors;
  factors.reserve(seeds.size());
  for (const auto& s : seeds) {
    factors.push_back(SeriesPoly::from_poly(mpoly_from_upoly(s, n, n - 1), trunc));
  }

  std::vector<MPoly> h_coeffs(d + 1, MPoly(n - 1));
  for (int k = 0; k <= d; ++k) h_coeffs[k] = h.coeff_of_last(k);

  for (int degree = 1; degree <= trunc; ++degree) {
    // Product of the current factors, truncated where this step can see.
    SeriesPoly prod = factors[0].truncated(degree);
    for (std::size_t i = 1; i < factors.size(); ++i) {
      prod = prod.mul(factors[i].truncated(degree));
    }
    // Homogeneous mismatch of this degree, per x_n power.
    std::vector<MPoly> mismatch(d, MPoly(n - 1));
    bool any = false;
    for (int k = 0; k < d; ++k) {
      MPoly diff = h_coeffs[k] - prod.coeff(k);
      MPoly part = diff.homogeneous_component(degree);
      if (!part.is_zero()) any = true;
      mismatch[k] = std::move(part);
    }
    if (!any) continue;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      if (seeds[i].degree() == 0) continue;
      auto delta = reduce_against_seed(mismatch, sigma[i], seeds[i], n);
      for (int k = 0; k < static_cast<int>(delta.size()); ++k) {
        if (delta[k].is_zero()) continue;
        factors[i].set_coeff(k, factors[i].coeff(k) + delta[k]);
      }
    }
  }
  return factors;
}

SeriesPoly subset_product(std::span<const SeriesPoly> lifted, std::span<const int> indices,
                          bool include_first) {
  if (lifted.empty()) throw InputError("no lifted factors");
  if (indices.empty() && !include_first) {
    throw InputError("subset product over the empty selection");
  }
  std::set<int> seen;
  SeriesPoly result(lifted[0].nvars(), lifted[0].trunc());
  bool started = false;
  auto accumulate = [&](const SeriesPoly& f) {
    result = started ? result.mul(f) : f;
    started = true;
  };
  if (include_first) accumulate(lifted[0]);
  for (int i : indices) {
    if (i < 1 || i >= static_cast<int>(lifted.size())) {
      throw InputError("subset index out of range");
    }
    if (!seen.insert(i).second) throw InputError("repeated subset index");
    accumulate(lifted[static_cast<std::size_t>(i)]);
  }
  return result;
}

}  // namespace ratrec
