#include "ratrec/certify.hpp"

#include <optional>

#include "ratrec/errors.hpp"
#include "ratrec/factor.hpp"
#include "ratrec/mpoly_gcd.hpp"
#include "ratrec/rng.hpp"
#include "ratrec/series.hpp"

namespace ratrec {

namespace {

// Small integer vectors in a deterministic order (0, 1, -1, 2, -2, ...
// per coordinate, last coordinate cycling fastest), then seeded random draws.
class OffsetCandidates {
public:
  OffsetCandidates(int dim, int small_bound, long random_bound, std::uint64_t seed)
      : dim_(dim), random_bound_(random_bound), rng_(seed) {
    for (int v = 0; v <= small_bound; ++v) {
      values_.push_back(v);
      if (v > 0) values_.push_back(-v);
    }
    digits_.assign(dim, 0);
  }

  std::vector<Rat> next() {
    std::vector<Rat> out(dim_);
    if (!exhausted_) {
      for (int i = 0; i < dim_; ++i) out[i] = Rat(values_[digits_[i]]);
      int pos = dim_ - 1;
      while (pos >= 0) {
        if (++digits_[pos] < values_.size()) break;
        digits_[pos] = 0;
        --pos;
      }
      if (pos < 0) exhausted_ = true;
      return out;
    }
    for (auto& c : out) c = Rat(rng_.uniform(-random_bound_, random_bound_));
    return out;
  }

private:
  int dim_;
  long random_bound_;
  std::vector<long> values_;
  std::vector<std::size_t> digits_;
  bool exhausted_ = false;
  Rng rng_;
};

bool is_zero_vector(std::span<const Rat> v) {
  for (const auto& c : v) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<ShearResult> try_shear(const MPoly& h, const std::vector<Rat>& offsets) {
  const int d = h.total_degree();
  MPoly sheared = shear_last(h, offsets);
  if (sheared.degree_in_last() != d) return std::nullopt;
  MPoly lead = sheared.coeff_of_last(d);
  if (!lead.is_constant()) return std::nullopt;
  Rat scale = lead.constant_term();
  sheared *= Rat(1) / scale;

  UPoly section = last_var_section(sheared);
  int e = 0;
  while (section[e] == 0) ++e;
  std::vector<Rat> rest_coeffs(section.coeffs().begin() + e, section.coeffs().end());
  UPoly rest(std::move(rest_coeffs));
  if (rest.degree() > 0) {
    UPoly g = gcd_upoly(rest, rest.derivative());
    if (g.degree() != 0) return std::nullopt;
  }
  return ShearResult{offsets, std::move(sheared), std::move(scale)};
}

// Scans the lifted subset product for a coefficient with a homogeneous part
// beyond the series degree of the sheared denominator.
std::optional<SubsetWitness> find_subset_witness(const SeriesPoly& product,
                                                 const std::vector<int>& subset,
                                                 int series_degree, int trunc) {
  for (int m = 0; m < product.degree_in_main(); ++m) {
    const MPoly& coeff = product.coeff(m);
    if (coeff.is_zero()) continue;
    for (int degree = series_degree + 1; degree <= trunc; ++degree) {
      MPoly part = coeff.homogeneous_component(degree);
      if (!part.is_zero()) return SubsetWitness{subset, m, std::move(part)};
    }
  }
  return std::nullopt;
}

std::vector<UPoly> lifting_seeds(int power, const std::vector<UPoly>& parts) {
  std::vector<UPoly> seeds;
  seeds.reserve(parts.size() + 1);
  seeds.push_back(UPoly::monomial(Rat(1), power));
  seeds.insert(seeds.end(), parts.begin(), parts.end());
  return seeds;
}

// All nonempty subsets of {1..s}, each with its witness; re-lifts at doubled
// truncation until every subset shows one. A full set of witnesses exists for
// every truncation large enough unless some subset product is an honest
// polynomial, which the truncation cap turns into VerificationFailed.
struct WitnessSearch {
  int trunc;
  std::vector<SubsetWitness> witnesses;
};
WitnessSearch find_all_witnesses(const MPoly& sheared, int power,
                                 const std::vector<UPoly>& parts, int series_degree,
                                 int trunc_start, int trunc_cap) {
  const int s = static_cast<int>(parts.size());
  int trunc = trunc_start;
  for (;;) {
    auto lifted = hensel_lift(sheared, lifting_seeds(power, parts), trunc);
    std::vector<SubsetWitness> witnesses;
    bool all_found = true;
    for (int mask = 1; mask < (1 << s) && all_found; ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < s; ++i) {
        if (mask & (1 << i)) subset.push_back(i + 1);
      }
      SeriesPoly product = subset_product(lifted, subset, false);
      auto witness = find_subset_witness(product, subset, series_degree, trunc);
      if (witness) {
        witnesses.push_back(std::move(*witness));
      } else {
        all_found = false;
      }
    }
    if (all_found) return {trunc, std::move(witnesses)};
    if (trunc >= trunc_cap) {
      throw VerificationFailed(
          "no non-polynomial witness below the truncation cap; "
          "the denominator is most likely reducible");
    }
    trunc = std::min(2 * trunc, trunc_cap);
  }
}

}  // namespace

ShearResult shear_to_general_position(const MPoly& h, std::uint64_t seed,
                                      const CertifyParams& params) {
  if (h.nvars() < 2) throw InputError("shearing needs at least two variables");
  if (h.is_constant()) throw InputError("cannot shear a constant");

  OffsetCandidates candidates(h.nvars() - 1, 4, 8, derive_seed(seed, 0x5e4a));
  long deterministic = 1;
  for (int i = 0; i < h.nvars() - 1 && deterministic < 10000; ++i) deterministic *= 9;
  for (long i = 0; i < deterministic + params.shear_retry; ++i) {
    auto offsets = candidates.next();
    if (auto result = try_shear(h, offsets)) return std::move(*result);
  }
  throw RetryBudgetExhausted("no shear reached general position within the budget");
}

WitnessResult verify_witness_plane(const MPoly& num, const MPoly& den, const PlaneDir& dir) {
  if (num.nvars() != den.nvars()) throw InputError("variable count mismatch");
  MPoly num_l = restrict_to_plane(num, dir);
  MPoly den_l = restrict_to_plane(den, dir);
  if (den_l.is_zero()) {
    throw PlaneInsideZeroSet("the plane lies inside the zero set of the denominator");
  }
  RatFun reduced(std::move(num_l), std::move(den_l));
  PlanePair plane{reduced.num(), reduced.den()};
  const Rat origin[2] = {Rat(0), Rat(0)};
  if (reduced.den().eval(origin) == 0) {
    return {WitnessStatus::VerifiedNonRegular, std::move(plane)};
  }
  return {WitnessStatus::NotAWitness, std::move(plane)};
}

Certificate compute_certificate(const MPoly& num, const MPoly& den,
                                const CertifyParams& params, std::uint64_t seed) {
  if (num.nvars() != den.nvars()) throw InputError("variable count mismatch");
  const int n = den.nvars();
  if (n < 2) throw InputError("witness planes need at least two variables");
  if (den.is_constant()) throw InputError("denominator must be nonconstant");
  std::vector<Rat> origin(n, Rat(0));
  if (den.eval(origin) != 0) {
    throw OriginNotOnZeroSet("denominator does not vanish at the origin");
  }

  Certificate cert;
  cert.nvars = n;
  cert.input_num = num;
  cert.input_den = den;

  ShearResult shear = shear_to_general_position(den, derive_seed(seed, 1), params);
  cert.shear = shear.offsets;
  cert.sheared_den = std::move(shear.sheared);
  cert.sheared_num = shear_last(num, cert.shear) * (Rat(1) / shear.scale);

  auto division = divmod_last(cert.sheared_num, cert.sheared_den);
  if (division.rem.is_zero()) {
    throw ZeroRemainder("denominator divides numerator; the pair was not reduced");
  }
  cert.rem_main_deg = division.rem.degree_in_last();
  cert.top_rem_form = division.rem.coeff_of_last(cert.rem_main_deg).initial_form();

  auto split = split_constant_term(cert.sheared_den);
  cert.power = split.power;
  cert.seed_factors = split.parts;

  const int series_degree = cert.sheared_den.prefix_total_degree();
  cert.certificate_poly = cert.top_rem_form;
  if (!split.parts.empty()) {
    auto found = find_all_witnesses(cert.sheared_den, split.power, split.parts,
                                    series_degree, series_degree + 2, params.trunc_cap);
    cert.trunc = found.trunc;
    cert.witnesses = std::move(found.witnesses);
    for (const auto& w : cert.witnesses) cert.certificate_poly *= w.form;
  } else {
    cert.trunc = series_degree + 2;
  }

  // Direction: the all-ones vector first, then seeded draws; reject zeros of
  // the certificate polynomial and the zero vector.
  OffsetCandidates directions(n - 1, 0, 8, derive_seed(seed, 0xd14));
  std::vector<Rat> all_ones(n - 1, Rat(1));
  std::vector<Rat> candidate = all_ones;
  for (int i = 0; i < params.direction_retry; ++i) {
    if (i > 0) candidate = directions.next();
    if (is_zero_vector(candidate)) continue;
    if (cert.certificate_poly.eval(candidate) == 0) continue;
    auto witness = verify_witness_plane(cert.sheared_num, cert.sheared_den,
                                        PlaneDir{candidate});
    if (witness.status != WitnessStatus::VerifiedNonRegular) continue;
    cert.direction = candidate;
    cert.plane = std::move(witness.plane);
    recheck_certificate(cert);
    return cert;
  }
  throw VerificationFailed("no verifying direction found within the budget");
}

void recheck_certificate(const Certificate& cert) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw VerificationFailed("certificate recheck failed: " + what);
  };
  const int n = cert.nvars;
  require(n >= 2, "variable count");
  require(static_cast<int>(cert.shear.size()) == n - 1, "shear length");
  require(static_cast<int>(cert.direction.size()) == n - 1, "direction length");

  // The input pair is reduced and its denominator vanishes at the origin.
  std::vector<Rat> origin(n, Rat(0));
  require(cert.input_den.eval(origin) == 0, "origin lies on the zero set");
  require(gcd_mpoly(cert.input_num, cert.input_den).is_constant(), "input pair reduced");

  // Shear consistency: the stored sheared pair is the sheared input pair,
  // scaled so the denominator is monic in the last variable.
  MPoly raw_den = shear_last(cert.input_den, cert.shear);
  const int d = cert.input_den.total_degree();
  require(raw_den.degree_in_last() == d, "full degree in the last variable");
  MPoly lead = raw_den.coeff_of_last(d);
  require(lead.is_constant(), "constant leading coefficient");
  Rat scale = lead.constant_term();
  require(raw_den * (Rat(1) / scale) == cert.sheared_den, "sheared denominator");
  require(shear_last(cert.input_num, cert.shear) * (Rat(1) / scale) == cert.sheared_num,
          "sheared numerator");

  // Division remainder data.
  auto division = divmod_last(cert.sheared_num, cert.sheared_den);
  require(!division.rem.is_zero(), "nonzero remainder");
  require(division.rem.degree_in_last() == cert.rem_main_deg, "remainder degree");
  require(division.rem.coeff_of_last(cert.rem_main_deg).initial_form() == cert.top_rem_form,
          "top remainder form");

  // Constant-term split.
  auto split = split_constant_term(cert.sheared_den);
  require(split.power == cert.power, "pure power exponent");
  require(split.parts == cert.seed_factors, "section factors");

  // Witnesses: one per nonempty subset, matching a homogeneous component of
  // the lifted product coefficient, with degree beyond the series degree.
  const int series_degree = cert.sheared_den.prefix_total_degree();
  const int s = static_cast<int>(cert.seed_factors.size());
  require(static_cast<int>(cert.witnesses.size()) == (s > 0 ? (1 << s) - 1 : 0),
          "witness count");
  if (s > 0) {
    auto lifted = hensel_lift(cert.sheared_den, lifting_seeds(cert.power, cert.seed_factors),
                              cert.trunc);
    for (const auto& w : cert.witnesses) {
      require(!w.form.is_zero(), "witness form nonzero");
      int degree = w.form.total_degree();
      require(w.form.homogeneous_component(degree) == w.form, "witness form homogeneous");
      require(degree > series_degree, "witness degree exceeds the series degree");
      require(degree <= cert.trunc, "witness degree within truncation");
      SeriesPoly product = subset_product(lifted, w.subset, false);
      require(w.main_power < product.degree_in_main(), "witness power below the lead");
      require(product.coeff(w.main_power).homogeneous_component(degree) == w.form,
              "witness form matches the lifted coefficient");
    }
  }

  // Certificate polynomial and direction.
  MPoly expected = cert.top_rem_form;
  for (const auto& w : cert.witnesses) expected *= w.form;
  require(expected == cert.certificate_poly, "certificate polynomial product");
  require(!is_zero_vector(cert.direction), "nonzero direction");
  require(cert.certificate_poly.eval(cert.direction) != 0,
          "certificate polynomial nonzero at the direction");

  // Plane data: reduced restriction, coprime, denominator vanishing at the
  // origin, and the degree bound that drives the contradiction.
  PlaneDir dir{cert.direction};
  MPoly num_l = restrict_to_plane(cert.sheared_num, dir);
  MPoly den_l = restrict_to_plane(cert.sheared_den, dir);
  require(!den_l.is_zero(), "plane not inside the zero set");
  RatFun reduced(num_l, den_l);
  require(reduced.num() == cert.plane.num && reduced.den() == cert.plane.den,
          "reduced plane restriction");
  require(gcd_mpoly(cert.plane.num, cert.plane.den).is_constant(), "plane pair coprime");
  const Rat origin2[2] = {Rat(0), Rat(0)};
  require(cert.plane.den.eval(origin2) == 0, "plane denominator vanishes at the origin");
  require(den_l.degree_in(0) <= series_degree, "plane degree bound");
}

RegularityDecision decide_regular_at_origin(const RatFun& f, const CertifyParams& params,
                                            std::uint64_t seed) {
  RegularityDecision decision;
  std::vector<Rat> origin(f.nvars(), Rat(0));
  Rat den_value = f.den().eval(origin);
  if (den_value != 0) {
    decision.regular = true;
    decision.value = f.num().eval(origin) / den_value;
    return decision;
  }
  decision.regular = false;
  if (f.nvars() >= 2) {
    try {
      decision.certificate = compute_certificate(f.num(), f.den(), params, seed);
      decision.justification = "witness-plane";
      return decision;
    } catch (const MethodFailure&) {
      // The reduced-denominator argument below still applies.
    }
  }
  decision.justification = "reduced-denominator";
  return decision;
}

}  // namespace ratrec
