#include "ratrec/reconstruct.hpp"

#include <set>

#include "ratrec/errors.hpp"
#include "ratrec/linsolve.hpp"
#include "ratrec/mpoly_gcd.hpp"
#include "ratrec/rng.hpp"

namespace ratrec {

namespace {

void check_params(const ReconParams& p) {
  if (p.r_max < 1 || p.s_max < 1 || p.n_type_probes < 1 || p.n_verify < 1 ||
      p.retry_budget < 1) {
    throw InputError("reconstruction parameters must be positive");
  }
}

long sampling_bound(const ReconParams& p) { return 8L * (p.r_max + p.s_max); }

TypeRS componentwise_max(TypeRS a, TypeRS b) {
  return {std::max(a.num_deg, b.num_deg), std::max(a.den_deg, b.den_deg)};
}

TypeRS probe_generic_type_seeded(const Oracle& f, const ReconParams& params,
                                 std::uint64_t seed) {
  if (f.nvars < 2) throw InputError("type probing needs at least two variables");
  Rng rng(derive_seed(seed, 0x9e0b));
  const long bound = sampling_bound(params);
  TypeRS best{0, 0};
  for (int probe = 0; probe < params.n_type_probes; ++probe) {
    std::vector<Rat> slice(f.nvars - 1);
    for (auto& c : slice) c = Rat(rng.uniform(-bound, bound));
    LineOracle line = [&f, &slice](const Rat& t) {
      std::vector<Rat> point(slice);
      point.push_back(t);
      return f.eval(point);
    };
    auto detected = detect_type(line, params.r_max, params.s_max, params.n_verify,
                                derive_seed(seed, 0x700 + probe));
    best = componentwise_max(best, detected.type);
  }
  return best;
}

// Verifies a candidate against the oracle at fresh random points where the
// candidate denominator does not vanish, plus the caller-pinned points.
void verify_candidate(const RatFun& candidate, const Oracle& f, const ReconParams& params,
                      std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0xc4ec));
  const long bound = sampling_bound(params);
  int checked = 0;
  for (int guard = 0; checked < params.n_verify && guard < 40 * params.n_verify; ++guard) {
    std::vector<Rat> point(f.nvars);
    for (auto& c : point) c = Rat(rng.uniform(-bound, bound));
    auto value = candidate.eval(point);
    if (!value) continue;
    ++checked;
    if (*value != f.eval(point)) {
      throw VerificationFailed("candidate disagrees with the oracle at a random point");
    }
  }
  if (checked < params.n_verify) {
    throw VerificationFailed("could not collect verification points off the zero set");
  }
  for (const auto& point : params.extra_verify_points) {
    if (static_cast<int>(point.size()) != f.nvars) {
      throw InputError("pinned verification point dimension mismatch");
    }
    auto value = candidate.eval(point);
    if (value && *value != f.eval(point)) {
      throw VerificationFailed("candidate disagrees with the oracle at a pinned point");
    }
  }
}

// Fraction-free (Bareiss) elimination over the polynomial ring in x', with
// one augmented right-hand-side column. Field arithmetic only enters at
// back-substitution, where the solution components are already the small
// reduced fractions of the interpolation problem; reducing inside the
// elimination instead triggers massive intermediate gcds.
std::vector<RatFun> solve_symbolic(std::vector<std::vector<MPoly>> m, int nvars) {
  const std::size_t k = m.size();
  MPoly prev = MPoly::constant(nvars, Rat(1));
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col].is_zero()) ++pivot;
    if (pivot == k) throw VerificationFailed("singular symbolic interpolation system");
    std::swap(m[pivot], m[col]);
    for (std::size_t row = col + 1; row < k; ++row) {
      for (std::size_t c = col + 1; c <= k; ++c) {
        m[row][c] = divide_exact(m[col][col] * m[row][c] - m[row][col] * m[col][c], prev);
      }
      m[row][col] = MPoly(nvars);
    }
    prev = m[col][col];
  }
  std::vector<RatFun> x(k, RatFun::zero(nvars));
  for (std::size_t row = k; row-- > 0;) {
    RatFun acc = RatFun(m[row][k], MPoly::constant(nvars, Rat(1)));
    for (std::size_t c = row + 1; c < k; ++c) {
      if (!m[row][c].is_zero()) acc -= RatFun::from_poly(m[row][c]) * x[c];
    }
    x[row] = acc / RatFun::from_poly(m[row][row]);
  }
  return x;
}

RatFun reconstruct_attempt(const Oracle& f, const ReconParams& params, int attempt);

RatFun reconstruct_with_retries(const Oracle& f, const ReconParams& params) {
  std::string last;
  for (int attempt = 0; attempt < params.retry_budget; ++attempt) {
    try {
      return reconstruct_attempt(f, params, attempt);
    } catch (const MethodFailure& e) {
      last = e.what();
    }
  }
  throw VerificationFailed("reconstruction failed after " +
                           std::to_string(params.retry_budget) + " attempts: " + last);
}

RatFun reconstruct_attempt(const Oracle& f, const ReconParams& params, int attempt) {
  const std::uint64_t seed = derive_seed(params.seed, 0xa77e + attempt);

  if (f.nvars == 1) {
    LineOracle line = [&f](const Rat& t) {
      const Rat point[1] = {t};
      return f.eval(point);
    };
    auto detected = detect_type(line, params.r_max, params.s_max, params.n_verify, seed);
    RatFun candidate(mpoly_from_upoly(detected.num, 1, 0), mpoly_from_upoly(detected.den, 1, 0));
    verify_candidate(candidate, f, params, seed);
    return candidate;
  }

  TypeRS type = probe_generic_type_seeded(f, params, seed);
  const int node_count = type.num_deg + type.den_deg + 1;

  // Interpolation nodes for the last variable; retries shift the progression
  // so a node falling into a degenerate slice is not fatal.
  std::vector<Rat> nodes(node_count);
  for (int i = 0; i < node_count; ++i) nodes[i] = Rat(attempt + i);

  // Slice functions f(x', node) over one fewer variable.
  std::vector<RatFun> slices;
  slices.reserve(node_count);
  for (int i = 0; i < node_count; ++i) {
    Oracle slice_oracle{f.nvars - 1, [&f, &nodes, i](std::span<const Rat> prefix) {
                          std::vector<Rat> point(prefix.begin(), prefix.end());
                          point.push_back(nodes[i]);
                          return f.eval(point);
                        }};
    ReconParams inner = params;
    inner.seed = derive_seed(seed, 0x511ce + i);
    inner.extra_verify_points.clear();  // pinned points live in the full space
    slices.push_back(reconstruct_with_retries(slice_oracle, inner));
  }

  // The interpolation system over the field of fractions in x': unknowns are
  // the numerator coefficients (highest power first) and the non-leading
  // denominator coefficients. Rows are cleared of the slice denominators up
  // front, leaving integer-coefficient polynomial entries.
  const int m = f.nvars - 1;
  const int r = type.num_deg, s = type.den_deg;
  std::vector<std::vector<MPoly>> system(
      node_count, std::vector<MPoly>(node_count + 1, MPoly(m)));
  for (int i = 0; i < node_count; ++i) {
    for (int j = 0; j <= r; ++j) {
      system[i][j] = slices[i].den() * rat_pow(nodes[i], static_cast<unsigned>(r - j));
    }
    for (int l = 1; l <= s; ++l) {
      system[i][r + l] = slices[i].num() * Rat(-rat_pow(nodes[i], static_cast<unsigned>(s - l)));
    }
    system[i][node_count] = slices[i].num() * rat_pow(nodes[i], static_cast<unsigned>(s));
  }
  std::vector<RatFun> coeffs = solve_symbolic(std::move(system), m);

  // Clear the common denominator and assemble polynomials in n variables.
  MPoly common = MPoly::constant(m, Rat(1));
  for (const auto& c : coeffs) common = lcm_mpoly(common, c.den());
  auto cleared = [&](const RatFun& c) { return c.num() * divide_exact(common, c.den()); };

  std::vector<MPoly> num_coeffs(r + 1, MPoly(m));
  for (int j = 0; j <= r; ++j) num_coeffs[r - j] = cleared(coeffs[j]);
  std::vector<MPoly> den_coeffs(s + 1, MPoly(m));
  den_coeffs[s] = common;
  for (int l = 1; l <= s; ++l) den_coeffs[s - l] = cleared(coeffs[r + l]);

  RatFun candidate(MPoly::from_last_coeffs(num_coeffs), MPoly::from_last_coeffs(den_coeffs));
  verify_candidate(candidate, f, params, derive_seed(seed, 0xf17a1));
  return candidate;
}

}  // namespace

TypeRS probe_generic_type(const Oracle& f, const ReconParams& params) {
  check_params(params);
  return probe_generic_type_seeded(f, params, params.seed);
}

RatFun reconstruct(const Oracle& f, const ReconParams& params) {
  check_params(params);
  if (f.nvars < 1) throw InputError("oracle must have at least one variable");
  return reconstruct_with_retries(f, params);
}

RatFun reconstruct_dense(const Oracle& f, int num_total_degree, int den_total_degree,
                         const ReconParams& params) {
  check_params(params);
  if (f.nvars < 1) throw InputError("oracle must have at least one variable");
  if (num_total_degree < 0 || den_total_degree < 0) {
    throw InputError("degree bounds must be non-negative");
  }
  const int n = f.nvars;

  // Monomial bases in ascending grlex order.
  auto monomials_up_to = [&](int bound) {
    std::vector<Expt> out;
    Expt e(n, 0);
    // Odometer over exponents with total degree <= bound.
    for (;;) {
      unsigned total = 0;
      for (unsigned x : e) total += x;
      if (static_cast<int>(total) <= bound) out.push_back(e);
      int pos = n - 1;
      while (pos >= 0) {
        if (static_cast<int>(++e[pos]) <= bound) break;
        e[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
  };
  const auto num_basis = monomials_up_to(num_total_degree);
  const auto den_basis = monomials_up_to(den_total_degree);
  const std::size_t unknowns = num_basis.size() + den_basis.size();

  bool saw_candidates = false;
  std::string last = "degree bounds admit no candidate";
  for (int attempt = 0; attempt < params.retry_budget; ++attempt) {
    const std::uint64_t seed = derive_seed(params.seed, 0xde45e + attempt);
    Rng rng(seed);
    const long bound = 16;

    std::set<std::vector<Rat>> points;
    while (points.size() < unknowns + 8) {
      std::vector<Rat> p(n);
      for (auto& c : p) c = Rat(rng.uniform(-bound, bound));
      points.insert(std::move(p));
    }

    // f(p) * sum_beta h_beta p^beta - sum_alpha g_alpha p^alpha = 0.
    RatMatrix a;
    a.reserve(points.size());
    for (const auto& p : points) {
      Rat value = f.eval(p);
      RatVector row;
      row.reserve(unknowns);
      for (const auto& e : num_basis) {
        Rat mono(1);
        for (int i = 0; i < n; ++i) mono *= rat_pow(p[i], e[i]);
        row.push_back(-mono);
      }
      for (const auto& e : den_basis) {
        Rat mono(1);
        for (int i = 0; i < n; ++i) mono *= rat_pow(p[i], e[i]);
        row.push_back(value * mono);
      }
      a.push_back(std::move(row));
    }
    RatVector zero(points.size(), Rat(0));
    auto solved = solve_linear(a, zero);
    if (solved.kind == LinearSolveResult::Kind::Unique) {
      // Either the bounds are genuinely too small or a sample point fell
      // where the oracle deviates from any fraction; fresh points decide.
      last = "only the trivial solution fits the samples";
      continue;
    }

    for (const auto& vec : solved.nullspace) {
      MPoly num(n), den(n);
      for (std::size_t j = 0; j < num_basis.size(); ++j) num.add_term(num_basis[j], vec[j]);
      for (std::size_t j = 0; j < den_basis.size(); ++j) {
        den.add_term(den_basis[j], vec[num_basis.size() + j]);
      }
      if (den.is_zero()) continue;
      saw_candidates = true;
      RatFun candidate(std::move(num), std::move(den));
      try {
        verify_candidate(candidate, f, params, derive_seed(seed, 0xc3ec));
        return candidate;
      } catch (const VerificationFailed& e) {
        last = e.what();
      }
    }
  }
  if (!saw_candidates) {
    throw DegreeBoundsTooSmall(
        "only the trivial solution fits; the degree bounds are too small");
  }
  throw VerificationFailed("dense reconstruction failed after " +
                           std::to_string(params.retry_budget) + " attempts: " + last);
}

}  // namespace ratrec
