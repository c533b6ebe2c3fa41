#include "ratrec/unifit.hpp"

#include <set>

#include "ratrec/errors.hpp"
#include "ratrec/linsolve.hpp"
#include "ratrec/rng.hpp"

namespace ratrec {

FitResult fit_fixed_type(std::span<const Rat> nodes, std::span<const Rat> values,
                         int r, int s) {
  if (r < 0 || s < 0) throw InputError("degrees must be non-negative");
  const int unknowns = r + s + 1;
  const int k = static_cast<int>(nodes.size());
  if (k < unknowns || static_cast<int>(values.size()) != k) {
    throw InputError("need at least r+s+1 nodes with matching values");
  }
  {
    std::set<Rat> distinct(nodes.begin(), nodes.end());
    if (static_cast<int>(distinct.size()) != k) throw InputError("duplicate nodes");
  }

  // Unknowns: B_0..B_r (numerator, highest power first), C_1..C_s. Extra
  // nodes overdetermine the system; any contradiction surfaces as
  // Inconsistent.
  RatMatrix a(k, RatVector(unknowns, Rat(0)));
  RatVector b(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j <= r; ++j) a[i][j] = rat_pow(nodes[i], static_cast<unsigned>(r - j));
    for (int l = 1; l <= s; ++l) {
      a[i][r + l] = -values[i] * rat_pow(nodes[i], static_cast<unsigned>(s - l));
    }
    b[i] = values[i] * rat_pow(nodes[i], static_cast<unsigned>(s));
  }

  auto solved = solve_linear(a, b);
  if (solved.kind == LinearSolveResult::Kind::Inconsistent) {
    return {FitStatus::Inconsistent, {}, {}};
  }
  if (solved.kind == LinearSolveResult::Kind::Singular) {
    return {FitStatus::NotUnique, {}, {}};
  }

  std::vector<Rat> gc(r + 1);
  for (int j = 0; j <= r; ++j) gc[r - j] = solved.solution[j];
  std::vector<Rat> hc(s + 1, Rat(0));
  hc[s] = 1;
  for (int l = 1; l <= s; ++l) hc[s - l] = solved.solution[r + l];
  return {FitStatus::Unique, UPoly(std::move(gc)), UPoly(std::move(hc))};
}

namespace {

std::vector<Rat> sample_distinct_nodes(Rng& rng, int count, long bound) {
  std::set<long> seen;
  std::vector<Rat> nodes;
  nodes.reserve(count);
  while (static_cast<int>(nodes.size()) < count) {
    long x = rng.uniform(-bound, bound);
    if (seen.insert(x).second) nodes.emplace_back(x);
  }
  return nodes;
}

}  // namespace

DetectResult detect_type(const LineOracle& f, int r_max, int s_max, int n_verify,
                         std::uint64_t seed) {
  if (r_max < 1 || s_max < 1) throw InputError("degree caps must be positive");
  if (n_verify < 1) throw InputError("verification count must be positive");
  Rng rng(derive_seed(seed, 0x11f1));
  const long bound = 8L * (r_max + s_max);

  for (int sum = 0; sum <= r_max + s_max; ++sum) {
    for (int s = 0; s <= std::min(sum, s_max); ++s) {
      const int r = sum - s;
      if (r > r_max) continue;
      // A node can collide with a pole of the restriction; one fresh node set
      // covers that before moving to the next type.
      for (int attempt = 0; attempt < 2; ++attempt) {
        auto nodes = sample_distinct_nodes(rng, r + s + 1, bound);
        std::vector<Rat> values;
        values.reserve(nodes.size());
        for (const auto& x : nodes) values.push_back(f(x));
        auto fit = fit_fixed_type(nodes, values, r, s);
        if (fit.status != FitStatus::Unique) continue;

        bool ok = true;
        int checked = 0;
        for (int guard = 0; checked < n_verify && guard < 40 * n_verify; ++guard) {
          Rat x(rng.uniform(-bound, bound));
          if (fit.den.eval(x) == 0) continue;
          ++checked;
          if (f(x) * fit.den.eval(x) != fit.num.eval(x)) {
            ok = false;
            break;
          }
        }
        if (!ok || checked < n_verify) continue;

        UPoly g = gcd_upoly(fit.num, fit.den);
        UPoly num = divmod(fit.num, g).quot;
        UPoly den = divmod(fit.den, g).quot;
        Rat lead = den.leading();
        den = den * (Rat(1) / lead);
        num = num * (Rat(1) / lead);
        TypeRS type{std::max(num.degree(), 0), std::max(den.degree(), 0)};
        return {type, std::move(num), std::move(den)};
      }
    }
  }
  throw NoFitWithinCaps("no rational fit of type up to (" + std::to_string(r_max) +
                        ", " + std::to_string(s_max) + ") matches the oracle");
}

}  // namespace ratrec
