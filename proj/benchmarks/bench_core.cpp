#include <benchmark/benchmark.h>

#include "ratrec/certify.hpp"
#include "ratrec/expr.hpp"
#include "ratrec/factor.hpp"
#include "ratrec/mpoly_gcd.hpp"
#include "ratrec/reconstruct.hpp"
#include "ratrec/rng.hpp"
#include "ratrec/series.hpp"

namespace {

using namespace ratrec;

MPoly dense_poly(int nvars, int degree, std::uint64_t seed) {
  Rng rng(seed);
  MPoly p(nvars);
  Expt e(nvars, 0);
  for (int t = 0; t < 12; ++t) {
    int budget = degree;
    for (int i = 0; i < nvars; ++i) {
      int d = static_cast<int>(rng.uniform(0, budget));
      e[i] = static_cast<unsigned>(d);
      budget -= d;
    }
    p.add_term(e, Rat(rng.uniform(-9, 9)));
  }
  return p;
}

void BM_mpoly_mul(benchmark::State& state) {
  MPoly a = dense_poly(3, static_cast<int>(state.range(0)), 1);
  MPoly b = dense_poly(3, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_mpoly_mul)->Arg(4)->Arg(8);

void BM_mpoly_gcd(benchmark::State& state) {
  MPoly common = dense_poly(2, static_cast<int>(state.range(0)), 3);
  MPoly a = dense_poly(2, 3, 4) * common;
  MPoly b = dense_poly(2, 3, 5) * common;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcd_mpoly(a, b));
  }
}
BENCHMARK(BM_mpoly_gcd)->Arg(2)->Arg(4);

void BM_factor_univariate(benchmark::State& state) {
  auto f = parse_polynomial("(x^4 - 10*x^2 + 1)*(x^4 + 1)*(x - 3)", {"x"});
  UPoly poly = upoly_in_var(f, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(factor_univariate(poly));
  }
}
BENCHMARK(BM_factor_univariate);

void BM_hensel_lift(benchmark::State& state) {
  auto h = parse_polynomial("z^3 + z^2 + x*z + x + y*z", {"x", "y", "z"});
  auto split = split_constant_term(h);
  std::vector<UPoly> seeds;
  seeds.push_back(UPoly::monomial(Rat(1), split.power));
  for (const auto& p : split.parts) seeds.push_back(p);
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hensel_lift(h, seeds, order));
  }
}
BENCHMARK(BM_hensel_lift)->Arg(4)->Arg(16);

void BM_certificate(benchmark::State& state) {
  auto num = parse_polynomial("x", {"x", "y", "z"});
  auto den = parse_polynomial("z^2 + z + x + y", {"x", "y", "z"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_certificate(num, den, {}, 42));
  }
}
BENCHMARK(BM_certificate);

void BM_reconstruct_plane_example(benchmark::State& state) {
  auto spec = parse_oracle_spec("vars x y; x*y/(x^2+y^2) default 0");
  Oracle oracle = oracle_from_spec(spec);
  ReconParams params;
  params.r_max = params.s_max = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(oracle, params));
  }
}
BENCHMARK(BM_reconstruct_plane_example);

}  // namespace

BENCHMARK_MAIN();
