#include <doctest.h>

#include "ratrec/linsolve.hpp"
#include "test_support.hpp"

using namespace ratrec;
using ratrec::testing::Q;

namespace {

RatVector mat_vec(const RatMatrix& a, const RatVector& x) {
  RatVector out(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  }
  return out;
}

}  // namespace

TEST_CASE("identity system") {
  RatMatrix a = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  RatVector b = {Q("5/2"), Rat(-3)};
  auto result = solve_linear(a, b);
  REQUIRE(result.kind == LinearSolveResult::Kind::Unique);
  CHECK(result.solution == b);
}

TEST_CASE("one-by-one zero system is singular") {
  auto result = solve_linear({{Rat(0)}}, {Rat(0)});
  REQUIRE(result.kind == LinearSolveResult::Kind::Singular);
  REQUIRE(result.nullspace.size() == 1);
  CHECK(result.nullspace[0][0] == Rat(1));
}

TEST_CASE("interpolation fixture has the hand-solved solution") {
  // Fit of x/(x+1) through nodes 0, 1, 2: unknowns B0, B1, C1.
  RatMatrix a = {
      {Rat(0), Rat(1), Rat(0)},
      {Rat(1), Rat(1), Q("-1/2")},
      {Rat(2), Rat(1), Q("-2/3")},
  };
  RatVector b = {Rat(0), Q("1/2"), Q("4/3")};
  auto result = solve_linear(a, b);
  REQUIRE(result.kind == LinearSolveResult::Kind::Unique);
  CHECK(result.solution == RatVector{Rat(1), Rat(0), Rat(1)});
}

TEST_CASE("inconsistent systems are reported distinctly") {
  RatMatrix a = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  RatVector b = {Rat(1), Rat(3)};
  CHECK(solve_linear(a, b).kind == LinearSolveResult::Kind::Inconsistent);
}

TEST_CASE("random square systems round-trip") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng.uniform(0, 5));
    RatMatrix a(n, RatVector(n));
    RatVector x(n);
    for (auto& row : a) {
      for (auto& c : row) c = Rat(rng.uniform(-9, 9)) / Rat(1 + rng.uniform(0, 3));
    }
    for (auto& c : x) c = Rat(rng.uniform(-9, 9));
    auto result = solve_linear(a, mat_vec(a, x));
    if (result.kind == LinearSolveResult::Kind::Unique) {
      CHECK(result.solution == x);
    } else {
      REQUIRE(result.kind == LinearSolveResult::Kind::Singular);
      // The particular solution still solves the system, and the nullspace
      // vectors annihilate the matrix.
      CHECK(mat_vec(a, result.solution) == mat_vec(a, x));
      for (const auto& v : result.nullspace) {
        CHECK(mat_vec(a, v) == RatVector(n, Rat(0)));
      }
    }
  }
}

TEST_CASE("rectangular underdetermined system") {
  RatMatrix a = {{Rat(1), Rat(2), Rat(3)}};
  RatVector b = {Rat(6)};
  auto result = solve_linear(a, b);
  REQUIRE(result.kind == LinearSolveResult::Kind::Singular);
  CHECK(result.nullspace.size() == 2);
  CHECK(mat_vec(a, result.solution) == b);
  for (const auto& v : result.nullspace) CHECK(mat_vec(a, v) == RatVector{Rat(0)});
}
