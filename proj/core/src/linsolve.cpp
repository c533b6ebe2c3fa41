#include "ratrec/linsolve.hpp"

#include "ratrec/errors.hpp"

namespace ratrec {

LinearSolveResult solve_linear(const RatMatrix& a, const RatVector& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw InputError("right-hand side length mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a) {
    if (row.size() != cols) throw InputError("ragged coefficient matrix");
  }

  // Integer augmented matrix, one cleared denominator per row.
  std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    Int l(1);
    for (const auto& x : a[i]) l = int_lcm(l, x.get_den());
    l = int_lcm(l, b[i].get_den());
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
    m[i][cols] = b[i].get_num() * (l / b[i].get_den());
  }

  // Bareiss echelon form with column skipping.
  std::vector<int> pivot_col;
  Int prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pr = row;
    while (pr < rows && m[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[row]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c <= cols; ++c) {
        m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[row][col];
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  const std::size_t rank = row;

  for (std::size_t r = rank; r < rows; ++r) {
    if (m[r][cols] != 0) return {LinearSolveResult::Kind::Inconsistent, {}, {}};
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  // Back-substitution over the rationals with the free variables fixed.
  auto back_substitute = [&](const RatVector& free_values, bool homogeneous) {
    RatVector x(cols, Rat(0));
    std::size_t fi = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (!is_pivot[c]) x[c] = free_values[fi++];
    }
    for (std::size_t i = rank; i-- > 0;) {
      std::size_t pc = static_cast<std::size_t>(pivot_col[i]);
      Rat acc = homogeneous ? Rat(0) : Rat(m[i][cols]);
      for (std::size_t c = pc + 1; c < cols; ++c) {
        if (m[i][c] != 0) acc -= Rat(m[i][c]) * x[c];
      }
      x[pc] = acc / Rat(m[i][pc]);
    }
    return x;
  };

  const std::size_t free_count = cols - rank;
  RatVector zeros(free_count, Rat(0));
  RatVector particular = back_substitute(zeros, false);

  if (free_count == 0) {
    return {LinearSolveResult::Kind::Unique, std::move(particular), {}};
  }

  std::vector<RatVector> nullspace;
  nullspace.reserve(free_count);
  for (std::size_t k = 0; k < free_count; ++k) {
    RatVector e(free_count, Rat(0));
    e[k] = 1;
    nullspace.push_back(back_substitute(e, true));
  }
  return {LinearSolveResult::Kind::Singular, std::move(particular), std::move(nullspace)};
}

}  // namespace ratrec
