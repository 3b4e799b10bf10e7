#include <algorithm>
#include <cstdint>

#include "kv4/linalg.hpp"

namespace kv4 {

namespace {

// Below this many touched entries per pivot the fork/join costs more than it saves.
constexpr std::int64_t kParallelWork = 1 << 14;

template <bool Parallel>
Echelon gauss_jordan(Matrix m) {
  const Field f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Elem* data = m.entries().data();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && data[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap_ranges(data + p * cols + c, data + (p + 1) * cols, data + r * cols + c);
    Elem* prow = data + r * cols;
    f.scale(f.inv(prow[c]), prow + c, cols - c);
    const std::size_t width = cols - c;
    const auto n = static_cast<std::int64_t>(rows);
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if (n * static_cast<std::int64_t>(width) > kParallelWork)
      for (std::int64_t i = 0; i < n; ++i) {
        Elem* irow = data + i * cols;
        if (static_cast<std::size_t>(i) != r && irow[c]) f.axpy(irow[c], prow + c, irow + c, width);
      }
    } else {
      for (std::int64_t i = 0; i < n; ++i) {
        Elem* irow = data + i * cols;
        if (static_cast<std::size_t>(i) != r && irow[c]) f.axpy(irow[c], prow + c, irow + c, width);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

Echelon rref(Matrix m) { return gauss_jordan<true>(std::move(m)); }
Echelon rref_serial(Matrix m) { return gauss_jordan<false>(std::move(m)); }

RankKernel rank_kernel(const Matrix& m) {
  const Echelon e = rref(m);
  const std::size_t n = m.cols(), rk = e.pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix k(m.field(), n, n - rk);
  std::size_t t = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    k(free, t) = 1;
    for (std::size_t i = 0; i < rk; ++i) k(e.pivots[i], t) = e.reduced(i, free);
    ++t;
  }
  return {rk, std::move(k)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }
Matrix kernel(const Matrix& m) { return rank_kernel(m).kernel; }

Matrix column_space(const Matrix& m) {
  const Echelon e = rref(m.transpose());
  return e.reduced.rows_range(0, e.pivots.size()).transpose();
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& target) {
  const std::size_t n = m.cols(), k = target.cols();
  const Echelon e = rref(hstack({m, target}));
  Matrix x(m.field(), n, k);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return m;
  const Echelon e = rref(hstack({m, Matrix::identity(m.field(), n)}));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Elem determinant(const Matrix& m) {
  const Field f = m.field();
  Matrix a = m;
  const std::size_t n = a.rows();
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
    det = f.mul(det, a(c, c));
    const Elem inv = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elem factor = f.mul(a(i, c), inv);
      if (factor) f.axpy(factor, &a(c, 0), &a(i, 0), n);
    }
  }
  return det;
}

std::vector<std::size_t> complement_indices(const Matrix& basis) {
  const Echelon e = rref(basis.transpose());
  std::vector<bool> used(basis.rows(), false);
  for (auto p : e.pivots) used[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.rows(); ++i)
    if (!used[i]) out.push_back(i);
  return out;
}

bool in_column_space(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0) return true;
  return rank(hstack({b, a})) == rank(b);
}

}  // namespace kv4
