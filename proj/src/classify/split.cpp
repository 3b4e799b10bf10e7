#include "kv4/classify.hpp"
#include "kv4/error.hpp"

namespace kv4 {

Split split_off(const KModule& m, const Submodule& s) {
  const Field& f = m.field();
  const std::size_t n = m.dim(), k = s.dim();
  if (k == 0) return {Matrix(f, 0, n), m, Matrix::identity(f, n)};
  const KModule sub = s.module();
  // Unknown R(i,j) is i*n + j. Rows: R A - A_S R, R B - B_S R, R incl - I.
  Matrix sys(f, 2 * k * n + k * k, k * n);
  Matrix rhs(f, sys.rows(), 1);
  std::size_t row = 0;
  for (int which = 0; which < 2; ++which) {
    const Matrix& act = which == 0 ? m.a() : m.b();
    const Matrix& act_s = which == 0 ? sub.a() : sub.b();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t t = 0; t < n; ++t) sys(row, i * n + t) ^= act(t, j);
        for (std::size_t t = 0; t < k; ++t) sys(row, t * n + j) ^= act_s(i, t);
      }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j, ++row) {
      for (std::size_t t = 0; t < n; ++t) sys(row, i * n + t) = s.inclusion(t, j);
      rhs(row, 0) = i == j ? 1 : 0;
    }
  const auto sol = solve(sys, rhs);
  if (!sol) throw Error(ErrorCode::NotASummand, "no intertwining retraction onto the submodule");
  Matrix r(f, k, n, std::vector<Elem>(sol->entries()));
  Matrix comp = k == n ? Matrix(f, n, 0) : kernel(r);
  KModule complement = restrict_to(m, comp);
  return {std::move(r), std::move(complement), std::move(comp)};
}

}  // namespace kv4
