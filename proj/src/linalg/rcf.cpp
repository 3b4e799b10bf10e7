#include <algorithm>
#include <map>

#include "kv4/error.hpp"
#include "kv4/linalg.hpp"

namespace kv4 {

Matrix companion(const Poly& p) {
  if (!p.is_monic() || p.degree() < 1) throw Error(ErrorCode::InvalidLabel, "companion of a non-monic or constant polynomial");
  const auto n = static_cast<std::size_t>(p.degree());
  Matrix c(p.field(), n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = p[i];
  return c;
}

Matrix block_companion(const std::vector<Factor>& divisors) {
  if (divisors.empty()) throw Error(ErrorCode::ShapeMismatch, "block_companion of nothing");
  std::vector<Matrix> blocks;
  for (const auto& d : divisors) blocks.push_back(companion(pow(d.poly, d.multiplicity)));
  return block_diag(blocks);
}

Poly characteristic_polynomial(const Matrix& m) {
  return determinant(PolyMatrix::pencil(m, Matrix::identity(m.field(), m.rows())));
}

Matrix evaluate(const Poly& p, const Matrix& m) {
  const Field& f = m.field();
  Matrix r(f, m.rows(), m.cols());
  const Matrix id = Matrix::identity(f, m.rows());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * m + p.coeffs()[i] * id;
  return r;
}

namespace {

bool divisor_before(const Factor& a, const Factor& b) {
  const Poly pa = pow(a.poly, a.multiplicity), pb = pow(b.poly, b.multiplicity);
  if (pa.degree() != pb.degree()) return pa.degree() > pb.degree();
  return compare(pa, pb) < 0;
}

}  // namespace

std::vector<Factor> elementary_divisors(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "elementary divisors of a non-square matrix");
  std::vector<Factor> out;
  if (m.rows() == 0) return out;
  for (const Poly& d : invariant_factors(PolyMatrix::pencil(m, Matrix::identity(m.field(), m.rows())))) {
    if (d.degree() < 1) continue;
    for (auto& fac : factor(d)) out.push_back(std::move(fac));
  }
  std::stable_sort(out.begin(), out.end(), divisor_before);
  return out;
}

RationalCanonicalForm rcf(const Matrix& m) {
  const std::vector<Factor> divisors = elementary_divisors(m);
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return {{}, m};

  // Expected number of blocks per (f, l), from the Smith route.
  std::map<Poly, std::map<unsigned, std::size_t>, PolyLess> expected;
  for (const auto& d : divisors) ++expected[d.poly][d.multiplicity];

  struct Block {
    Factor divisor;
    Matrix basis;
  };
  std::vector<Block> blocks;
  for (const auto& [irr, levels] : expected) {
    const auto d = static_cast<std::size_t>(irr.degree());
    const unsigned top = levels.rbegin()->first;
    const Matrix fm = evaluate(irr, m);
    // ker f(M)^j for j = 0..top+1 (the last equals the primary component).
    std::vector<Matrix> ker(top + 2, Matrix(f, n, 0));
    Matrix power = Matrix::identity(f, n);
    for (unsigned j = 1; j <= top + 1; ++j) {
      power = power * fm;
      ker[j] = kernel(power);
    }
    for (unsigned j = top; j >= 1; --j) {
      const auto want_it = levels.find(j);
      const std::size_t want = want_it == levels.end() ? 0 : want_it->second;
      if (want == 0) continue;
      Matrix current = hstack({ker[j - 1], fm * ker[j + 1]});
      std::size_t current_rank = rank(current);
      std::size_t got = 0;
      for (std::size_t c = 0; c < ker[j].cols() && got < want; ++c) {
        const Matrix w = ker[j].col(c);
        std::vector<Matrix> orbit{w};
        for (std::size_t i = 1; i < d; ++i) orbit.push_back(m * orbit.back());
        Matrix extended = hstack({current, hstack(orbit)});
        const std::size_t r = rank(extended);
        if (r == current_rank) continue;
        if (r != current_rank + d) throw Error(ErrorCode::InternalError, "cyclic generator not independent over the residue field");
        current = std::move(extended);
        current_rank = r;
        ++got;
        std::vector<Matrix> chain{w};
        for (std::size_t i = 1; i < d * j; ++i) chain.push_back(m * chain.back());
        blocks.push_back({{irr, j}, hstack(chain)});
      }
      if (got != want) throw Error(ErrorCode::InternalError, "primary decomposition disagrees with the Smith form");
    }
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block& a, const Block& b) { return divisor_before(a.divisor, b.divisor); });
  std::vector<Matrix> cols;
  std::vector<Factor> ordered;
  for (auto& b : blocks) {
    cols.push_back(b.basis);
    ordered.push_back(b.divisor);
  }
  const Matrix p = hstack(cols);
  auto t = inverse(p);
  if (!t) throw Error(ErrorCode::InternalError, "rational canonical basis is singular");
  if (!(*t * m * p == block_companion(ordered)))
    throw Error(ErrorCode::InternalError, "rational canonical form failed verification");
  return {std::move(ordered), std::move(*t)};
}

}  // namespace kv4
