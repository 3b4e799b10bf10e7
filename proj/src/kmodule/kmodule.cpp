#include "kv4/kmodule.hpp"

#include "kv4/error.hpp"

namespace kv4 {

KModule KModule::validate(Matrix a, Matrix b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw Error(ErrorCode::ShapeMismatch, "A and B must be square of equal size");
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "A and B over different fields");
  if (!(a * a).is_zero()) throw Error(ErrorCode::NotSquareZeroA, "A*A != 0");
  if (!(b * b).is_zero()) throw Error(ErrorCode::NotSquareZeroB, "B*B != 0");
  if (!(a * b == b * a)) throw Error(ErrorCode::NotCommuting, "A*B != B*A");
  return KModule(std::move(a), std::move(b));
}

DirectSum direct_sum(const std::vector<KModule>& parts) {
  if (parts.empty()) throw Error(ErrorCode::ShapeMismatch, "direct_sum of an empty list needs a field");
  const Field f = parts[0].field();
  std::vector<Matrix> as, bs;
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (!(p.field() == f)) throw Error(ErrorCode::FieldMismatch, "summands over different fields");
    as.push_back(p.a());
    bs.push_back(p.b());
    total += p.dim();
  }
  DirectSum out{KModule::validate(block_diag(as), block_diag(bs)), {}};
  std::size_t offset = 0;
  for (const auto& p : parts) {
    Matrix inc(f, total, p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) inc(offset + i, i) = 1;
    out.inclusions.push_back(std::move(inc));
    offset += p.dim();
  }
  return out;
}

KModule direct_sum(Field f, const std::vector<KModule>& parts) {
  if (parts.empty()) return KModule::zero(f);
  return direct_sum(parts).module;
}

KModule dual(const KModule& m) { return KModule::validate(m.a().transpose(), m.b().transpose()); }

KModule change_basis(const KModule& m, const Matrix& basis) {
  auto inv = inverse(basis);
  if (!inv || basis.rows() != m.dim()) throw Error(ErrorCode::ShapeMismatch, "change of basis is not invertible");
  return KModule::validate(*inv * m.a() * basis, *inv * m.b() * basis);
}

KModule extend_scalars(const KModule& m, Field target) {
  if (m.field() == target) return m;
  auto lift = [&](const Matrix& x) {
    for (Elem e : x.entries())
      if (e > 1) throw Error(ErrorCode::FieldMismatch, "only 0/1 matrices extend to another field");
    return Matrix(target, x.rows(), x.cols(), x.entries());
  };
  return KModule::validate(lift(m.a()), lift(m.b()));
}

KModule from_group_action(const Matrix& sigma, const Matrix& tau) {
  const Matrix id = Matrix::identity(sigma.field(), sigma.rows());
  return KModule::validate(sigma + id, tau + id);
}

KModule restrict_to(const KModule& m, const Matrix& inclusion) {
  const Field& f = m.field();
  if (inclusion.cols() == 0) return KModule::zero(f);
  auto a = solve(inclusion, m.a() * inclusion);
  auto b = solve(inclusion, m.b() * inclusion);
  if (!a || !b) throw Error(ErrorCode::InternalError, "subspace is not invariant under the action");
  return KModule::validate(std::move(*a), std::move(*b));
}

KModule Submodule::module() const { return restrict_to(ambient, inclusion); }

bool Submodule::is_closed() const {
  return in_column_space(ambient.a() * inclusion, inclusion) && in_column_space(ambient.b() * inclusion, inclusion);
}

Submodule radical(const KModule& m) {
  if (m.dim() == 0) return {m, Matrix(m.field(), 0, 0)};
  return {m, column_space(hstack({m.a(), m.b()}))};
}

Submodule socle(const KModule& m) {
  if (m.dim() == 0) return {m, Matrix(m.field(), 0, 0)};
  return {m, kernel(vstack({m.a(), m.b()}))};
}

std::size_t radical_quotient_dim(const KModule& m) { return m.dim() - radical(m).dim(); }

std::size_t free_rank(const KModule& m) { return rank(m.a() * m.b()); }

bool is_intertwiner(const Matrix& x, const KModule& from, const KModule& to) {
  if (x.rows() != to.dim() || x.cols() != from.dim()) return false;
  return x * from.a() == to.a() * x && x * from.b() == to.b() * x;
}

std::vector<Matrix> hom_space(const KModule& from, const KModule& to) {
  if (!(from.field() == to.field())) throw Error(ErrorCode::FieldMismatch, "hom_space across fields");
  const Field& f = from.field();
  const std::size_t m = from.dim(), n = to.dim(), unknowns = m * n;
  std::vector<Matrix> basis;
  if (unknowns == 0) return basis;
  // X(i,j) is unknown i*m + j; one equation per entry of X A_M - A_N X and of the B analogue.
  Matrix sys(f, 2 * unknowns, unknowns);
  std::size_t row = 0;
  for (const auto* pair : {&from.a(), &from.b()}) {
    const Matrix& src = *pair;
    const Matrix& dst = pair == &from.a() ? to.a() : to.b();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j, ++row) {
        for (std::size_t k = 0; k < m; ++k) sys(row, i * m + k) ^= src(k, j);
        for (std::size_t k = 0; k < n; ++k) sys(row, k * m + j) ^= dst(i, k);
      }
  }
  const Matrix k = kernel(sys);
  for (std::size_t t = 0; t < k.cols(); ++t) {
    Matrix x(f, n, m);
    for (std::size_t u = 0; u < unknowns; ++u) x.entries()[u] = k(u, t);
    basis.push_back(std::move(x));
  }
  return basis;
}

Quotient quotient(const KModule& m, const Matrix& sub) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  const Matrix w = sub.cols() ? column_space(sub) : Matrix(f, n, 0);
  const auto comp = complement_indices(w);
  const Matrix t = hstack({w, Matrix::identity(f, n).select_cols(comp)});
  const Matrix tinv = *inverse(t);
  const std::size_t k = w.cols(), c = comp.size();
  const Matrix proj = tinv.rows_range(k, c);
  if (c == 0) return {KModule::zero(f), proj};
  const Matrix a = (tinv * m.a() * t).block(k, k, c, c);
  const Matrix b = (tinv * m.b() * t).block(k, k, c, c);
  return {KModule::validate(a, b), proj};
}

}  // namespace kv4
