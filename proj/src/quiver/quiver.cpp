#include "kv4/quiver.hpp"

#include "kv4/error.hpp"

namespace kv4 {

QuiverRep QuiverRep::make(Matrix psi1, Matrix psi2) {
  if (psi1.rows() != psi2.rows() || psi1.cols() != psi2.cols())
    throw Error(ErrorCode::ShapeMismatch, "psi1 and psi2 differ in shape");
  if (!(psi1.field() == psi2.field())) throw Error(ErrorCode::FieldMismatch, "psi1 and psi2 over different fields");
  const Field f = psi1.field();
  const std::size_t d1 = psi1.cols(), d2 = psi1.rows();
  return {f, d1, d2, std::move(psi1), std::move(psi2)};
}

Speciality is_special(const QuiverRep& r) {
  Speciality s;
  if (r.d1 > 0) {
    const Matrix k = kernel(vstack({r.psi1, r.psi2}));
    if (k.cols() > 0) {
      s.special = false;
      s.common_kernel = k.col(0);
    }
  }
  if (r.d2 > 0) {
    const Matrix k = r.d1 > 0 ? kernel(hstack({r.psi1, r.psi2}).transpose()) : Matrix::identity(r.field, r.d2);
    if (k.cols() > 0) {
      s.special = false;
      s.cokernel = k.col(0).transpose();
    }
  }
  return s;
}

QuiverData to_quiver(const KModule& m) {
  if (!(m.a() * m.b()).is_zero()) throw Error(ErrorCode::NotProjectiveFree, "A*B != 0");
  const Field& f = m.field();
  const std::size_t n = m.dim();
  const Matrix rad = radical(m).inclusion;
  const auto comp_idx = complement_indices(rad);
  const Matrix comp = Matrix::identity(f, n).select_cols(comp_idx);
  const std::size_t d1 = comp.cols(), d2 = rad.cols();
  Matrix psi1(f, d2, d1), psi2(f, d2, d1);
  if (d1 > 0 && d2 > 0) {
    psi1 = *solve(rad, m.a() * comp);
    psi2 = *solve(rad, m.b() * comp);
  }
  return {QuiverRep::make(std::move(psi1), std::move(psi2)), comp, rad};
}

KModule from_quiver(const QuiverRep& r) {
  const std::size_t n = r.d1 + r.d2;
  Matrix a(r.field, n, n), b(r.field, n, n);
  a.set_block(r.d1, 0, r.psi1);
  b.set_block(r.d1, 0, r.psi2);
  return KModule::validate(a, b);
}

Poly pencil_determinant(const QuiverRep& r) {
  if (r.d1 != r.d2) throw Error(ErrorCode::NotSquare, "pencil is not square");
  return determinant(PolyMatrix::pencil(r.psi1, r.psi2));
}

std::optional<PencilVector> pencil_kernel_min(const QuiverRep& r) {
  const std::size_t d1 = r.d1, d2 = r.d2;
  if (d1 == 0) return std::nullopt;
  for (std::size_t d = 0; d <= d1; ++d) {
    // Unknowns g_0..g_d stacked; block row t is the λ^t coefficient.
    Matrix sys(r.field, (d + 2) * d2, (d + 1) * d1);
    for (std::size_t i = 0; i <= d; ++i) {
      sys.set_block(i * d2, i * d1, r.psi1);
      sys.set_block((i + 1) * d2, i * d1, r.psi2);
    }
    const Matrix k = kernel(sys);
    if (k.cols() == 0) continue;
    // A kernel vector of degree < d would already have been found, so the
    // top coefficient of the first basis vector is nonzero.
    Matrix coeffs(r.field, d1, d + 1);
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; j < d1; ++j) coeffs(j, i) = k(i * d1 + j, 0);
    if (coeffs.col(d).is_zero()) throw Error(ErrorCode::InternalError, "kernel vector lost its degree");
    return PencilVector{std::move(coeffs)};
  }
  return std::nullopt;
}

Submodule syzygy_submodule_from_vector(const KModule& m, const QuiverData& data, const PencilVector& v) {
  const std::size_t l = v.degree();
  const Matrix lifts = data.complement * v.coeffs;
  std::vector<Matrix> cols{lifts};
  if (l > 0) cols.push_back(m.b() * lifts.cols(0, l));
  Matrix basis = hstack(cols);
  if (rank(basis) != 2 * l + 1) throw Error(ErrorCode::NotMinimal, "syzygy spanning vectors are dependent");
  return {m, std::move(basis)};
}

}  // namespace kv4
