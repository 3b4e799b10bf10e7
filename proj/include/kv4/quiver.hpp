#pragma once

// Kronecker quiver representations [V1, V2; psi1, psi2] and the pencil psi1 + λ psi2.

#include <optional>
#include <vector>

#include "kv4/kmodule.hpp"

namespace kv4 {

struct QuiverRep {
  Field field;
  std::size_t d1 = 0, d2 = 0;
  Matrix psi1, psi2;  // d2 x d1

  /// Checks shapes; throws ShapeMismatch.
  static QuiverRep make(Matrix psi1, Matrix psi2);
  friend bool operator==(const QuiverRep&, const QuiverRep&) = default;
};

struct Speciality {
  bool special = true;
  /// Nonzero v in ker psi1 ∩ ker psi2 (d1 x 1), when that intersection is nonzero.
  std::optional<Matrix> common_kernel;
  /// Nonzero row functional killing im psi1 + im psi2 (1 x d2), when that sum is proper.
  std::optional<Matrix> cokernel;
};
Speciality is_special(const QuiverRep& r);

struct QuiverData {
  QuiverRep rep;
  Matrix complement;  // dim M x d1: representatives of a radical complement
  Matrix radical;     // dim M x d2: reduced-echelon radical basis
};
/// Requires AB = 0 (NotProjectiveFree). The complement is spanned by the
/// standard vectors missing from the radical's echelon pivots.
QuiverData to_quiver(const KModule& m);
/// Module on V1 ⊕ V2 with A(α, β) = (0, psi1 α), B(α, β) = (0, psi2 α).
KModule from_quiver(const QuiverRep& r);

/// det(psi1 + λ psi2); throws NotSquare unless d1 = d2.
Poly pencil_determinant(const QuiverRep& r);

/// V(λ) = sum g_i λ^i; column i of `coeffs` is g_i.
struct PencilVector {
  Matrix coeffs;  // d1 x (degree + 1)
  std::size_t degree() const noexcept { return coeffs.cols() - 1; }
  Matrix g(std::size_t i) const { return coeffs.col(i); }
};
/// Minimal-degree kernel vector of psi1 + λ psi2, searching degrees 0..d1.
/// Among minimal ones, the first reduced-echelon kernel basis vector of the
/// stacked system is returned.
std::optional<PencilVector> pencil_kernel_min(const QuiverRep& r);

/// Builds the copy of Omega^l(k) spanned by lifts of g_0..g_l and B g_0..B g_{l-1}.
/// `data` must come from to_quiver(m). Throws NotMinimal if the spanning
/// vectors are dependent.
Submodule syzygy_submodule_from_vector(const KModule& m, const QuiverData& data, const PencilVector& v);

}  // namespace kv4
