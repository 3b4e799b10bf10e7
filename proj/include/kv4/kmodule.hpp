#pragma once

// Modules over kV4 = k[a,b]/(a^2, b^2), given by the actions A, B of
// a = 1 + sigma and b = 1 + tau.

#include <optional>
#include <string>
#include <vector>

#include "kv4/linalg.hpp"

namespace kv4 {

class KModule {
 public:
  /// Checks A^2 = 0, B^2 = 0, AB = BA; throws NotSquareZeroA, NotSquareZeroB
  /// or NotCommuting (in that order), ShapeMismatch for bad shapes.
  static KModule validate(Matrix a, Matrix b);
  static KModule zero(Field f) { return KModule(Matrix(f, 0, 0), Matrix(f, 0, 0)); }

  const Field& field() const noexcept { return a_.field(); }
  std::size_t dim() const noexcept { return a_.rows(); }
  const Matrix& a() const noexcept { return a_; }
  const Matrix& b() const noexcept { return b_; }

  friend bool operator==(const KModule&, const KModule&) = default;

 private:
  KModule(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {}
  Matrix a_, b_;
};

/// One isomorphism class of indecomposables.
struct Label {
  /// Declaration order is the sort order used in decompositions.
  enum class Kind { Free, Band, ZeroBand, SyzygyNeg, SyzygyPos, Trivial };

  Kind kind = Kind::Trivial;
  std::optional<Poly> poly;  // Band: the irreducible f
  unsigned power = 0;        // Band: l
  unsigned n = 0;            // ZeroBand, SyzygyPos, SyzygyNeg

  static Label free_module() { return {Kind::Free, std::nullopt, 0, 0}; }
  static Label trivial() { return {Kind::Trivial, std::nullopt, 0, 0}; }
  static Label band(Poly f, unsigned l) { return {Kind::Band, std::move(f), l, 0}; }
  static Label zero_band(unsigned n) { return {Kind::ZeroBand, std::nullopt, 0, n}; }
  static Label syzygy_pos(unsigned n) { return {Kind::SyzygyPos, std::nullopt, 0, n}; }
  static Label syzygy_neg(unsigned n) { return {Kind::SyzygyNeg, std::nullopt, 0, n}; }
  /// Omega^n(k): SyzygyPos(n), Trivial, or SyzygyNeg(-n).
  static Label omega_of_trivial(int n);

  friend bool operator==(const Label& x, const Label& y) noexcept;
};

std::size_t dim_of(const Label& l);
/// Total order: dim descending, then kind, then polynomial order, then index.
bool operator<(const Label& x, const Label& y) noexcept;
std::string to_string(const Label& l);
std::string kind_name(Label::Kind k);

/// Canonical module on the fixed basis of each family:
///   Free      (e, ae, be, abe)
///   Band      (g_{n-1..0}, f_{n-1..0}), B g_i = f_i, A g_i = f_{i+1}, A g_{n-1} = sum theta_i f_i
///   ZeroBand  (g_{n-1..0}, h_{n-1..0}), A g_i = h_i, B g_i = h_{i+1}, B g_{n-1} = 0
///   Trivial   dim 1
///   SyzygyPos (g_0..g_n, f_0..f_{n-1}), B g_i = f_i (i<n), A g_i = f_{i-1} (i>0)
///   SyzygyNeg (g_1..g_n, f_0..f_n), A g_i = f_{i-1}, B g_i = f_i
/// Throws InvalidLabel for zero indices or a Band poly that is not monic
/// irreducible over `f`.
KModule canonical(Field f, const Label& l);

struct DirectSum {
  KModule module;
  std::vector<Matrix> inclusions;  // canonical block injections
};
DirectSum direct_sum(const std::vector<KModule>& parts);
/// Convenience when the inclusions are not needed; requires a non-empty list
/// or a field for the empty sum.
KModule direct_sum(Field f, const std::vector<KModule>& parts);

/// Transposed actions (in characteristic 2 the contragredient action of a is A^T).
KModule dual(const KModule& m);
/// The module in a new basis: columns of `basis` are the new basis vectors,
/// so the result has actions basis^-1 A basis.
KModule change_basis(const KModule& m, const Matrix& basis);
/// Same matrices over a larger field; entries must be 0/1 or the fields equal.
KModule extend_scalars(const KModule& m, Field target);
/// sigma - 1 and tau - 1 conversion for group-element actions.
KModule from_group_action(const Matrix& sigma, const Matrix& tau);

/// An invariant subspace, given by a full-column-rank inclusion.
struct Submodule {
  KModule ambient;
  Matrix inclusion;

  std::size_t dim() const noexcept { return inclusion.cols(); }
  /// The restricted action in the basis given by the inclusion columns.
  KModule module() const;
  /// A and B map the span into itself.
  bool is_closed() const;
};

Submodule radical(const KModule& m);  // im A + im B
Submodule socle(const KModule& m);    // ker A ∩ ker B
std::size_t radical_quotient_dim(const KModule& m);
/// rank(AB): the number of free summands.
std::size_t free_rank(const KModule& m);

/// X with X A_M = A_N X and X B_M = B_N X.
bool is_intertwiner(const Matrix& x, const KModule& from, const KModule& to);
/// Reduced-echelon basis of Hom(M, N), each a dim N x dim M matrix.
std::vector<Matrix> hom_space(const KModule& from, const KModule& to);

/// Restriction of the action to the span of the columns of `inclusion`.
KModule restrict_to(const KModule& m, const Matrix& inclusion);

struct Quotient {
  KModule module;
  Matrix projection;  // dim quotient x dim M, intertwining
};
/// M / span(sub); sub must be invariant.
Quotient quotient(const KModule& m, const Matrix& sub);

}  // namespace kv4
