#pragma once

// Exact dense linear algebra over GF(2^m) and over GF(2^m)[λ].

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kv4/gf.hpp"

namespace kv4 {

class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<std::vector<Elem>>& rows);
  /// Column vector.
  static Matrix column(Field f, std::vector<Elem> v);

  const Field& field() const noexcept { return f_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool is_zero() const noexcept;

  Elem operator()(std::size_t i, std::size_t j) const noexcept { return e_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) noexcept { return e_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const noexcept { return {e_.data() + i * cols_, cols_}; }
  std::span<Elem> row(std::size_t i) noexcept { return {e_.data() + i * cols_, cols_}; }
  const std::vector<Elem>& entries() const noexcept { return e_; }
  std::vector<Elem>& entries() noexcept { return e_; }

  Matrix transpose() const;
  Matrix col(std::size_t j) const;
  Matrix cols(std::size_t first, std::size_t count) const;
  Matrix rows_range(std::size_t first, std::size_t count) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + b; }
  friend Matrix operator*(Elem c, const Matrix& a);
  Matrix& operator+=(const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<Elem> e_;
};

Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);
Matrix block_diag(const std::vector<Matrix>& parts);
Matrix permutation_matrix(Field f, const std::vector<std::size_t>& perm);

/// Reduced row echelon form and its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Row updates for each pivot are independent and
/// run data-parallel (OpenMP) once the matrix is large enough; the output is
/// bit-identical to rref_serial.
Echelon rref(Matrix m);
Echelon rref_serial(Matrix m);

struct RankKernel {
  std::size_t rank;
  /// cols x (cols - rank); column t is the kernel vector whose t-th free
  /// variable is 1 and the other free variables are 0 (reduced echelon order).
  Matrix kernel;
};

RankKernel rank_kernel(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix kernel(const Matrix& m);
/// A reduced-echelon basis (as columns) of the column space.
Matrix column_space(const Matrix& m);
/// One X with m X = target, free variables set to zero, or nullopt.
std::optional<Matrix> solve(const Matrix& m, const Matrix& target);
std::optional<Matrix> inverse(const Matrix& m);
Elem determinant(const Matrix& m);
/// Indices of standard basis vectors completing the column space of `basis`
/// (greedy in index order); these are the non-pivot rows of its echelon form.
std::vector<std::size_t> complement_indices(const Matrix& basis);
/// Columns of `a` lie in the column space of `b`.
bool in_column_space(const Matrix& a, const Matrix& b);

/// Matrix over GF(2^m)[λ].
class PolyMatrix {
 public:
  PolyMatrix(Field f, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(Field f, std::size_t n);
  /// c0 + λ c1.
  static PolyMatrix pencil(const Matrix& c0, const Matrix& c1);

  const Field& field() const noexcept { return f_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Poly& operator()(std::size_t i, std::size_t j) const noexcept { return e_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) noexcept { return e_[i * cols_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<Poly> e_;
};

struct SmithForm {
  /// min(rows, cols) entries: monic invariant factors d1 | d2 | ..., then zeros.
  std::vector<Poly> diagonal;
  PolyMatrix left, right;  // unimodular, left * P * right = diag
};

/// Elementary row/column reduction; the pivot is the minimal-degree nonzero
/// entry, ties broken by canonical polynomial order then position.
SmithForm smith_form(const PolyMatrix& p);
/// Diagonal only, skipping the transform bookkeeping.
std::vector<Poly> invariant_factors(const PolyMatrix& p);
/// Fraction-free (Bareiss) determinant. Throws NotSquare.
Poly determinant(const PolyMatrix& p);

/// Companion matrix of a monic polynomial p = x^n + sum c_i x^i: e_i -> e_{i+1}
/// for i < n-1, e_{n-1} -> sum c_i e_i (characteristic 2, signs vanish).
Matrix companion(const Poly& p);
Poly characteristic_polynomial(const Matrix& m);
/// p(M).
Matrix evaluate(const Poly& p, const Matrix& m);

struct RationalCanonicalForm {
  /// (f, l) per companion block, in block order.
  std::vector<Factor> elementary_divisors;
  /// transform * M * transform^-1 = block_diag(companion(f^l) ...).
  Matrix transform;
};

/// Blocks ordered by deg f^l descending, then canonical order of f^l.
RationalCanonicalForm rcf(const Matrix& m);
/// Elementary divisors alone, via the Smith form of λI - M.
std::vector<Factor> elementary_divisors(const Matrix& m);
Matrix block_companion(const std::vector<Factor>& divisors);

}  // namespace kv4
