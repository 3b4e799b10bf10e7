#include "kv4/error.hpp"
#include "kv4/linalg.hpp"

namespace kv4 {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : f_(f), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "entry count does not match shape");
  for (Elem x : e_)
    if (!f_.contains(x)) throw Error(ErrorCode::InvalidField, "matrix entry outside the field");
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  std::vector<Elem> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged matrix rows");
    e.insert(e.end(), row.begin(), row.end());
  }
  return Matrix(f, r, c, std::move(e));
}

Matrix Matrix::column(Field f, std::vector<Elem> v) {
  const std::size_t n = v.size();
  return Matrix(f, n, 1, std::move(v));
}

bool Matrix::is_zero() const noexcept {
  for (Elem x : e_)
    if (x) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::col(std::size_t j) const { return block(0, j, rows_, 1); }
Matrix Matrix::cols(std::size_t first, std::size_t count) const { return block(0, first, rows_, count); }
Matrix Matrix::rows_range(std::size_t first, std::size_t count) const { return block(first, 0, count, cols_); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
  Matrix b(f_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix b(f_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) b(i, j) = (*this)(i, idx[j]);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.f_ == b.f_)) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "product of incompatible shapes");
  Matrix c(a.f_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem x = a(i, k);
      if (x) a.f_.axpy(x, &b.e_[k * b.cols_], &c.e_[i * c.cols_], b.cols_);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  c += b;
  return c;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  if (!(f_ == b.f_)) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorCode::ShapeMismatch, "sum of incompatible shapes");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] ^= b.e_[i];
  return *this;
}

Matrix operator*(Elem c, const Matrix& a) {
  Matrix r = a;
  if (c == 0) return Matrix(a.f_, a.rows_, a.cols_);
  a.f_.scale(c, r.e_.data(), r.e_.size());
  return r;
}

Matrix hstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw Error(ErrorCode::ShapeMismatch, "hstack of nothing");
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts[0].rows()) throw Error(ErrorCode::ShapeMismatch, "hstack row mismatch");
    cols += p.cols();
  }
  Matrix m(parts[0].field(), parts[0].rows(), cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw Error(ErrorCode::ShapeMismatch, "vstack of nothing");
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != parts[0].cols()) throw Error(ErrorCode::ShapeMismatch, "vstack column mismatch");
    rows += p.rows();
  }
  Matrix m(parts[0].field(), rows, parts[0].cols());
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

Matrix block_diag(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw Error(ErrorCode::ShapeMismatch, "block_diag of nothing");
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  Matrix m(parts[0].field(), rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    m.set_block(r, c, p);
    r += p.rows();
    c += p.cols();
  }
  return m;
}

Matrix permutation_matrix(Field f, const std::vector<std::size_t>& perm) {
  // Column j is e_{perm[j]}.
  Matrix m(f, perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
  return m;
}

}  // namespace kv4
