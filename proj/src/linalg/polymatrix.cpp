#include <algorithm>

#include "kv4/error.hpp"
#include "kv4/linalg.hpp"

namespace kv4 {

PolyMatrix::PolyMatrix(Field f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), e_(rows * cols, Poly(f)) {}

PolyMatrix PolyMatrix::identity(Field f, std::size_t n) {
  PolyMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::one(f);
  return m;
}

PolyMatrix PolyMatrix::pencil(const Matrix& c0, const Matrix& c1) {
  if (c0.rows() != c1.rows() || c0.cols() != c1.cols())
    throw Error(ErrorCode::ShapeMismatch, "pencil coefficients differ in shape");
  PolyMatrix m(c0.field(), c0.rows(), c0.cols());
  for (std::size_t i = 0; i < c0.rows(); ++i)
    for (std::size_t j = 0; j < c0.cols(); ++j) m(i, j) = Poly(c0.field(), {c0(i, j), c1(i, j)});
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "product of incompatible shapes");
  PolyMatrix c(a.f_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

namespace {

class SmithReducer {
 public:
  SmithReducer(const PolyMatrix& p, bool track)
      : w_(p),
        track_(track),
        left_(track ? PolyMatrix::identity(p.field(), p.rows()) : PolyMatrix(p.field(), 0, 0)),
        right_(track ? PolyMatrix::identity(p.field(), p.cols()) : PolyMatrix(p.field(), 0, 0)) {}

  SmithForm run() {
    const std::size_t n = std::min(w_.rows(), w_.cols());
    std::vector<Poly> diag;
    for (std::size_t t = 0; t < n; ++t) {
      if (!reduce_at(t)) break;
      diag.push_back(w_(t, t));
    }
    while (diag.size() < n) diag.emplace_back(w_.field());
    return {std::move(diag), std::move(left_), std::move(right_)};
  }

 private:
  // Minimal degree, then canonical polynomial order, then row-major position.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    for (std::size_t i = t; i < w_.rows(); ++i)
      for (std::size_t j = t; j < w_.cols(); ++j) {
        const Poly& e = w_(i, j);
        if (e.is_zero()) continue;
        if (!found || compare(e, w_(pi, pj)) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    return found;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < w_.cols(); ++j) std::swap(w_(a, j), w_(b, j));
    if (track_)
      for (std::size_t j = 0; j < left_.cols(); ++j) std::swap(left_(a, j), left_(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < w_.rows(); ++i) std::swap(w_(i, a), w_(i, b));
    if (track_)
      for (std::size_t i = 0; i < right_.rows(); ++i) std::swap(right_(i, a), right_(i, b));
  }

  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const Poly& q) {
    for (std::size_t j = 0; j < w_.cols(); ++j)
      if (!w_(src, j).is_zero()) w_(dst, j) += q * w_(src, j);
    if (track_)
      for (std::size_t j = 0; j < left_.cols(); ++j)
        if (!left_(src, j).is_zero()) left_(dst, j) += q * left_(src, j);
  }

  void add_col(std::size_t dst, std::size_t src, const Poly& q) {
    for (std::size_t i = 0; i < w_.rows(); ++i)
      if (!w_(i, src).is_zero()) w_(i, dst) += w_(i, src) * q;
    if (track_)
      for (std::size_t i = 0; i < right_.rows(); ++i)
        if (!right_(i, src).is_zero()) right_(i, dst) += right_(i, src) * q;
  }

  void scale_row(std::size_t r, Elem c) {
    for (std::size_t j = 0; j < w_.cols(); ++j) w_(r, j) = c * w_(r, j);
    if (track_)
      for (std::size_t j = 0; j < left_.cols(); ++j) left_(r, j) = c * left_(r, j);
  }

  bool reduce_at(std::size_t t) {
    const Field& f = w_.field();
    for (;;) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) return false;
      swap_rows(t, pi);
      swap_cols(t, pj);
      const Poly pivot = w_(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < w_.rows(); ++i) {
        if (w_(i, t).is_zero()) continue;
        auto [q, r] = divrem(w_(i, t), pivot);
        add_row(i, t, q);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < w_.cols(); ++j) {
        if (w_(t, j).is_zero()) continue;
        auto [q, r] = divrem(w_(t, j), pivot);
        add_col(j, t, q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < w_.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < w_.cols(); ++j)
          if (!w_(i, j).is_zero() && !(w_(i, j) % pivot).is_zero()) {
            add_row(t, i, Poly::one(f));
            divides = false;
            break;
          }
      if (!divides) continue;
      scale_row(t, f.inv(pivot.lead()));
      return true;
    }
  }

  PolyMatrix w_;
  bool track_;
  PolyMatrix left_, right_;
};

}  // namespace

SmithForm smith_form(const PolyMatrix& p) { return SmithReducer(p, true).run(); }

std::vector<Poly> invariant_factors(const PolyMatrix& p) { return SmithReducer(p, false).run().diagonal; }

Poly determinant(const PolyMatrix& p) {
  if (p.rows() != p.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = p.rows();
  const Field& f = p.field();
  if (n == 0) return Poly::one(f);
  PolyMatrix m = p;
  Poly prev = Poly::one(f);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t i = k + 1;
      while (i < n && m(i, k).is_zero()) ++i;
      if (i == n) return Poly(f);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(i, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) + m(i, k) * m(k, j)) / prev;
      m(i, k) = Poly(f);
    }
    prev = m(k, k);
  }
  return m(n - 1, n - 1);
}

}  // namespace kv4
