#include "kv4/syzygy.hpp"

#include <algorithm>

#include "kv4/classify.hpp"
#include "kv4/error.hpp"

namespace kv4 {

CoverData projective_cover(const KModule& m) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  const std::vector<std::size_t> gens = complement_indices(n ? radical(m).inclusion : Matrix(f, 0, 0));
  const std::size_t g = gens.size();
  const KModule free = canonical(f, Label::free_module());
  const KModule cover = direct_sum(f, std::vector<KModule>(g, free));
  if (g == 0) return {0, cover, Matrix(f, n, 0), KModule::zero(f), Matrix(f, 0, 0)};
  const Matrix ab = m.a() * m.b();
  std::vector<Matrix> blocks;
  for (std::size_t j : gens) {
    Matrix x(f, n, 1);
    x(j, 0) = 1;
    blocks.push_back(hstack({x, m.a() * x, m.b() * x, ab * x}));
  }
  Matrix covering = hstack(blocks);
  Matrix inc = kernel(covering);
  KModule ker = restrict_to(cover, inc);
  return {g, cover, std::move(covering), std::move(ker), std::move(inc)};
}

Hull injective_hull(const KModule& m) {
  const CoverData c = projective_cover(dual(m));
  return {dual(c.cover), c.covering.transpose(), dual(c.kernel)};
}

KModule projective_free_part(const KModule& m) {
  const Matrix ab = m.a() * m.b();
  if (ab.is_zero()) return m;
  const Matrix image = column_space(ab);
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < image.cols(); ++j) {
    const Matrix x = *solve(ab, image.col(j));
    blocks.push_back(hstack({x, m.a() * x, m.b() * x, ab * x}));
  }
  return split_off(m, {m, hstack(blocks)}).complement;
}

KModule omega(const KModule& m, int n) {
  if (n == 0) return projective_free_part(m);
  if (n < 0) return dual(omega(dual(m), -n));
  KModule cur = m;
  for (int i = 0; i < n; ++i) cur = projective_cover(cur).kernel;
  return cur;
}

bool is_exact(const ShortExactSequence& s) {
  if (!is_intertwiner(s.inject, s.left, s.middle) || !is_intertwiner(s.surject, s.middle, s.right)) return false;
  if (rank(s.inject) != s.left.dim() || rank(s.surject) != s.right.dim()) return false;
  if (s.left.dim() + s.right.dim() != s.middle.dim()) return false;
  return s.left.dim() == 0 || (s.surject * s.inject).is_zero();
}

bool is_split(const ShortExactSequence& s) {
  try {
    split_off(s.middle, {s.middle, s.inject});
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotASummand) throw;
    return false;
  }
}

namespace {

Matrix vec(const Matrix& x) { return Matrix(x.field(), x.rows() * x.cols(), 1, std::vector<Elem>(x.entries())); }

}  // namespace

std::vector<Matrix> ext1_basis(const KModule& c, const KModule& a) {
  if (!(c.field() == a.field())) throw Error(ErrorCode::FieldMismatch, "ext1 across fields");
  const CoverData cov = projective_cover(c);
  std::vector<Matrix> out;
  if (cov.kernel.dim() == 0 || a.dim() == 0) return out;
  const std::vector<Matrix> hom = hom_space(cov.kernel, a);
  std::vector<Matrix> span;
  for (const Matrix& phi : hom_space(cov.cover, a)) span.push_back(vec(phi * cov.kernel_inclusion));
  Matrix current = span.empty() ? Matrix(c.field(), a.dim() * cov.kernel.dim(), 0) : hstack(span);
  std::size_t r = rank(current);
  for (const Matrix& h : hom) {
    Matrix next = hstack({current, vec(h)});
    const std::size_t nr = rank(next);
    if (nr == r) continue;
    current = std::move(next);
    r = nr;
    out.push_back(h);
  }
  return out;
}

ShortExactSequence extension_from_cocycle(const KModule& c, const KModule& a, const Matrix& h) {
  const CoverData cov = projective_cover(c);
  if (!is_intertwiner(h, cov.kernel, a)) throw Error(ErrorCode::NotACocycle, "h is not a map Omega(C) -> A");
  const Field& f = c.field();
  const std::size_t da = a.dim(), dp = cov.cover.dim();
  const KModule sum = direct_sum(f, {a, cov.cover});
  const Quotient q = cov.kernel.dim() ? quotient(sum, vstack({h, cov.kernel_inclusion}))
                                      : quotient(sum, Matrix(f, da + dp, 0));
  Matrix inject = q.projection.cols(0, da);
  // surject * projection = [0 | covering]
  const Matrix target = hstack({Matrix(f, c.dim(), da), cov.covering});
  const auto s = solve(q.projection.transpose(), target.transpose());
  if (!s) throw Error(ErrorCode::InternalError, "pushout map to C does not factor");
  return {a, q.module, c, std::move(inject), s->transpose()};
}

std::vector<Label> ar_middle_labels(int l) {
  std::vector<Label> out;
  if (l == -1)
    out = {Label::free_module(), Label::trivial(), Label::trivial()};
  else
    out = {Label::omega_of_trivial(l + 1), Label::omega_of_trivial(l + 1)};
  std::sort(out.begin(), out.end());
  return out;
}

ShortExactSequence ar_sequence(Field f, int l, int limit) {
  if (l > limit || l < -limit) throw Error(ErrorCode::InvalidLabel, "index " + std::to_string(l) + " beyond the limit");
  const KModule right = canonical(f, Label::omega_of_trivial(l));
  const KModule left = canonical(f, Label::omega_of_trivial(l + 2));
  const std::vector<Label> expected = ar_middle_labels(l);
  const std::vector<Matrix> basis = ext1_basis(right, left);
  const std::size_t e = basis.size();
  const std::uint32_t q = f.order();
  constexpr std::size_t kMaxTries = std::size_t{1} << 16;
  std::vector<std::uint32_t> digits(e, 0);
  for (std::size_t tries = 0; tries < kMaxTries; ++tries) {
    std::size_t i = 0;
    while (i < e) {
      digits[i] = (digits[i] + 1) % q;
      if (digits[i] != 0) break;
      ++i;
    }
    if (i == e) break;
    Matrix h(f, basis[0].rows(), basis[0].cols());
    for (std::size_t j = 0; j < e; ++j)
      if (digits[j]) h += static_cast<Elem>(digits[j]) * basis[j];
    ShortExactSequence s = extension_from_cocycle(right, left, h);
    std::vector<Label> got;
    for (const auto& sm : decompose(s.middle).summands) got.push_back(sm.label);
    if (got == expected && !is_split(s)) return s;
  }
  throw Error(ErrorCode::SearchExhausted, "no cocycle gives the expected middle term");
}

}  // namespace kv4
