#include "kv4/census.hpp"

#include <algorithm>

#include "kv4/classify.hpp"
#include "kv4/error.hpp"

namespace kv4 {

bool is_indecomposable_brute(const KModule& m) {
  const std::size_t n = m.dim();
  if (n == 0) return false;
  const Field& f = m.field();
  const std::vector<Matrix> end = hom_space(m, m);
  const std::uint32_t q = f.order();
  const Matrix zero(f, n, n);
  auto fitting_ok = [&](const Matrix& x) {
    if (rank(x) == n) return true;
    Matrix p = x;
    for (std::size_t i = 1; i < n; ++i) p = p * x;
    return p == zero;
  };
  std::vector<std::uint32_t> digits(end.size(), 0);
  Matrix x(f, n, n);
  for (;;) {
    std::size_t i = 0;
    while (i < end.size()) {
      const std::uint32_t old = digits[i];
      digits[i] = (old + 1) % q;
      x += static_cast<Elem>(old ^ digits[i]) * end[i];
      if (digits[i] != 0) break;
      ++i;
    }
    if (i == end.size()) return true;
    if (!fitting_ok(x)) return false;
  }
}

std::vector<Label> labels_of_dim(Field f, std::size_t dim) {
  std::vector<Label> out;
  if (dim == 4) out.push_back(Label::free_module());
  if (dim == 1) out.push_back(Label::trivial());
  if (dim >= 2 && dim % 2 == 0) {
    const std::size_t half = dim / 2;
    for (std::size_t d = 1; d <= half; ++d)
      if (half % d == 0)
        for (const Poly& p : irreducibles(f, static_cast<unsigned>(d)))
          out.push_back(Label::band(p, static_cast<unsigned>(half / d)));
    out.push_back(Label::zero_band(static_cast<unsigned>(half)));
  }
  if (dim >= 3 && dim % 2 == 1) {
    out.push_back(Label::syzygy_pos(static_cast<unsigned>(dim / 2)));
    out.push_back(Label::syzygy_neg(static_cast<unsigned>(dim / 2)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Code = std::vector<Elem>;

Code encode(const Matrix& a, const Matrix& b) {
  Code c(a.entries());
  c.insert(c.end(), b.entries().begin(), b.entries().end());
  return c;
}

void fill(Matrix& m, std::uint64_t index, std::uint32_t q) {
  for (auto& e : m.entries()) {
    e = static_cast<Elem>(index % q);
    index /= q;
  }
}

}  // namespace

Census enumerate(Field f, std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::ShapeMismatch, "census dimension must be positive");
  const std::uint64_t q = f.order();
  const std::size_t cells = dim * dim;
  // log2 of q^cells
  const std::uint64_t bits_per_matrix = cells * f.degree();
  if (bits_per_matrix > 20) throw Error(ErrorCode::ShapeMismatch, "census too large for brute force");
  Census out;
  out.dim = dim;
  out.pruned = 2 * bits_per_matrix > 22;

  std::vector<Matrix> a_choices;
  if (out.pruned) {
    for (std::size_t r = 0; 2 * r <= dim; ++r) {
      Matrix a(f, dim, dim);
      for (std::size_t i = 0; i < r; ++i) a(dim - r + i, i) = 1;
      a_choices.push_back(a);
    }
  } else {
    const std::uint64_t count = std::uint64_t{1} << bits_per_matrix;
    for (std::uint64_t i = 0; i < count; ++i) {
      Matrix a(f, dim, dim);
      fill(a, i, static_cast<std::uint32_t>(q));
      if ((a * a).is_zero()) a_choices.push_back(a);
    }
  }
  const std::uint64_t b_count = std::uint64_t{1} << bits_per_matrix;
  out.candidates = (out.pruned ? a_choices.size() : b_count) * b_count;

  std::vector<std::pair<Code, KModule>> found;
  std::uint64_t valid = 0;
  const auto total = static_cast<std::int64_t>(a_choices.size() * b_count);
#pragma omp parallel
  {
    std::vector<std::pair<Code, KModule>> local;
    std::uint64_t local_valid = 0;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t t = 0; t < total; ++t) {
      const Matrix& a = a_choices[static_cast<std::size_t>(t) / b_count];
      Matrix b(f, dim, dim);
      fill(b, static_cast<std::uint64_t>(t) % b_count, static_cast<std::uint32_t>(q));
      if (!(b * b).is_zero() || !(a * b == b * a)) continue;
      ++local_valid;
      KModule m = KModule::validate(a, b);
      if (is_indecomposable_brute(m)) local.emplace_back(encode(a, b), std::move(m));
    }
#pragma omp critical
    {
      valid += local_valid;
      for (auto& x : local) found.push_back(std::move(x));
    }
  }
  out.valid = valid;
  out.indecomposable = found.size();

  // Merge in encoding order so each class is represented by its least member.
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [code, m] : found) {
    bool placed = false;
    for (auto& c : out.classes)
      if (iso(m, c.representative)) {
        ++c.members;
        placed = true;
        break;
      }
    if (!placed) out.classes.push_back({m, 1, std::nullopt});
  }
  for (auto& c : out.classes)
    for (const Label& l : labels_of_dim(f, dim))
      if (iso(c.representative, canonical(f, l))) {
        c.label = l;
        break;
      }
  return out;
}

}  // namespace kv4
