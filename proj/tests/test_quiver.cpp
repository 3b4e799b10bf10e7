#include <random>

#include "doctest.h"
#include "kv4/classify.hpp"
#include "kv4/error.hpp"
#include "kv4/quiver.hpp"

using namespace kv4;

namespace {

const Field k2 = Field::gf2();

Matrix rows(std::vector<std::vector<Elem>> r) { return Matrix::from_rows(k2, r); }

Poly cofactor_det(const PolyMatrix& p) {
  const std::size_t n = p.rows();
  if (n == 0) return Poly::one(p.field());
  Poly sum(p.field());
  for (std::size_t j = 0; j < n; ++j) {
    PolyMatrix minor(p.field(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = p(i, c);
    sum += p(0, j) * cofactor_det(minor);
  }
  return sum;
}

std::vector<Label> projective_free_labels(std::size_t max_dim) {
  std::vector<Label> out{Label::trivial()};
  for (unsigned d = 1; 2 * d <= max_dim; ++d)
    for (const Poly& p : irreducibles(k2, d))
      for (unsigned l = 1; 2 * l * d <= max_dim; ++l) out.push_back(Label::band(p, l));
  for (unsigned n = 1; 2 * n + 1 <= max_dim; ++n) {
    out.push_back(Label::zero_band(n));
    out.push_back(Label::syzygy_pos(n));
    out.push_back(Label::syzygy_neg(n));
  }
  return out;
}

}  // namespace

TEST_CASE("speciality examples") {
  CHECK(is_special(QuiverRep::make(rows({{0, 1}}), rows({{1, 0}}))).special);
  const auto s = is_special(QuiverRep::make(Matrix(k2, 1, 2), Matrix(k2, 1, 2)));
  CHECK_FALSE(s.special);
  REQUIRE(s.common_kernel);
  CHECK_FALSE(s.common_kernel->is_zero());
  std::mt19937_64 rng(1);
  Matrix any(k2, 3, 3);
  for (auto& e : any.entries()) e = static_cast<Elem>(rng() & 1);
  CHECK(is_special(QuiverRep::make(Matrix::identity(k2, 3), any)).special);
}

TEST_CASE("to_quiver examples") {
  const QuiverData t = to_quiver(canonical(k2, Label::trivial()));
  CHECK(t.rep.d1 == 1);
  CHECK(t.rep.d2 == 0);
  const QuiverData s = to_quiver(canonical(k2, Label::syzygy_pos(1)));
  CHECK(s.rep.d1 == 2);
  CHECK(s.rep.d2 == 1);
  CHECK(s.rep.psi1 == rows({{0, 1}}));
  CHECK(s.rep.psi2 == rows({{1, 0}}));
  try {
    to_quiver(canonical(k2, Label::free_module()));
    FAIL("expected NotProjectiveFree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotProjectiveFree);
  }
}

TEST_CASE("from_quiver examples") {
  CHECK(from_quiver(QuiverRep::make(Matrix(k2, 0, 1), Matrix(k2, 0, 1))) == canonical(k2, Label::trivial()));
  const KModule m = from_quiver(QuiverRep::make(rows({{0, 1}}), rows({{1, 0}})));
  // Basis (v1, v2, w) against canonical (g0, g1, f0): the same ordering.
  CHECK(m == canonical(k2, Label::syzygy_pos(1)));
}

TEST_CASE("to_quiver outputs are special without Trivial summands, and round trip") {
  for (const Label& l : projective_free_labels(13)) {
    CAPTURE(to_string(l));
    const KModule m = canonical(k2, l);
    const QuiverData q = to_quiver(m);
    if (l.kind != Label::Kind::Trivial) CHECK(is_special(q.rep).special);
    CHECK(iso(from_quiver(q.rep), m).has_value());
  }
}

TEST_CASE("random special reps round trip up to basis change") {
  std::mt19937_64 rng(4);
  int tested = 0;
  while (tested < 60) {
    const std::size_t d1 = 1 + rng() % 5, d2 = rng() % 6;
    Matrix p1(k2, d2, d1), p2(k2, d2, d1);
    for (auto& e : p1.entries()) e = static_cast<Elem>(rng() & 1);
    for (auto& e : p2.entries()) e = static_cast<Elem>(rng() & 1);
    const QuiverRep r = QuiverRep::make(p1, p2);
    if (!is_special(r).special) continue;
    ++tested;
    const QuiverRep back = to_quiver(from_quiver(r)).rep;
    REQUIRE(back.d1 == r.d1);
    REQUIRE(back.d2 == r.d2);
    // Equal up to (P, Q): Q psi_i = psi_i' P, witnessed by an iso of the modules.
    CHECK(iso(from_quiver(back), from_quiver(r)).has_value());
  }
}

TEST_CASE("pencil determinant") {
  for (unsigned d = 1; d <= 2; ++d)
    for (const Poly& f : irreducibles(k2, d))
      for (unsigned l = 1; l * d <= 4; ++l) {
        const QuiverRep r = to_quiver(canonical(k2, Label::band(f, l))).rep;
        CHECK(pencil_determinant(r) == pow(f, l));
        CHECK(pencil_determinant(r) == cofactor_det(PolyMatrix::pencil(r.psi1, r.psi2)));
      }
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(pencil_determinant(to_quiver(canonical(k2, Label::zero_band(n))).rep) == Poly::one(k2));
  CHECK(pencil_determinant(QuiverRep::make(Matrix(k2, 1, 1), Matrix(k2, 1, 1))).is_zero());
  CHECK_THROWS_AS(pencil_determinant(QuiverRep::make(Matrix(k2, 1, 2), Matrix(k2, 1, 2))), Error);
}

TEST_CASE("minimal kernel vectors") {
  const auto v = pencil_kernel_min(QuiverRep::make(rows({{0, 1}}), rows({{1, 0}})));
  REQUIRE(v);
  CHECK(v->degree() == 1);
  CHECK(v->g(0) == Matrix::column(k2, {1, 0}));
  CHECK(v->g(1) == Matrix::column(k2, {0, 1}));
  const auto t = pencil_kernel_min(QuiverRep::make(Matrix(k2, 0, 1), Matrix(k2, 0, 1)));
  REQUIRE(t);
  CHECK(t->degree() == 0);
  CHECK(t->g(0) == Matrix::column(k2, {1}));
  for (const Label& l : projective_free_labels(12)) {
    CAPTURE(to_string(l));
    const QuiverRep r = to_quiver(canonical(k2, l)).rep;
    const auto k = pencil_kernel_min(r);
    if (l.kind == Label::Kind::Band || l.kind == Label::Kind::ZeroBand) {
      CHECK_FALSE(k);
    } else if (l.kind == Label::Kind::SyzygyPos) {
      REQUIRE(k);
      CHECK(k->degree() == l.n);
    } else if (l.kind == Label::Kind::SyzygyNeg) {
      CHECK_FALSE(k);
      CHECK(pencil_kernel_min(to_quiver(dual(canonical(k2, l))).rep)->degree() == l.n);
    }
  }
}

TEST_CASE("minimal vectors satisfy the chain equations") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d1 = 1 + rng() % 5, d2 = rng() % 5;
    Matrix p1(k2, d2, d1), p2(k2, d2, d1);
    for (auto& e : p1.entries()) e = static_cast<Elem>(rng() & 1);
    for (auto& e : p2.entries()) e = static_cast<Elem>(rng() & 1);
    const QuiverRep r = QuiverRep::make(p1, p2);
    const auto v = pencil_kernel_min(r);
    if (d1 > d2) REQUIRE(v);
    if (!v) continue;
    const std::size_t l = v->degree();
    CHECK(l <= d1);
    CHECK_FALSE(v->g(l).is_zero());
    CHECK((p1 * v->g(0)).is_zero());
    for (std::size_t i = 0; i < l; ++i) CHECK(p2 * v->g(i) == p1 * v->g(i + 1));
    CHECK((p2 * v->g(l)).is_zero());
  }
}

TEST_CASE("syzygy submodule from a minimal vector") {
  const KModule s1 = canonical(k2, Label::syzygy_pos(1));
  const QuiverData q = to_quiver(s1);
  const Submodule sub = syzygy_submodule_from_vector(s1, q, *pencil_kernel_min(q.rep));
  CHECK(sub.dim() == 3);
  CHECK(sub.module() == s1);

  const KModule sum = direct_sum(k2, {s1, canonical(k2, Label::trivial())});
  const QuiverData qs = to_quiver(sum);
  const auto v = pencil_kernel_min(qs.rep);
  REQUIRE(v);
  CHECK(v->degree() == 0);
  const Submodule triv = syzygy_submodule_from_vector(sum, qs, *v);
  CHECK(triv.module() == canonical(k2, Label::trivial()));
  CHECK(triv.inclusion == Matrix::column(k2, {0, 0, 0, 1}));

  const QuiverRep band = to_quiver(canonical(k2, Label::band(Poly::x(k2), 1))).rep;
  CHECK(pencil_determinant(band) == Poly::x(k2));
  CHECK_FALSE(pencil_kernel_min(band));

  for (unsigned n = 1; n <= 5; ++n) {
    const KModule m = canonical(k2, Label::syzygy_pos(n));
    const QuiverData d = to_quiver(m);
    CHECK(syzygy_submodule_from_vector(m, d, *pencil_kernel_min(d.rep)).module() == m);
  }
}
