#include <random>

#include "doctest.h"
#include "kv4/error.hpp"
#include "kv4/kmodule.hpp"

using namespace kv4;

namespace {

const Field k2 = Field::gf2();

std::vector<Label> labels_up_to(Field f, std::size_t max_dim) {
  std::vector<Label> out{Label::free_module(), Label::trivial()};
  for (unsigned d = 1; 2 * d <= max_dim; ++d)
    for (const Poly& p : irreducibles(f, d))
      for (unsigned l = 1; 2 * l * d <= max_dim; ++l) out.push_back(Label::band(p, l));
  for (unsigned n = 1; 2 * n + 1 <= max_dim; ++n) {
    out.push_back(Label::zero_band(n));
    out.push_back(Label::syzygy_pos(n));
    out.push_back(Label::syzygy_neg(n));
  }
  return out;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(KModule::validate(Matrix(k2, 3, 3), Matrix(k2, 3, 3)).dim() == 3);
  CHECK(code_of([] { KModule::validate(Matrix::identity(k2, 1), Matrix(k2, 1, 1)); }) == ErrorCode::NotSquareZeroA);
  CHECK(code_of([] { KModule::validate(Matrix(k2, 1, 1), Matrix::identity(k2, 1)); }) == ErrorCode::NotSquareZeroB);
  const Matrix a = Matrix::from_rows(k2, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}});
  const Matrix b = Matrix::from_rows(k2, {{0, 0, 0}, {0, 0, 0}, {0, 1, 0}});
  CHECK(code_of([&] { KModule::validate(a, b); }) == ErrorCode::NotCommuting);
  CHECK(code_of([] { KModule::validate(Matrix(k2, 2, 2), Matrix(k2, 3, 3)); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("canonical modules: validity, dimension, free rank") {
  for (unsigned m : {1u, 2u}) {
    const Field f = m == 1 ? k2 : Field::standard(2);
    for (const Label& l : labels_up_to(f, 13)) {
      CAPTURE(to_string(l));
      const KModule mod = canonical(f, l);
      CHECK(mod.dim() == dim_of(l));
      CHECK(free_rank(mod) == (l.kind == Label::Kind::Free ? 1u : 0u));
    }
  }
}

TEST_CASE("canonical examples") {
  const KModule free = canonical(k2, Label::free_module());
  CHECK(free.dim() == 4);
  CHECK_FALSE((free.a() * free.b()).is_zero());
  CHECK(canonical(k2, Label::syzygy_pos(1)).dim() == 3);
  const KModule band = canonical(k2, Label::band(Poly::x(k2), 1));
  CHECK(band.a().is_zero());
  CHECK(band.b() == Matrix::from_rows(k2, {{0, 0}, {1, 0}}));
  // Band(x^2+x+1, 1): a(g_1) = f_0 + f_1, basis (g1, g0, f1, f0).
  const KModule b2 = canonical(k2, Label::band(Poly(k2, {1, 1, 1}), 1));
  CHECK(b2.a().col(0) == Matrix::column(k2, {0, 0, 1, 1}));
  CHECK(b2.a().col(1) == Matrix::column(k2, {0, 0, 1, 0}));
}

TEST_CASE("invalid labels") {
  CHECK(code_of([] { canonical(k2, Label::zero_band(0)); }) == ErrorCode::InvalidLabel);
  CHECK(code_of([] { canonical(k2, Label::band(Poly(k2, {0, 1, 1}), 1)); }) == ErrorCode::InvalidLabel);
  CHECK(code_of([] { canonical(k2, Label::band(Poly(k2, {0, 1}), 0)); }) == ErrorCode::InvalidLabel);
}

TEST_CASE("radical and socle examples") {
  const KModule free = canonical(k2, Label::free_module());
  CHECK(radical(free).dim() == 3);
  CHECK(socle(free).dim() == 1);
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(socle(canonical(k2, Label::syzygy_pos(n))).dim() == n);
    CHECK(socle(canonical(k2, Label::syzygy_neg(n))).dim() == n + 1);
  }
}

TEST_CASE("radical equals socle on nontrivial projective-free indecomposables") {
  for (const Label& l : labels_up_to(k2, 13)) {
    if (l.kind == Label::Kind::Free || l.kind == Label::Kind::Trivial) continue;
    CAPTURE(to_string(l));
    const KModule m = canonical(k2, l);
    CHECK(column_space(radical(m).inclusion) == column_space(socle(m).inclusion));
    CHECK(radical(m).is_closed());
    CHECK(socle(m).is_closed());
  }
}

TEST_CASE("free rank is additive") {
  const KModule free = canonical(k2, Label::free_module());
  CHECK(free_rank(direct_sum(k2, {free, free})) == 2);
  CHECK(free_rank(direct_sum(k2, {free, canonical(k2, Label::syzygy_pos(2))})) == 1);
}

TEST_CASE("dual is an involution compatible with direct sums") {
  const KModule m = canonical(k2, Label::syzygy_pos(2)), n = canonical(k2, Label::zero_band(2));
  CHECK(dual(dual(m)) == m);
  CHECK(dual(direct_sum(k2, {m, n})) == direct_sum(k2, {dual(m), dual(n)}));
}

TEST_CASE("hom spaces") {
  const KModule k = canonical(k2, Label::trivial());
  CHECK(hom_space(k, k).size() == 1);
  // Free -> k: only the functional on the top survives.
  const auto h = hom_space(canonical(k2, Label::free_module()), k);
  REQUIRE(h.size() == 1);
  CHECK(h[0] == Matrix::from_rows(k2, {{1, 0, 0, 0}}));
  std::mt19937_64 rng(3);
  for (const Label& l : labels_up_to(k2, 7)) {
    const KModule m = canonical(k2, l);
    const auto end = hom_space(m, m);
    Matrix span = Matrix(k2, m.dim() * m.dim(), 0);
    for (const auto& x : end) {
      CHECK(is_intertwiner(x, m, m));
      span = hstack({span, Matrix(k2, m.dim() * m.dim(), 1, x.entries())});
    }
    const Matrix id = Matrix::identity(k2, m.dim());
    CHECK(in_column_space(Matrix(k2, m.dim() * m.dim(), 1, id.entries()), span));
  }
}

TEST_CASE("quotients and restrictions") {
  const KModule free = canonical(k2, Label::free_module());
  const Quotient q = quotient(free, socle(free).inclusion);
  CHECK(q.module.dim() == 3);
  CHECK(is_intertwiner(q.projection, free, q.module));
  const KModule rad = radical(free).module();
  CHECK(rad.dim() == 3);
}

TEST_CASE("change of basis and group actions") {
  const KModule m = canonical(k2, Label::syzygy_neg(2));
  std::mt19937_64 rng(1);
  Matrix p(k2, m.dim(), m.dim());
  do {
    for (auto& e : p.entries()) e = static_cast<Elem>(rng() & 1);
  } while (!inverse(p));
  const KModule c = change_basis(m, p);
  CHECK(is_intertwiner(p, c, m));
  // The regular representation from the permutation action of sigma and tau.
  const Matrix sigma = permutation_matrix(k2, {1, 0, 3, 2}), tau = permutation_matrix(k2, {2, 3, 0, 1});
  const KModule reg = from_group_action(sigma, tau);
  CHECK(free_rank(reg) == 1);
}

TEST_CASE("scalar extension") {
  const Field f4 = Field::standard(2);
  const KModule m = extend_scalars(canonical(k2, Label::band(Poly(k2, {1, 1, 1}), 1)), f4);
  CHECK(m.field() == f4);
  CHECK(m.dim() == 4);
}

TEST_CASE("label order and dims") {
  CHECK(dim_of(Label::band(Poly(k2, {1, 1, 1}), 2)) == 8);
  CHECK(Label::free_module() < Label::trivial());
  CHECK(Label::syzygy_pos(2) < Label::free_module());  // dim 5 before dim 4
  CHECK(Label::syzygy_neg(1) < Label::syzygy_pos(1));
  CHECK(Label::band(Poly(k2, {0, 1}), 1) < Label::band(Poly(k2, {1, 1}), 1));
  CHECK(Label::band(Poly(k2, {1, 1}), 1) < Label::zero_band(1));
  CHECK(to_string(Label::band(Poly(k2, {1, 1, 1}), 2)) == "Band(x^2+x+1,2)");
  CHECK(Label::omega_of_trivial(-3) == Label::syzygy_neg(3));
}
