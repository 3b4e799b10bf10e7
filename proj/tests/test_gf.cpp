#include <map>
#include <random>

#include "doctest.h"
#include "kv4/error.hpp"
#include "kv4/gf.hpp"

using namespace kv4;

namespace {

// Carry-less product reduced by the modulus, bit by bit.
std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y, unsigned m, std::uint32_t mod) {
  std::uint32_t r = 0;
  for (unsigned i = 0; i < m; ++i)
    if (y >> i & 1) r ^= x << i;
  for (int i = 2 * static_cast<int>(m) - 2; i >= static_cast<int>(m); --i)
    if (r >> i & 1) r ^= mod << (i - m);
  return r;
}

Poly gf2(std::vector<Elem> c) { return Poly(Field::gf2(), std::move(c)); }

Poly random_poly(std::mt19937_64& rng, const Field& f, int degree) {
  std::vector<Elem> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = static_cast<Elem>(rng() % f.order());
  c.back() = 1;
  return Poly(f, c);
}

// Irreducibility by trial division by every monic polynomial of degree <= deg/2.
bool brute_irreducible(const Poly& p) {
  const Field& f = p.field();
  const int d = p.degree();
  if (d < 1) return false;
  for (int k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= f.order();
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Elem> c;
      std::uint64_t t = code;
      for (int i = 0; i < k; ++i, t /= f.order()) c.push_back(static_cast<Elem>(t % f.order()));
      c.push_back(1);
      if ((p % Poly(f, c)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("field multiplication matches the bitwise oracle") {
  for (unsigned m = 1; m <= 8; ++m) {
    const Field f = m == 1 ? Field::gf2() : Field::standard(m);
    const std::uint32_t mod = m == 1 ? 0b11 : Field::default_modulus(m);
    for (std::uint32_t x = 0; x < f.order(); ++x)
      for (std::uint32_t y = 0; y < f.order(); y += (m > 6 ? 7 : 1))
        REQUIRE(f.mul(static_cast<Elem>(x), static_cast<Elem>(y)) == slow_mul(x, y, m, mod));
  }
}

TEST_CASE("inverse, square root and power in GF(2^m)") {
  for (unsigned m : {1u, 2u, 4u, 8u}) {
    const Field f = m == 1 ? Field::gf2() : Field::standard(m);
    for (std::uint32_t x = 1; x < f.order(); ++x) {
      const auto e = static_cast<Elem>(x);
      CHECK(f.mul(e, f.inv(e)) == 1);
      CHECK(f.mul(f.sqrt(e), f.sqrt(e)) == e);
      CHECK(f.pow(e, f.order() - 1) == 1);
    }
    CHECK_THROWS_AS(f.inv(0), Error);
  }
}

TEST_CASE("GF(4): alpha * alpha = alpha + 1") {
  const Field f = Field::standard(2);
  CHECK(f.mul(0b10, 0b10) == 0b11);
}

TEST_CASE("explicit modulus must be irreducible") {
  CHECK_THROWS_AS(Field::with_modulus(2, 0b101), Error);  // x^2+1 = (x+1)^2
  CHECK(Field::with_modulus(4, 0b11001).degree() == 4);   // x^4+x^3+1
  CHECK(Field::with_modulus(2, 0b111) == Field::standard(2));
  const Field f = Field::with_modulus(16, (1u << 16) | 0b101101);  // x^16+x^5+x^3+x^2+1
  CHECK(f.order() == 65536);
}

TEST_CASE("polynomial arithmetic examples") {
  CHECK(gf2({1, 1}) * gf2({1, 1}) == gf2({1, 0, 1}));
  CHECK(gcd(gf2({0, 1, 1}), gf2({0, 1})) == gf2({0, 1}));
  auto [q, r] = divrem(gf2({1, 0, 0, 1}), gf2({1, 1}));  // x^3+1 = (x+1)(x^2+x+1)
  CHECK(q == gf2({1, 1, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divrem(gf2({1}), Poly(Field::gf2())), Error);
}

TEST_CASE("divrem degree bound and reconstruction") {
  std::mt19937_64 rng(7);
  const Field f = Field::standard(3);
  for (int t = 0; t < 200; ++t) {
    const Poly p = random_poly(rng, f, static_cast<int>(rng() % 9));
    const Poly d = random_poly(rng, f, 1 + static_cast<int>(rng() % 4));
    const auto [q, r] = divrem(p, d);
    CHECK(r.degree() < d.degree());
    CHECK(q * d + r == p);
  }
}

TEST_CASE("factor examples") {
  CHECK(factor(gf2({0, 1, 1})) == std::vector<Factor>{{gf2({0, 1}), 1}, {gf2({1, 1}), 1}});
  CHECK(factor(gf2({1, 1, 1})) == std::vector<Factor>{{gf2({1, 1, 1}), 1}});
  // (x^2+x+1)^2 expanded in characteristic 2 is x^4+x^2+1.
  const Poly sq = gf2({1, 1, 1}) * gf2({1, 1, 1});
  CHECK(sq == gf2({1, 0, 1, 0, 1}));
  CHECK(factor(gf2({1, 0, 1, 0, 1})) == std::vector<Factor>{{gf2({1, 1, 1}), 2}});
  CHECK_THROWS_AS(factor(Poly(Field::gf2())), Error);
}

TEST_CASE("irreducible_power examples") {
  auto x2 = irreducible_power(gf2({0, 0, 1}));
  REQUIRE(x2);
  CHECK(x2->poly == gf2({0, 1}));
  CHECK(x2->multiplicity == 2);
  CHECK_FALSE(irreducible_power(gf2({0, 1, 1})));
  // (x+1)^3 = x^3+x^2+x+1
  CHECK(pow(gf2({1, 1}), 3) == gf2({1, 1, 1, 1}));
  auto c = irreducible_power(gf2({1, 1, 1, 1}));
  REQUIRE(c);
  CHECK(c->poly == gf2({1, 1}));
  CHECK(c->multiplicity == 3);
}

TEST_CASE("factor of a product is the union of the factorizations") {
  std::mt19937_64 rng(11);
  for (unsigned m : {1u, 2u, 4u}) {
    const Field f = m == 1 ? Field::gf2() : Field::standard(m);
    for (int t = 0; t < 60; ++t) {
      const Poly p = random_poly(rng, f, 1 + static_cast<int>(rng() % 4));
      const Poly q = random_poly(rng, f, 1 + static_cast<int>(rng() % 4));
      std::map<Poly, unsigned, PolyLess> want;
      for (const auto& fa : factor(p)) want[fa.poly] += fa.multiplicity;
      for (const auto& fa : factor(q)) want[fa.poly] += fa.multiplicity;
      std::map<Poly, unsigned, PolyLess> got;
      Poly back = Poly::one(f);
      for (const auto& fa : factor(p * q)) {
        got[fa.poly] += fa.multiplicity;
        CHECK(brute_irreducible(fa.poly));
        CHECK(fa.poly.is_monic());
        back *= pow(fa.poly, fa.multiplicity);
      }
      CHECK(got == want);
      CHECK(back == p * q);  // inputs are monic
    }
  }
}

TEST_CASE("factor output is in canonical order") {
  std::mt19937_64 rng(5);
  const Field f = Field::gf2();
  for (int t = 0; t < 50; ++t) {
    const auto fs = factor(random_poly(rng, f, 1 + static_cast<int>(rng() % 10)));
    for (std::size_t i = 1; i < fs.size(); ++i) CHECK(compare(fs[i - 1].poly, fs[i].poly) < 0);
  }
}

TEST_CASE("squaring is additive in characteristic 2") {
  std::mt19937_64 rng(3);
  const Field f = Field::standard(4);
  for (int t = 0; t < 100; ++t) {
    const Poly p = random_poly(rng, f, static_cast<int>(rng() % 6));
    const Poly q = random_poly(rng, f, static_cast<int>(rng() % 6));
    CHECK((p + q) * (p + q) == p * p + q * q);
  }
}

TEST_CASE("irreducible counts match the necklace formula over GF(2)") {
  const std::map<unsigned, std::size_t> expected{{1, 2}, {2, 1}, {3, 2}, {4, 3}, {5, 6}, {6, 9}};
  for (auto [d, n] : expected) {
    const auto irr = irreducibles(Field::gf2(), d);
    CHECK(irr.size() == n);
    for (const Poly& p : irr) CHECK(brute_irreducible(p));
  }
  CHECK(irreducibles(Field::standard(2), 1).size() == 4);
  CHECK(irreducibles(Field::standard(2), 2).size() == 6);
}

TEST_CASE("is_irreducible agrees with trial division") {
  const Field f = Field::standard(2);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const Poly p = random_poly(rng, f, 1 + static_cast<int>(rng() % 5));
    CHECK(is_irreducible(p) == brute_irreducible(p));
  }
}

TEST_CASE("parse and print") {
  const Field f = Field::gf2();
  CHECK(parse_poly(f, "x^2+x+1") == gf2({1, 1, 1}));
  CHECK(parse_poly(f, "x2+x+1") == gf2({1, 1, 1}));
  CHECK(to_string(gf2({1, 1, 1})) == "x^2+x+1");
  const Field g = Field::standard(2);
  CHECK(parse_poly(g, "3*x^2+2") == Poly(g, {2, 0, 3}));
  CHECK(to_string(Poly(g, {3, 2})) == "2*x+3");
  try {
    parse_poly(f, "x^2+y");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find('y') != std::string::npos);
  }
}

TEST_CASE("coefficient bit lists") {
  CHECK(to_bits(gf2({1, 1, 1})) == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(from_bits(Field::gf2(), {1, 0, 1}) == gf2({1, 0, 1}));
  CHECK(to_bits(Poly(Field::gf2())).empty());
}

TEST_CASE("shift and reversal") {
  const Poly p = gf2({1, 1, 0, 1});  // x^3+x+1
  CHECK(p.reversed() == gf2({1, 0, 1, 1}));
  // p(x+1) = x^3+x^2+x+1 + x+1 + 1 = x^3 + x^2 + 1
  CHECK(p.shift(1) == gf2({1, 0, 1, 1}));
}
