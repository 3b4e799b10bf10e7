#include <algorithm>
#include <map>
#include <random>

#include "kv4/error.hpp"
#include "kv4/gf.hpp"

namespace kv4 {

namespace {

// p is monic with zero derivative, so p(x) = g(x)^2 with g's coefficients the
// square roots of the even-degree coefficients of p.
Poly square_root(const Poly& p) {
  const Field& f = p.field();
  std::vector<Elem> g((p.coeffs().size() + 1) / 2, 0);
  for (std::size_t i = 0; i < p.coeffs().size(); i += 2) g[i / 2] = f.sqrt(p.coeffs()[i]);
  return Poly(f, std::move(g));
}

// Square-free decomposition of a monic polynomial: pairs (s, e) with s
// square-free and p = prod s^e.
void square_free(const Poly& p, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) {
  if (p.degree() < 1) return;
  Poly c = gcd(p, p.derivative());
  Poly w = p / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) out.emplace_back(fac, i * scale);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) square_free(square_root(c), scale * 2, out);
}

// Splits a square-free monic polynomial into products of equal-degree
// irreducibles: (product, degree).
std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly g) {
  std::vector<std::pair<Poly, unsigned>> out;
  const Field& f = g.field();
  const Poly x = Poly::x(f);
  Poly h = x % g;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(g.degree()); ++d) {
    h = frobenius_mod(h, f.degree(), g);  // h = x^(q^d) mod g
    Poly fd = gcd(g, h + x);
    if (!fd.is_one()) {
      out.emplace_back(fd, d);
      g = g / fd;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.emplace_back(g, static_cast<unsigned>(g.degree()));
  return out;
}

// Cantor-Zassenhaus for characteristic 2: the absolute trace
// a + a^2 + ... + a^(2^(m d - 1)) splits the product with probability >= 1/2.
void equal_degree(const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (static_cast<unsigned>(g.degree()) == d) {
    out.push_back(g);
    return;
  }
  const Field& f = g.field();
  std::uniform_int_distribution<std::uint32_t> coeff(0, f.order() - 1);
  const unsigned steps = f.degree() * d;
  for (;;) {
    std::vector<Elem> a(static_cast<std::size_t>(g.degree()), 0);
    for (auto& e : a) e = static_cast<Elem>(coeff(rng));
    Poly t(f, std::move(a));
    if (t.degree() < 1) continue;
    Poly acc = t, cur = t;
    for (unsigned i = 1; i < steps; ++i) {
      cur = (cur * cur) % g;
      acc += cur;
    }
    Poly s = gcd(g, acc);
    if (s.degree() > 0 && s.degree() < g.degree()) {
      equal_degree(s, d, rng, out);
      equal_degree(g / s, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  std::vector<std::pair<Poly, unsigned>> sqf;
  square_free(p.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed);
  std::map<Poly, unsigned, PolyLess> acc;
  for (const auto& [s, e] : sqf) {
    for (const auto& [g, d] : distinct_degree(s)) {
      std::vector<Poly> parts;
      equal_degree(g, d, rng, parts);
      for (auto& q : parts) acc[q] += e;
    }
  }
  std::vector<Factor> out;
  for (auto& [q, e] : acc) out.push_back({q, e});
  return out;
}

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  const auto fs = factor(p);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

std::optional<Factor> irreducible_power(const Poly& p) {
  if (!p.is_monic() || p.degree() < 1) return std::nullopt;
  auto fs = factor(p);
  if (fs.size() != 1) return std::nullopt;
  return fs[0];
}

std::vector<Poly> irreducibles(Field f, unsigned degree) {
  std::vector<Poly> out;
  if (degree == 0) return out;
  const std::uint64_t q = f.order();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) {
    count *= q;
    if (count > (1u << 24)) throw Error(ErrorCode::InvalidLabel, "irreducible enumeration too large");
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<Elem> c(degree + 1, 0);
    std::uint64_t r = code;
    for (unsigned i = 0; i < degree; ++i) {
      c[i] = static_cast<Elem>(r % q);
      r /= q;
    }
    c[degree] = 1;
    Poly cand(f, std::move(c));
    if (is_irreducible(cand)) out.push_back(std::move(cand));
  }
  std::sort(out.begin(), out.end(), PolyLess{});
  return out;
}

}  // namespace kv4
