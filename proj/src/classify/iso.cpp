#include <random>

#include "kv4/classify.hpp"
#include "kv4/error.hpp"

namespace kv4 {

namespace {

struct Invariants {
  std::size_t dim, rank_a, rank_b, rank_ab, socle, radical;
  std::vector<std::size_t> pencil_ranks;  // rank(A + cB) for every c, when q is small
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants(const KModule& m) {
  Invariants v{m.dim(), rank(m.a()), rank(m.b()), rank(m.a() * m.b()), socle(m).dim(), radical(m).dim(), {}};
  const Field& f = m.field();
  if (f.order() <= 16)
    for (std::uint32_t c = 1; c < f.order(); ++c) v.pencil_ranks.push_back(rank(m.a() + static_cast<Elem>(c) * m.b()));
  return v;
}

bool invertible(const Matrix& x) { return rank(x) == x.rows(); }

}  // namespace

std::optional<Matrix> iso(const KModule& m, const KModule& n, const IsoOptions& opts) {
  if (!(m.field() == n.field())) throw Error(ErrorCode::FieldMismatch, "iso across fields");
  const Field& f = m.field();
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return Matrix(f, 0, 0);
  if (!(invariants(m) == invariants(n))) return std::nullopt;

  const std::vector<Matrix> hom = hom_space(m, n);
  const std::size_t d = hom.size();
  if (d == 0) return std::nullopt;
  const std::uint64_t q = f.order();

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, static_cast<std::uint32_t>(q - 1));
  auto sample = [&] {
    Matrix x(f, n.dim(), m.dim());
    for (const auto& h : hom) {
      const auto c = static_cast<Elem>(coeff(rng));
      if (c) x += c * h;
    }
    return x;
  };

  // A few cheap draws first: automorphisms are usually a large fraction.
  for (int i = 0; i < 64; ++i) {
    Matrix x = sample();
    if (invertible(x)) return x;
  }

  // q^d within the bound?
  std::uint64_t total = 1;
  bool exhaustible = true;
  for (std::size_t i = 0; i < d && exhaustible; ++i) {
    total *= q;
    if (total > opts.exhaustion_bound) exhaustible = false;
  }

  if (exhaustible) {
    // Odometer over coefficient vectors, updating x incrementally.
    std::vector<std::uint32_t> digits(d, 0);
    Matrix x(f, n.dim(), m.dim());
    for (;;) {
      std::size_t i = 0;
      while (i < d) {
        const Elem old = static_cast<Elem>(digits[i]);
        const std::uint32_t next = (digits[i] + 1) % q;
        digits[i] = next;
        x += static_cast<Elem>(old ^ next) * hom[i];
        if (next != 0) break;
        ++i;
      }
      if (i == d) return std::nullopt;
      if (invertible(x)) return x;
    }
  }

  for (std::size_t i = 0; i < opts.samples; ++i) {
    Matrix x = sample();
    if (invertible(x)) return x;
  }
  throw Error(ErrorCode::Inconclusive, "hom space of dimension " + std::to_string(d) + " too large to exhaust");
}

}  // namespace kv4
