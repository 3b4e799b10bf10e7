#include <map>
#include <memory>
#include <mutex>

#include "kv4/error.hpp"
#include "kv4/gf.hpp"

namespace kv4 {
namespace detail {

struct FieldTables {
  unsigned degree = 1;
  std::uint32_t modulus = 0b11;
  std::uint32_t order = 2;
  std::vector<Elem> exp;  // length 2(q-1), so exp[log a + log b] needs no reduction
  std::vector<std::uint32_t> log;
};

}  // namespace detail

namespace {

std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, unsigned m, std::uint32_t modulus) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> m & 1) a ^= modulus;
  }
  return r;
}

int bit_degree(std::uint32_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

std::uint32_t bit_mod(std::uint32_t p, std::uint32_t m) {
  const int dm = bit_degree(m);
  for (int d = bit_degree(p); d >= dm; d = bit_degree(p)) p ^= m << (d - dm);
  return p;
}

// Trial division by every polynomial of degree 1..m/2; m <= 16 keeps this tiny.
bool bits_irreducible(std::uint32_t p) {
  const int m = bit_degree(p);
  if (m < 1) return false;
  for (std::uint32_t d = 2; bit_degree(d) <= m / 2; ++d)
    if (bit_mod(p, d) == 0) return false;
  return true;
}

std::unique_ptr<detail::FieldTables> build_tables(unsigned m, std::uint32_t modulus) {
  auto t = std::make_unique<detail::FieldTables>();
  t->degree = m;
  t->modulus = modulus;
  t->order = 1u << m;
  const std::uint32_t n = t->order - 1;
  t->exp.assign(2 * n, 0);
  t->log.assign(t->order, 0);
  // Search for a primitive element; the modulus need not be primitive.
  for (std::uint32_t g = (m == 1 ? 1 : 2); g < t->order; ++g) {
    std::uint32_t x = 1, k = 0;
    do {
      t->exp[k] = static_cast<Elem>(x);
      x = m == 1 ? 1 : clmul_mod(x, g, m, modulus);
      ++k;
    } while (x != 1 && k < n);
    if (k == n) {
      for (std::uint32_t i = 0; i < n; ++i) {
        t->exp[n + i] = t->exp[i];
        t->log[t->exp[i]] = i;
      }
      return t;
    }
  }
  throw Error(ErrorCode::InvalidField, "no primitive element found");
}

const detail::FieldTables* intern(unsigned m, std::uint32_t modulus) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, std::uint32_t>, std::unique_ptr<detail::FieldTables>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{m, modulus}];
  if (!slot) slot = build_tables(m, modulus);
  return slot.get();
}

}  // namespace

Field Field::gf2() { return Field(intern(1, 0b11)); }

std::uint32_t Field::default_modulus(unsigned degree) {
  switch (degree) {
    case 1: return 0b11;
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    case 5: return 0b100101;
    case 6: return 0b1000011;
    case 7: return 0b10000011;
    case 8: return 0b100011101;
    default:
      throw Error(ErrorCode::InvalidField,
                  "no built-in modulus for degree " + std::to_string(degree) + " (table covers 1..8)");
  }
}

Field Field::standard(unsigned degree) {
  if (degree == 1) return gf2();
  return Field(intern(degree, default_modulus(degree)));
}

Field Field::with_modulus(unsigned degree, std::uint32_t modulus_bits) {
  if (degree < 1 || degree > kMaxDegree)
    throw Error(ErrorCode::InvalidField, "degree must lie in 1..16, got " + std::to_string(degree));
  if (degree == 1) return gf2();
  if (bit_degree(modulus_bits) != static_cast<int>(degree))
    throw Error(ErrorCode::InvalidField, "modulus degree does not match field degree");
  if (!bits_irreducible(modulus_bits))
    throw Error(ErrorCode::InvalidField, "modulus is reducible over GF(2)");
  return Field(intern(degree, modulus_bits));
}

unsigned Field::degree() const noexcept { return t_->degree; }
std::uint32_t Field::modulus() const noexcept { return t_->modulus; }
std::uint32_t Field::order() const noexcept { return t_->order; }

Elem Field::mul(Elem x, Elem y) const noexcept {
  if (x == 0 || y == 0) return 0;
  return t_->exp[t_->log[x] + t_->log[y]];
}

Elem Field::inv(Elem x) const {
  if (x == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero field element");
  const std::uint32_t n = t_->order - 1;
  return t_->exp[(n - t_->log[x]) % n];
}

Elem Field::pow(Elem x, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (x == 0) return 0;
  const std::uint64_t n = t_->order - 1;
  return t_->exp[(static_cast<std::uint64_t>(t_->log[x]) * (e % n)) % n];
}

Elem Field::sqrt(Elem x) const noexcept {
  // x^(2^(m-1)) inverts squaring on GF(2^m).
  Elem r = x;
  for (unsigned i = 1; i < t_->degree; ++i) r = mul(r, r);
  return r;
}

void Field::axpy(Elem c, const Elem* src, Elem* dst, std::size_t n) const noexcept {
  if (c == 0) return;
  if (c == 1) {
    for (std::size_t j = 0; j < n; ++j) dst[j] ^= src[j];
    return;
  }
  const std::uint32_t lc = t_->log[c];
  const Elem* ex = t_->exp.data();
  const std::uint32_t* lg = t_->log.data();
  for (std::size_t j = 0; j < n; ++j)
    if (src[j]) dst[j] ^= ex[lc + lg[src[j]]];
}

void Field::scale(Elem c, Elem* dst, std::size_t n) const noexcept {
  if (c == 1) return;
  for (std::size_t j = 0; j < n; ++j) dst[j] = mul(c, dst[j]);
}

std::string to_string(const Field& f) {
  if (f.degree() == 1) return "GF(2)";
  return "GF(2^" + std::to_string(f.degree()) + ")";
}

}  // namespace kv4
