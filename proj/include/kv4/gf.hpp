#pragma once

// Arithmetic in GF(2^m), m <= 16, and in univariate polynomial rings over it.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kv4 {

/// A field element in the polynomial basis: bit i is the coefficient of x^i.
using Elem = std::uint16_t;

namespace detail {
struct FieldTables;
}

/// Handle to an interned finite field GF(2^m). Copies are cheap and two
/// handles compare equal iff they name the same (degree, modulus) pair.
class Field {
 public:
  static constexpr unsigned kMaxDegree = 16;

  /// GF(2).
  static Field gf2();
  /// GF(2^m) with the built-in modulus for m <= 8 (see default_modulus).
  static Field standard(unsigned degree);
  /// GF(2^m) with an explicit modulus given as GF(2) coefficient bits
  /// (bit i = coefficient of x^i, so bit m must be set). Throws InvalidField
  /// unless the modulus is irreducible of degree m.
  static Field with_modulus(unsigned degree, std::uint32_t modulus_bits);

  /// Built-in table: x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1,
  /// x^7+x+1, x^8+x^4+x^3+x^2+1. Degree 1 returns x+1 (unused).
  static std::uint32_t default_modulus(unsigned degree);

  unsigned degree() const noexcept;
  std::uint32_t modulus() const noexcept;
  std::uint32_t order() const noexcept;  // q = 2^m

  Elem add(Elem x, Elem y) const noexcept { return static_cast<Elem>(x ^ y); }
  Elem mul(Elem x, Elem y) const noexcept;
  Elem inv(Elem x) const;  // throws DivisionByZero on 0
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t e) const noexcept;
  /// Inverse of the Frobenius map x -> x^2.
  Elem sqrt(Elem x) const noexcept;
  bool contains(std::uint64_t bits) const noexcept { return bits < order(); }

  /// Row kernel: dst[j] += c * src[j] for j < n.
  void axpy(Elem c, const Elem* src, Elem* dst, std::size_t n) const noexcept;
  /// dst[j] *= c for j < n.
  void scale(Elem c, Elem* dst, std::size_t n) const noexcept;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.t_ == b.t_; }

 private:
  explicit Field(const detail::FieldTables* t) : t_(t) {}
  const detail::FieldTables* t_;
};

std::string to_string(const Field& f);

/// Polynomial over a Field, coefficients lowest degree first, never with a
/// trailing zero (the zero polynomial has no coefficients).
class Poly {
 public:
  explicit Poly(Field f) : f_(f) {}
  Poly(Field f, std::vector<Elem> coeffs);

  static Poly constant(Field f, Elem c);
  static Poly monomial(Field f, Elem c, std::size_t degree);
  static Poly x(Field f) { return monomial(f, 1, 1); }
  static Poly one(Field f) { return constant(f, 1); }

  const Field& field() const noexcept { return f_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Elem lead() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }
  Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{0}; }

  Poly monic() const;
  Poly derivative() const;
  Elem eval(Elem x) const;
  /// Substitute x -> x + c.
  Poly shift(Elem c) const;
  /// x^deg * p(1/x).
  Poly reversed() const;

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q) { return p + q; }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(Elem c, const Poly& p);
  Poly& operator+=(const Poly& q) { return *this = *this + q; }
  Poly& operator*=(const Poly& q) { return *this = *this * q; }
  friend bool operator==(const Poly& p, const Poly& q) noexcept {
    return p.f_ == q.f_ && p.c_ == q.c_;
  }

 private:
  void trim();
  Field f_;
  std::vector<Elem> c_;
};

/// (quotient, remainder); throws DivisionByZero when q is zero.
std::pair<Poly, Poly> divrem(const Poly& p, const Poly& q);
inline Poly operator/(const Poly& p, const Poly& q) { return divrem(p, q).first; }
inline Poly operator%(const Poly& p, const Poly& q) { return divrem(p, q).second; }
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& p, const Poly& q);
Poly pow(const Poly& p, unsigned e);
/// base^(2^k) mod m by k squarings.
Poly frobenius_mod(const Poly& base, unsigned k, const Poly& m);

/// The canonical total order used for every tie-break: degree first, then
/// coefficients compared from the highest degree down as unsigned integers.
/// Over GF(2) this is the order of the packed bit integers.
int compare(const Poly& p, const Poly& q) noexcept;
struct PolyLess {
  bool operator()(const Poly& p, const Poly& q) const noexcept { return compare(p, q) < 0; }
};

struct Factor {
  Poly poly;  // monic irreducible
  unsigned multiplicity;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Factorization into monic irreducibles (leading coefficient dropped), in
/// canonical polynomial order. Throws ZeroPolynomial for p = 0.
/// Square-free split, then distinct-degree, then equal-degree splitting with a
/// fixed-seed generator, so output is identical across runs.
std::vector<Factor> factor(const Poly& p);
bool is_irreducible(const Poly& p);
/// (f, l) with p = f^l and f irreducible, when p is monic and such exist.
std::optional<Factor> irreducible_power(const Poly& p);
/// All monic irreducible polynomials of the given degree, in canonical order.
std::vector<Poly> irreducibles(Field f, unsigned degree);

/// Human-readable form such as "x^2+x+1"; non-unit coefficients print as
/// their bit integer, e.g. "2*x+3". The variable name is configurable.
std::string to_string(const Poly& p, std::string_view var = "x");
/// Accepts "x^2+x+1", the caret-free "x2+x+1", "3*x^2+x" and constants.
/// Errors name the offending token.
Poly parse_poly(Field f, std::string_view text);

/// Coefficient list (lowest degree first) as used in interchange documents.
std::vector<std::uint64_t> to_bits(const Poly& p);
Poly from_bits(Field f, const std::vector<std::uint64_t>& bits);

}  // namespace kv4
