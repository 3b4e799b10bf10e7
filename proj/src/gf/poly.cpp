#include <algorithm>
#include <cctype>

#include "kv4/error.hpp"
#include "kv4/gf.hpp"

namespace kv4 {

namespace {

void require_same_field(const Poly& p, const Poly& q) {
  if (!(p.field() == q.field())) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
}

}  // namespace

Poly::Poly(Field f, std::vector<Elem> coeffs) : f_(f), c_(std::move(coeffs)) {
  for (Elem e : c_)
    if (!f_.contains(e)) throw Error(ErrorCode::InvalidField, "coefficient outside the field");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Field f, Elem c) { return Poly(f, {c}); }

Poly Poly::monomial(Field f, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(f, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  Poly r = *this;
  f_.scale(f_.inv(lead()), r.c_.data(), r.c_.size());
  return r;
}

Poly Poly::derivative() const {
  // Characteristic 2: only odd-degree terms survive, with coefficient unchanged.
  std::vector<Elem> d(c_.size() > 1 ? c_.size() - 1 : 0, 0);
  for (std::size_t i = 1; i < c_.size(); i += 2) d[i - 1] = c_[i];
  return Poly(f_, std::move(d));
}

Elem Poly::eval(Elem x) const {
  Elem r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = f_.add(f_.mul(r, x), *it);
  return r;
}

Poly Poly::shift(Elem c) const {
  const Poly lin(f_, {c, 1});
  Poly r(f_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(f_, *it);
  return r;
}

Poly Poly::reversed() const {
  std::vector<Elem> r(c_.rbegin(), c_.rend());
  return Poly(f_, std::move(r));
}

Poly operator+(const Poly& p, const Poly& q) {
  require_same_field(p, q);
  std::vector<Elem> r(std::max(p.c_.size(), q.c_.size()), 0);
  for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = p.c_[i];
  for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] ^= q.c_[i];
  return Poly(p.f_, std::move(r));
}

Poly operator*(const Poly& p, const Poly& q) {
  require_same_field(p, q);
  if (p.is_zero() || q.is_zero()) return Poly(p.f_);
  std::vector<Elem> r(p.c_.size() + q.c_.size() - 1, 0);
  for (std::size_t i = 0; i < p.c_.size(); ++i) p.f_.axpy(p.c_[i], q.c_.data(), r.data() + i, q.c_.size());
  return Poly(p.f_, std::move(r));
}

Poly operator*(Elem c, const Poly& p) {
  Poly r = p;
  if (c == 0) return Poly(p.f_);
  p.f_.scale(c, r.c_.data(), r.c_.size());
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& p, const Poly& q) {
  require_same_field(p, q);
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field& f = p.field();
  if (p.degree() < q.degree()) return {Poly(f), p};
  std::vector<Elem> rem = p.coeffs();
  const auto& qc = q.coeffs();
  const std::size_t dq = qc.size() - 1;
  std::vector<Elem> quot(rem.size() - dq, 0);
  const Elem inv_lead = f.inv(q.lead());
  for (std::size_t k = rem.size(); k-- > dq;) {
    const Elem c = f.mul(rem[k], inv_lead);
    if (c == 0) continue;
    quot[k - dq] = c;
    f.axpy(c, qc.data(), rem.data() + (k - dq), dq + 1);
  }
  rem.resize(dq);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& p, const Poly& q) {
  Poly a = p, b = q;
  while (!b.is_zero()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly pow(const Poly& p, unsigned e) {
  Poly r = Poly::one(p.field()), b = p;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly frobenius_mod(const Poly& base, unsigned k, const Poly& m) {
  Poly r = base % m;
  for (unsigned i = 0; i < k; ++i) r = (r * r) % m;
  return r;
}

int compare(const Poly& p, const Poly& q) noexcept {
  if (p.degree() != q.degree()) return p.degree() < q.degree() ? -1 : 1;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    if (p.coeffs()[i] != q.coeffs()[i]) return p.coeffs()[i] < q.coeffs()[i] ? -1 : 1;
  }
  return 0;
}

std::string to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Elem c = p.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly parse_poly(Field f, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
  std::vector<Elem> coeffs;
  auto add_term = [&](Elem c, std::size_t d) {
    if (coeffs.size() <= d) coeffs.resize(d + 1, 0);
    coeffs[d] ^= c;
  };
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find('+', pos), s.size());
    const std::string tok = s.substr(pos, end - pos);
    if (tok.empty()) throw Error(ErrorCode::ParseError, "empty term in '" + s + "'");
    auto bad = [&] { return Error(ErrorCode::ParseError, "bad term '" + tok + "'"); };
    auto parse_uint = [&](const std::string& digits) -> std::uint64_t {
      if (digits.empty() || digits.size() > 6 ||
          !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw bad();
      return std::stoull(digits);
    };
    std::string rest = tok;
    std::uint64_t coeff = 1;
    const auto x_at = rest.find('x');
    if (x_at == std::string::npos) {
      coeff = parse_uint(rest);
      if (!f.contains(coeff)) throw Error(ErrorCode::ParseError, "coefficient '" + tok + "' outside " + to_string(f));
      add_term(static_cast<Elem>(coeff), 0);
    } else {
      if (x_at > 0) {
        std::string c = rest.substr(0, x_at);
        if (c.back() == '*') c.pop_back();
        coeff = parse_uint(c);
        if (!f.contains(coeff)) throw Error(ErrorCode::ParseError, "coefficient '" + tok + "' outside " + to_string(f));
      }
      std::string e = rest.substr(x_at + 1);
      if (!e.empty() && e.front() == '^') e.erase(0, 1);
      const std::uint64_t degree = e.empty() ? 1 : parse_uint(e);
      if (degree > 4096) throw bad();
      add_term(static_cast<Elem>(coeff), degree);
    }
    pos = end + 1;
  }
  return Poly(f, std::move(coeffs));
}

std::vector<std::uint64_t> to_bits(const Poly& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

Poly from_bits(Field f, const std::vector<std::uint64_t>& bits) {
  std::vector<Elem> c;
  c.reserve(bits.size());
  for (auto b : bits) {
    if (!f.contains(b)) throw Error(ErrorCode::InvalidField, "coefficient " + std::to_string(b) + " outside the field");
    c.push_back(static_cast<Elem>(b));
  }
  return Poly(f, std::move(c));
}

}  // namespace kv4
