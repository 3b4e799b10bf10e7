#include <tuple>

#include "kv4/error.hpp"
#include "kv4/kmodule.hpp"

namespace kv4 {

Label Label::omega_of_trivial(int n) {
  if (n > 0) return syzygy_pos(static_cast<unsigned>(n));
  if (n < 0) return syzygy_neg(static_cast<unsigned>(-n));
  return trivial();
}

bool operator==(const Label& x, const Label& y) noexcept {
  return x.kind == y.kind && x.poly == y.poly && x.power == y.power && x.n == y.n;
}

std::size_t dim_of(const Label& l) {
  switch (l.kind) {
    case Label::Kind::Free: return 4;
    case Label::Kind::Band: return 2 * static_cast<std::size_t>(l.poly->degree()) * l.power;
    case Label::Kind::ZeroBand: return 2 * std::size_t{l.n};
    case Label::Kind::SyzygyNeg:
    case Label::Kind::SyzygyPos: return 2 * std::size_t{l.n} + 1;
    case Label::Kind::Trivial: return 1;
  }
  return 0;
}

bool operator<(const Label& x, const Label& y) noexcept {
  const std::size_t dx = dim_of(x), dy = dim_of(y);
  if (dx != dy) return dx > dy;
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.poly && y.poly) {
    const int c = compare(*x.poly, *y.poly);
    if (c != 0) return c < 0;
  }
  return std::tie(x.power, x.n) < std::tie(y.power, y.n);
}

std::string kind_name(Label::Kind k) {
  switch (k) {
    case Label::Kind::Free: return "Free";
    case Label::Kind::Band: return "Band";
    case Label::Kind::ZeroBand: return "ZeroBand";
    case Label::Kind::SyzygyNeg: return "SyzygyNeg";
    case Label::Kind::SyzygyPos: return "SyzygyPos";
    case Label::Kind::Trivial: return "Trivial";
  }
  return "?";
}

std::string to_string(const Label& l) {
  switch (l.kind) {
    case Label::Kind::Free:
    case Label::Kind::Trivial: return kind_name(l.kind);
    case Label::Kind::Band: return "Band(" + to_string(*l.poly) + "," + std::to_string(l.power) + ")";
    default: return kind_name(l.kind) + "(" + std::to_string(l.n) + ")";
  }
}

KModule canonical(Field f, const Label& l) {
  switch (l.kind) {
    case Label::Kind::Free: {
      Matrix a(f, 4, 4), b(f, 4, 4);
      a(1, 0) = 1;
      a(3, 2) = 1;
      b(2, 0) = 1;
      b(3, 1) = 1;
      return KModule::validate(a, b);
    }
    case Label::Kind::Trivial: return KModule::validate(Matrix(f, 1, 1), Matrix(f, 1, 1));
    case Label::Kind::Band: {
      if (!l.poly || l.power == 0) throw Error(ErrorCode::InvalidLabel, "Band needs a polynomial and a positive power");
      if (!(l.poly->field() == f)) throw Error(ErrorCode::InvalidLabel, "Band polynomial over another field");
      if (!l.poly->is_monic() || !is_irreducible(*l.poly))
        throw Error(ErrorCode::InvalidLabel, "Band polynomial " + to_string(*l.poly) + " is not monic irreducible");
      const Poly p = pow(*l.poly, l.power);
      const auto n = static_cast<std::size_t>(p.degree());
      // g_i sits at n-1-i, f_i at 2n-1-i.
      auto g = [n](std::size_t i) { return n - 1 - i; };
      auto fv = [n](std::size_t i) { return 2 * n - 1 - i; };
      Matrix a(f, 2 * n, 2 * n), b(f, 2 * n, 2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        b(fv(i), g(i)) = 1;
        if (i + 1 < n) a(fv(i + 1), g(i)) = 1;
      }
      for (std::size_t i = 0; i < n; ++i) a(fv(i), g(n - 1)) = p[i];
      return KModule::validate(a, b);
    }
    case Label::Kind::ZeroBand: {
      if (l.n == 0) throw Error(ErrorCode::InvalidLabel, "ZeroBand index must be positive");
      const std::size_t n = l.n;
      auto g = [n](std::size_t i) { return n - 1 - i; };
      auto h = [n](std::size_t i) { return 2 * n - 1 - i; };
      Matrix a(f, 2 * n, 2 * n), b(f, 2 * n, 2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        a(h(i), g(i)) = 1;
        if (i + 1 < n) b(h(i + 1), g(i)) = 1;
      }
      return KModule::validate(a, b);
    }
    case Label::Kind::SyzygyPos: {
      if (l.n == 0) throw Error(ErrorCode::InvalidLabel, "SyzygyPos index must be positive");
      const std::size_t n = l.n;
      // g_i at i (0..n), f_j at n+1+j (0..n-1).
      Matrix a(f, 2 * n + 1, 2 * n + 1), b(f, 2 * n + 1, 2 * n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        if (i < n) b(n + 1 + i, i) = 1;
        if (i > 0) a(n + i, i) = 1;
      }
      return KModule::validate(a, b);
    }
    case Label::Kind::SyzygyNeg: {
      if (l.n == 0) throw Error(ErrorCode::InvalidLabel, "SyzygyNeg index must be positive");
      const std::size_t n = l.n;
      // g_i at i-1 (1..n), f_j at n+j (0..n).
      Matrix a(f, 2 * n + 1, 2 * n + 1), b(f, 2 * n + 1, 2 * n + 1);
      for (std::size_t i = 1; i <= n; ++i) {
        a(n + i - 1, i - 1) = 1;
        b(n + i, i - 1) = 1;
      }
      return KModule::validate(a, b);
    }
  }
  throw Error(ErrorCode::InvalidLabel, "unknown label kind");
}

}  // namespace kv4
