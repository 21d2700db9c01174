#pragma once

// Exponent vectors and monomial orders. Arity is capped at 9: eight
// projective coordinates plus one auxiliary localization variable is the
// largest ring this library ever needs.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadweb {

constexpr int kMaxVars = 9;
constexpr uint32_t kMaxExponent = 1u << 16;

struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  uint32_t deg = 0;

  bool is_one() const { return deg == 0; }

  static Monomial var(int i, uint16_t k = 1) {
    Monomial m;
    m.e[i] = k;
    m.deg = k;
    return m;
  }

  Monomial mul(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      uint32_t s = uint32_t(e[i]) + o.e[i];
      if (s >= kMaxExponent)
        throw std::overflow_error("monomial: exponent overflow");
      r.e[i] = static_cast<uint16_t>(s);
    }
    r.deg = deg + o.deg;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  /// this / o; caller guarantees divisibility.
  Monomial div(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e[i] = static_cast<uint16_t>(e[i] - o.e[i]);
    r.deg = deg - o.deg;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
      d += r.e[i];
    }
    r.deg = d;
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
};

enum class OrderKind : uint8_t { DegRevLex, Lex, Block };

/// A monomial order on a ring of `nvars` variables. Block is the
/// elimination order killing the first `block` variables: degrevlex on that
/// front block, ties broken by degrevlex on the rest.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  int nvars = 0;
  int block = 0;

  static MonomialOrder degrevlex(int n) { return {OrderKind::DegRevLex, n, 0}; }
  static MonomialOrder lex(int n) { return {OrderKind::Lex, n, 0}; }
  static MonomialOrder elim(int n, int k) {
    if (k <= 0 || k >= n)
      throw std::invalid_argument("elimination order: need 0 < k < nvars");
    return {OrderKind::Block, n, k};
  }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && nvars == o.nvars && block == o.block;
  }

  // degrevlex on variables [lo, hi): larger total degree wins; on ties the
  // monomial with the smaller exponent at the last differing variable wins.
  static int cmp_drl_range(const Monomial& a, const Monomial& b, int lo,
                           int hi) {
    uint32_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
  }

  /// Three-way comparison: negative, zero, positive as a <, ==, > b.
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::DegRevLex:
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        return cmp_drl_range(a, b, 0, nvars);
      case OrderKind::Lex:
        for (int i = 0; i < nvars; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
      case OrderKind::Block: {
        int c = cmp_drl_range(a, b, 0, block);
        if (c != 0) return c;
        return cmp_drl_range(a, b, block, nvars);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const {
    return cmp(a, b) < 0;
  }
};

}  // namespace quadweb
