#pragma once

// Exact coefficient arithmetic: arbitrary-precision integers and rationals,
// word-sized prime fields, deterministic primality testing and prime sampling.
//
// Everything randomized in this library flows through Rng (splitmix64), so a
// fixed seed reproduces a run bit-for-bit.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadweb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer int_pow(const Integer& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

inline Integer int_gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Exact division; throws if b does not divide a.
inline Integer divexact(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("divexact: division by zero");
  Integer q = a / b;
  if (q * b != a) throw std::domain_error("divexact: inexact division");
  return q;
}

inline Integer numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

// ---------------------------------------------------------------------------
// Deterministic RNG
// ---------------------------------------------------------------------------

/// splitmix64; small state, full 64-bit output, cheap forking for
/// per-task substreams.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n), n > 0. Rejection sampling, no modulo bias.
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  /// Derive an independent substream. Mixing the stream id through the
  /// output function keeps substreams decorrelated from the parent.
  Rng fork(uint64_t stream) {
    Rng mixer(state ^ (0xa0761d6478bd642full * (stream + 1)));
    return Rng(mixer.next());
  }
};

// ---------------------------------------------------------------------------
// Primality / prime sampling
// ---------------------------------------------------------------------------

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t acc = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

/// Deterministic Miller–Rabin, valid for all n < 2^64 with this base set.
inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Random prime of exactly `bits` bits (20..62), deterministic in rng state.
inline uint64_t random_prime(int bits, Rng& rng) {
  if (bits < 20 || bits > 62)
    throw std::invalid_argument("random_prime: bits must be in [20, 62]");
  uint64_t lo = 1ull << (bits - 1);
  for (;;) {
    uint64_t cand = lo + rng.below(lo);
    cand |= 1;
    if (is_prime_u64(cand)) return cand;
  }
}

// ---------------------------------------------------------------------------
// Coefficient field contexts
// ---------------------------------------------------------------------------
//
// Generic code is templated over a field context supplying the element type
// and the arithmetic. Two contexts exist: FpCtx (word-sized prime field,
// elements are raw uint64_t residues) and QQCtx (exact rationals).
// Contexts are value types; structural equality is what "same ring" means.

struct FpCtx {
  using Elem = uint64_t;
  uint64_t p = 0;

  FpCtx() = default;
  explicit FpCtx(uint64_t modulus) : p(modulus) {
    if (modulus == 2)
      throw std::invalid_argument("prime field: characteristic 2 rejected");
    if (!is_prime_u64(modulus))
      throw std::invalid_argument("prime field: modulus must be prime");
  }

  bool same(const FpCtx& o) const { return p == o.p; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  bool is_zero(Elem a) const { return a == 0; }
  /// Conservative no-side-effect zero test, for skip heuristics. Identical
  /// to is_zero here; product rings must answer without splitting.
  bool definitely_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    uint64_t s = a + b;  // p < 2^62, no overflow
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const { return mulmod_u64(a, b, p); }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("prime field: inverse of zero");
    // extended Euclid on (a, p); p prime so gcd = 1
    int64_t t = 0, newt = 1;
    uint64_t r = p, newr = a;
    while (newr != 0) {
      uint64_t q = r / newr;
      int64_t tmp_t = t - static_cast<int64_t>(q) * newt;
      t = newt;
      newt = tmp_t;
      uint64_t tmp_r = r - q * newr;
      r = newr;
      newr = tmp_r;
    }
    return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(p))
                 : static_cast<uint64_t>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, uint64_t e) const { return powmod_u64(a, e, p); }

  Elem from_int(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<uint64_t>(m);
  }
  Elem from_integer(const Integer& v) const {
    Integer m = v % Integer(p);
    if (m < 0) m += p;
    return m.convert_to<uint64_t>();
  }
  /// Reduction of a rational: fails if the denominator vanishes mod p.
  Elem from_rational(const Rational& r) const {
    Elem den = from_integer(denominator(r));
    if (den == 0)
      throw std::domain_error("prime field: denominator vanishes mod p");
    return div(from_integer(numerator(r)), den);
  }
  Elem sample(Rng& rng) const { return rng.below(p); }

  Integer characteristic() const { return Integer(p); }
  Integer cardinality() const { return Integer(p); }

  std::string to_string(Elem a) const { return std::to_string(a); }
};

struct QQCtx {
  using Elem = Rational;

  bool same(const QQCtx&) const { return true; }

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool definitely_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("rationals: inverse of zero");
    return Rational(1) / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, uint64_t e) const {
    Elem acc(1), base = a;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Elem from_int(long long v) const { return Rational(v); }
  Elem from_integer(const Integer& v) const { return Rational(v); }
  Elem from_rational(const Rational& r) const { return r; }
  /// Small random integers; used for separating forms in char-0 runs.
  Elem sample(Rng& rng) const {
    return Rational(static_cast<long long>(rng.below(20011)) - 10005);
  }

  Integer characteristic() const { return Integer(0); }
  Integer cardinality() const {
    throw std::domain_error("rationals: infinite field");
  }

  std::string to_string(const Elem& a) const { return a.str(); }
};

}  // namespace quadweb
