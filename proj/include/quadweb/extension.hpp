#pragma once

// Quotient rings F_p[t]/(m):
//
//  * ExtCtx    — m irreducible: a genuine finite field F_{p^d}, usable
//                everywhere a field context is (including root finding,
//                whose Frobenius powers read cardinality()).
//  * SplitCtx  — m squarefree but possibly reducible: a product of fields
//                explored by dynamic evaluation. Any zero test or inversion
//                that lands on a zero divisor raises SplitRequest carrying
//                a proper factor of m; split_cases() catches it, splits the
//                modulus, and re-runs the computation on both branches.
//                Conjugate points of one irreducible factor can never be
//                told apart this way, so every leaf is a union of Frobenius
//                orbits behaving identically under the probes performed.
//
// Addition and multiplication never split; only is_zero / eq / inv / div
// do. Algorithms driven purely by such probes (Gaussian elimination,
// characteristic polynomials, Euclidean gcds) are usable over SplitCtx
// as written; algorithms that need an actual field (factorization, root
// isolation) are not.

#include "quadweb/arith.hpp"
#include "quadweb/univariate.hpp"

#include <utility>
#include <vector>

namespace quadweb {

struct SplitRequest : std::runtime_error {
  UPoly<FpCtx> factor;  // monic proper divisor of the current modulus
  explicit SplitRequest(UPoly<FpCtx> g)
      : std::runtime_error("split ring: zero divisor encountered"),
        factor(std::move(g)) {}
};

namespace detail {

/// Arithmetic shared by both quotient-ring contexts.
struct ModPolyCore {
  FpCtx base;
  UPoly<FpCtx> m;  // monic, degree >= 1

  ModPolyCore(FpCtx b, UPoly<FpCtx> modulus) : base(b) {
    up::normalize(base, modulus);
    if (up::deg(modulus) < 1)
      throw std::invalid_argument("quotient ring: modulus must be nonconstant");
    m = up::monic(base, modulus);
  }

  int degree() const { return up::deg(m); }

  using E = UPoly<FpCtx>;
  E reduce(const E& a) const { return up::mod(base, a, m); }
  E add(const E& a, const E& b) const { return up::add(base, a, b); }
  E sub(const E& a, const E& b) const { return up::sub(base, a, b); }
  E neg(const E& a) const { return up::neg(base, a); }
  E mul(const E& a, const E& b) const {
    return up::mod(base, up::mul(base, a, b), m);
  }
  E from_int(long long v) const {
    return up::constant(base, base.from_int(v));
  }
  E sample(Rng& rng) const {
    E r(static_cast<size_t>(degree()), 0);
    for (auto& c : r) c = base.sample(rng);
    up::normalize(base, r);
    return r;
  }
  std::string to_string(const E& a) const {
    if (a.empty()) return "0";
    std::string s;
    for (size_t i = a.size(); i-- > 0;) {
      if (a[i] == 0) continue;
      if (!s.empty()) s += " + ";
      if (a[i] != 1 || i == 0) s += std::to_string(a[i]);
      if (a[i] != 1 && i > 0) s += "*";
      if (i >= 1) s += "t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }
};

}  // namespace detail

/// The finite field F_{p^d} presented as F_p[t]/(m), m irreducible of
/// degree d. Irreducibility is certified at construction (Rabin's test).
struct ExtCtx {
  using Elem = UPoly<FpCtx>;
  detail::ModPolyCore core;

  ExtCtx(const FpCtx& base, UPoly<FpCtx> modulus)
      : core(base, std::move(modulus)) {
    if (!irreducible(core.base, core.m))
      throw std::invalid_argument("extension field: modulus reducible");
  }

  static bool irreducible(const FpCtx& f, const UPoly<FpCtx>& m) {
    int d = up::deg(m);
    if (d < 1) return false;
    if (d == 1) return true;
    UPoly<FpCtx> t = {0, 1};
    // Frobenius tower: frob_k = t^(p^k) mod m
    UPoly<FpCtx> frob = t;
    std::vector<UPoly<FpCtx>> tower;  // tower[k] = t^(p^(k+1))
    for (int k = 0; k < d; ++k) {
      frob = up::powmod(f, frob, Integer(f.p), m);
      tower.push_back(frob);
    }
    if (tower[d - 1] != t) return false;  // t^(p^d) must be the identity
    for (int ell = 2; ell <= d; ++ell) {
      if (d % ell != 0) continue;
      bool prime = true;
      for (int q = 2; q * q <= ell; ++q)
        if (ell % q == 0) prime = false;
      if (!prime) continue;
      UPoly<FpCtx> diff = up::sub(f, tower[d / ell - 1], t);
      if (up::deg(up::gcd(f, diff, m)) > 0) return false;
    }
    return true;
  }

  bool same(const ExtCtx& o) const {
    return core.base.p == o.core.base.p && core.m == o.core.m;
  }

  Elem zero() const { return {}; }
  Elem one() const { return core.from_int(1); }
  bool is_zero(const Elem& a) const { return a.empty(); }
  bool definitely_zero(const Elem& a) const { return a.empty(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return core.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return core.sub(a, b); }
  Elem neg(const Elem& a) const { return core.neg(a); }
  Elem mul(const Elem& a, const Elem& b) const { return core.mul(a, b); }

  Elem inv(const Elem& a) const {
    if (a.empty()) throw std::domain_error("extension field: inverse of zero");
    auto e = up::ext_gcd(core.base, a, core.m);
    if (up::deg(e.g) != 0)
      throw std::logic_error("extension field: modulus not irreducible");
    return core.reduce(e.u);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, uint64_t e) const {
    Elem acc = one();
    while (e) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }

  Elem from_int(long long v) const { return core.from_int(v); }
  Elem from_integer(const Integer& v) const {
    return up::constant(core.base, core.base.from_integer(v));
  }
  Elem from_rational(const Rational& r) const {
    return up::constant(core.base, core.base.from_rational(r));
  }
  Elem from_base(uint64_t a) const {
    return up::constant(core.base, a % core.base.p);
  }
  Elem generator() const { return core.reduce({0, 1}); }
  Elem sample(Rng& rng) const { return core.sample(rng); }

  Integer characteristic() const { return Integer(core.base.p); }
  Integer cardinality() const {
    return int_pow(Integer(core.base.p), core.degree());
  }

  std::string to_string(const Elem& a) const { return core.to_string(a); }
};

/// F_p[t]/(m) for squarefree m: a product of fields probed by dynamic
/// evaluation. Zero tests and inversions on zero divisors raise
/// SplitRequest; see split_cases().
struct SplitCtx {
  using Elem = UPoly<FpCtx>;
  detail::ModPolyCore core;

  SplitCtx(const FpCtx& base, UPoly<FpCtx> modulus)
      : core(base, std::move(modulus)) {
    UPoly<FpCtx> d = up::derivative(core.base, core.m);
    if (up::is_zero(d) || up::deg(up::gcd(core.base, core.m, d)) > 0)
      throw std::invalid_argument("split ring: modulus must be squarefree");
  }

  bool same(const SplitCtx& o) const {
    return core.base.p == o.core.base.p && core.m == o.core.m;
  }

  Elem zero() const { return {}; }
  Elem one() const { return core.from_int(1); }

  bool is_zero(const Elem& a) const {
    if (a.empty()) return true;
    UPoly<FpCtx> g = up::gcd(core.base, a, core.m);
    if (up::deg(g) == 0) return false;
    throw SplitRequest(std::move(g));  // zero on some branches only
  }
  /// The skip-heuristic probe must never split: only the canonical zero,
  /// which vanishes on every branch, answers true.
  bool definitely_zero(const Elem& a) const { return a.empty(); }
  bool eq(const Elem& a, const Elem& b) const {
    return is_zero(core.sub(a, b));
  }

  Elem add(const Elem& a, const Elem& b) const { return core.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return core.sub(a, b); }
  Elem neg(const Elem& a) const { return core.neg(a); }
  Elem mul(const Elem& a, const Elem& b) const { return core.mul(a, b); }

  Elem inv(const Elem& a) const {
    if (a.empty()) throw std::domain_error("split ring: inverse of zero");
    auto e = up::ext_gcd(core.base, a, core.m);
    if (up::deg(e.g) != 0) throw SplitRequest(std::move(e.g));
    return core.reduce(e.u);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, uint64_t e) const {
    Elem acc = one();
    while (e) {
      if (e & 1) acc = mul(acc, a);
      a = mul(a, a);
      e >>= 1;
    }
    return acc;
  }

  Elem from_int(long long v) const { return core.from_int(v); }
  Elem from_integer(const Integer& v) const {
    return up::constant(core.base, core.base.from_integer(v));
  }
  Elem from_rational(const Rational& r) const {
    return up::constant(core.base, core.base.from_rational(r));
  }
  Elem from_base(uint64_t a) const {
    return up::constant(core.base, a % core.base.p);
  }
  Elem generator() const { return core.reduce({0, 1}); }
  /// Residue of an arbitrary base-field polynomial in t.
  Elem reduce_poly(const UPoly<FpCtx>& h) const { return core.reduce(h); }
  Elem sample(Rng& rng) const { return core.sample(rng); }

  Integer characteristic() const { return Integer(core.base.p); }
  Integer cardinality() const {
    throw std::domain_error("split ring: not a field");
  }

  std::string to_string(const Elem& a) const { return core.to_string(a); }

  std::string modulus_string() const { return core.to_string(core.m); }
};

/// Run body over every branch of F_p[t]/(m). The body must be a pure
/// function of the context it is handed: after a SplitRequest the partial
/// run is discarded and the body starts over on each factor. Branches are
/// visited depth-first, the splitting factor before its cofactor, which
/// makes the visit order deterministic for a deterministic body.
template <class Body>
void split_cases(const FpCtx& base, const UPoly<FpCtx>& modulus, Body&& body) {
  std::vector<UPoly<FpCtx>> pending = {up::monic(base, modulus)};
  while (!pending.empty()) {
    UPoly<FpCtx> cur = std::move(pending.back());
    pending.pop_back();
    try {
      SplitCtx ctx(base, cur);
      body(ctx);
    } catch (const SplitRequest& s) {
      UPoly<FpCtx> rest = up::divexact(base, cur, s.factor);
      pending.push_back(std::move(rest));  // cofactor explored second
      pending.push_back(s.factor);         // factor explored first
    }
  }
}

}  // namespace quadweb
