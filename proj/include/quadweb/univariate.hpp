#pragma once

// Dense univariate polynomials over a field context, as plain coefficient
// vectors (index = exponent, no trailing zeros). Free functions take the
// field explicitly; this keeps elements raw and the hot paths allocation-lean.
//
// Includes the finite-field machinery the zero-dimensional solvers lean on:
// squarefree decomposition (with the char-p perfect-power corner), distinct
// degree splitting, equal-degree splitting, root extraction, and the
// subresultant remainder sequence.

#include "quadweb/arith.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace quadweb {

template <class F>
using UPoly = std::vector<typename F::Elem>;

namespace up {

template <class F>
void normalize(const F& f, UPoly<F>& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

// deg/is_zero deduce the element type directly: the field parameter of
// UPoly sits in a non-deduced context.
template <class T>
int deg(const std::vector<T>& a) {
  return static_cast<int>(a.size()) - 1;  // -1 for the zero polynomial
}

template <class T>
bool is_zero(const std::vector<T>& a) {
  return a.empty();
}

template <class F>
UPoly<F> zero() {
  return {};
}

template <class F>
UPoly<F> constant(const F& f, typename F::Elem c) {
  UPoly<F> r;
  if (!f.is_zero(c)) r.push_back(c);
  return r;
}

template <class F>
UPoly<F> from_coeffs(const F& f, std::vector<typename F::Elem> c) {
  UPoly<F> r = std::move(c);
  normalize(f, r);
  return r;
}

template <class F>
UPoly<F> add(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
  UPoly<F> r(std::max(a.size(), b.size()), f.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  normalize(f, r);
  return r;
}

template <class F>
UPoly<F> sub(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
  UPoly<F> r(std::max(a.size(), b.size()), f.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  normalize(f, r);
  return r;
}

template <class F>
UPoly<F> neg(const F& f, const UPoly<F>& a) {
  UPoly<F> r = a;
  for (auto& c : r) c = f.neg(c);
  return r;
}

template <class F>
UPoly<F> mul(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
  if (a.empty() || b.empty()) return {};
  UPoly<F> r(a.size() + b.size() - 1, f.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (f.definitely_zero(a[i])) continue;  // skip heuristic, must not split
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  normalize(f, r);
  return r;
}

template <class F>
UPoly<F> scale(const F& f, const UPoly<F>& a, typename F::Elem c) {
  if (f.definitely_zero(c)) return {};
  UPoly<F> r = a;
  for (auto& x : r) x = f.mul(x, c);
  normalize(f, r);
  return r;
}

template <class F>
UPoly<F> shift_mul(const F& f, const UPoly<F>& a, int k,
                   typename F::Elem c) {  // a * c * t^k
  if (a.empty() || f.definitely_zero(c)) return {};
  UPoly<F> r(a.size() + k, f.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = f.mul(a[i], c);
  normalize(f, r);
  return r;
}

template <class F>
typename F::Elem lc(const F&, const UPoly<F>& a) {
  if (a.empty()) throw std::domain_error("upoly: lc of zero");
  return a.back();
}

template <class F>
UPoly<F> monic(const F& f, const UPoly<F>& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(lc(f, a)));
}

template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const F& f, const UPoly<F>& a,
                                     const UPoly<F>& b) {
  if (b.empty()) throw std::domain_error("upoly: division by zero");
  UPoly<F> r = a;
  normalize(f, r);
  int db = deg(b);
  if (deg(r) < db) return {UPoly<F>{}, r};
  UPoly<F> q(r.size() - db, f.zero());
  typename F::Elem binv = f.inv(b.back());
  for (int i = deg(r); i >= db; --i) {
    if (f.is_zero(r[i])) continue;
    typename F::Elem c = f.mul(r[i], binv);
    q[i - db] = c;
    for (int j = 0; j <= db; ++j)
      r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b[j]));
  }
  normalize(f, q);
  normalize(f, r);
  return {q, r};
}

template <class F>
UPoly<F> mod(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
  return divmod(f, a, b).second;
}

template <class F>
UPoly<F> divexact(const F& f, const UPoly<F>& a, const UPoly<F>& b) {
  auto [q, r] = divmod(f, a, b);
  if (!r.empty()) throw std::domain_error("upoly: inexact division");
  return q;
}

/// Monic gcd.
template <class F>
UPoly<F> gcd(const F& f, UPoly<F> a, UPoly<F> b) {
  normalize(f, a);
  normalize(f, b);
  while (!b.empty()) {
    UPoly<F> r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

/// Extended Euclid: g monic with u*a + v*b = g.
template <class F>
struct ExtGcd {
  UPoly<F> g, u, v;
};

template <class F>
ExtGcd<F> ext_gcd(const F& f, UPoly<F> a, UPoly<F> b) {
  normalize(f, a);
  normalize(f, b);
  UPoly<F> u0 = constant(f, f.one()), u1 = zero<F>();
  UPoly<F> v0 = zero<F>(), v1 = constant(f, f.one());
  while (!b.empty()) {
    auto [q, r] = divmod(f, a, b);
    a = std::move(b);
    b = std::move(r);
    UPoly<F> u2 = sub(f, u0, mul(f, q, u1));
    u0 = std::move(u1);
    u1 = std::move(u2);
    UPoly<F> v2 = sub(f, v0, mul(f, q, v1));
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  ExtGcd<F> out;
  if (is_zero(a)) return out;  // both inputs zero
  typename F::Elem c = f.inv(lc(f, a));
  out.g = scale(f, a, c);
  out.u = scale(f, u0, c);
  out.v = scale(f, v0, c);
  return out;
}

template <class F>
UPoly<F> derivative(const F& f, const UPoly<F>& a) {
  if (a.size() <= 1) return {};
  UPoly<F> r(a.size() - 1, f.zero());
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = f.mul(a[i], f.from_int(static_cast<long long>(i)));
  normalize(f, r);
  return r;
}

template <class F>
typename F::Elem eval(const F& f, const UPoly<F>& a, typename F::Elem x) {
  typename F::Elem acc = f.zero();
  for (size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

/// a(t)^e mod m(t), exponent given as a big integer (Frobenius powers over
/// extension fields exceed 64 bits).
template <class F>
UPoly<F> powmod(const F& f, UPoly<F> a, Integer e, const UPoly<F>& m) {
  UPoly<F> acc = constant(f, f.one());
  a = mod(f, a, m);
  while (e > 0) {
    if ((e & 1) != 0) acc = mod(f, mul(f, acc, a), m);
    a = mod(f, mul(f, a, a), m);
    e >>= 1;
  }
  return acc;
}

// -- squarefree structure ---------------------------------------------------

/// In characteristic p, a polynomial with zero derivative is g(t^p) and,
/// because the base field is perfect, the p-th root exists coefficientwise.
template <class F>
UPoly<F> pth_root(const F& f, const UPoly<F>& a, const Integer& p) {
  uint64_t ps = p.convert_to<uint64_t>();
  UPoly<F> r;
  Integer q = f.cardinality();
  Integer root_exp = q / p;  // c^(q/p) is the p-th root of c in F_q
  for (size_t i = 0; i < a.size(); i += ps) {
    typename F::Elem c = a[i];
    // For F_p, q/p = 1 and the root is c itself.
    if (root_exp > 1) {
      typename F::Elem acc = f.one(), base = c;
      Integer e = root_exp;
      while (e > 0) {
        if ((e & 1) != 0) acc = f.mul(acc, base);
        base = f.mul(base, base);
        e >>= 1;
      }
      c = acc;
    }
    r.push_back(c);
  }
  normalize(f, r);
  return r;
}

/// Squarefree part f / gcd(f, f'). Handles the vanishing-derivative corner
/// by peeling perfect p-th powers first.
template <class F>
UPoly<F> squarefree_part(const F& f, const UPoly<F>& a) {
  if (deg(a) <= 0) return monic(f, a);
  UPoly<F> d = derivative(f, a);
  if (is_zero(d)) {
    Integer p = f.characteristic();
    if (p == 0)
      throw std::logic_error("upoly: zero derivative in characteristic 0");
    return squarefree_part(f, pth_root(f, a, p));
  }
  UPoly<F> g = gcd(f, a, d);
  UPoly<F> sf = divexact(f, a, g);
  if (deg(g) > 0) {
    // Repeated factors whose multiplicity is divisible by p survive in g
    // with their derivative contribution lost; fold them in via recursion.
    UPoly<F> extra = squarefree_part(f, g);
    UPoly<F> common = gcd(f, sf, extra);
    sf = mul(f, sf, divexact(f, extra, common));
  }
  return monic(f, sf);
}

/// Multiplicity layers: result[k] is the (monic, squarefree) product of the
/// roots of multiplicity exactly k+1. Σ (k+1)·deg(result[k]) = deg a.
template <class F>
std::vector<UPoly<F>> multiplicity_layers(const F& f, UPoly<F> a) {
  std::vector<UPoly<F>> layers;
  a = monic(f, a);
  UPoly<F> prev = squarefree_part(f, a);  // roots of multiplicity >= 1
  UPoly<F> rest = a;
  while (deg(prev) > 0) {
    rest = divexact(f, rest, prev);
    UPoly<F> next = gcd(f, rest, prev);  // roots of multiplicity >= k+1
    layers.push_back(divexact(f, prev, next));
    prev = next;
  }
  return layers;
}

// -- finite-field factoring support ------------------------------------

/// Distinct-degree decomposition of a squarefree monic polynomial:
/// returns pairs (d, product of all irreducible factors of degree d).
template <class F>
std::vector<std::pair<int, UPoly<F>>> distinct_degree(const F& f,
                                                      UPoly<F> a) {
  a = monic(f, a);
  std::vector<std::pair<int, UPoly<F>>> out;
  Integer q = f.cardinality();
  UPoly<F> frob = {f.zero(), f.one()};  // t
  int d = 0;
  while (deg(a) > 0) {
    ++d;
    if (2 * d > deg(a)) {
      out.emplace_back(deg(a), a);
      break;
    }
    frob = powmod(f, frob, q, a);  // t^(q^d) mod a
    UPoly<F> tpoly = {f.zero(), f.one()};
    UPoly<F> g = gcd(f, sub(f, frob, tpoly), a);
    if (deg(g) > 0) {
      out.emplace_back(d, g);
      a = divexact(f, a, g);
      frob = mod(f, frob, a);
    }
  }
  return out;
}

/// Cantor–Zassenhaus equal-degree splitting (odd characteristic):
/// a is squarefree monic, all irreducible factors of degree d.
template <class F>
void equal_degree_factor(const F& f, const UPoly<F>& a, int d, Rng& rng,
                         std::vector<UPoly<F>>& out) {
  if (deg(a) == d) {
    out.push_back(monic(f, a));
    return;
  }
  Integer q = f.cardinality();
  Integer e = (int_pow(q, static_cast<unsigned>(d)) - 1) / 2;
  for (;;) {
    UPoly<F> r(deg(a), f.zero());
    for (auto& c : r) c = f.sample(rng);
    normalize(f, r);
    if (deg(r) < 1) continue;
    UPoly<F> s = powmod(f, r, e, a);
    s = sub(f, s, constant(f, f.one()));
    UPoly<F> g = gcd(f, s, a);
    if (deg(g) > 0 && deg(g) < deg(a)) {
      equal_degree_factor(f, g, d, rng, out);
      equal_degree_factor(f, divexact(f, a, g), d, rng, out);
      return;
    }
  }
}

/// Full monic factorization over a finite field. Returns (factor, mult).
template <class F>
std::vector<std::pair<UPoly<F>, int>> factor(const F& f, const UPoly<F>& a,
                                             Rng& rng) {
  std::vector<std::pair<UPoly<F>, int>> out;
  auto layers = multiplicity_layers(f, a);
  for (size_t k = 0; k < layers.size(); ++k) {
    if (deg(layers[k]) <= 0) continue;
    for (auto& [d, prod] : distinct_degree(f, layers[k])) {
      std::vector<UPoly<F>> irr;
      equal_degree_factor(f, prod, d, rng, irr);
      for (auto& g : irr) out.emplace_back(g, static_cast<int>(k) + 1);
    }
  }
  return out;
}

/// All roots in the base field, each listed once (input need not be
/// squarefree).
template <class F>
std::vector<typename F::Elem> roots(const F& f, const UPoly<F>& a, Rng& rng) {
  std::vector<typename F::Elem> out;
  if (deg(a) <= 0) return out;
  UPoly<F> sf = squarefree_part(f, a);
  UPoly<F> tpoly = {f.zero(), f.one()};
  UPoly<F> frob = powmod(f, tpoly, f.cardinality(), sf);
  UPoly<F> split = gcd(f, sub(f, frob, tpoly), sf);  // roots in the field
  if (deg(split) <= 0) return out;
  std::vector<UPoly<F>> lin;
  equal_degree_factor(f, split, 1, rng, lin);
  for (auto& l : lin) out.push_back(f.neg(l[0]));  // t + c -> root -c
  return out;
}

// -- resultants ---------------------------------------------------------

/// res(a, b) over a field via the Euclidean recursion
///   res(a, b) = (-1)^(da*db) lc(b)^(da - dr) res(b, a mod b).
/// Zero inputs and vanishing remainders yield 0 (except two nonzero
/// constants, whose resultant is the empty product 1).
template <class F>
typename F::Elem resultant(const F& f, UPoly<F> a, UPoly<F> b) {
  normalize(f, a);
  normalize(f, b);
  if (is_zero(a) || is_zero(b)) return f.zero();
  typename F::Elem acc = f.one();
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if ((deg(a) & 1) && (deg(b) & 1)) acc = f.neg(acc);
  }
  while (deg(b) > 0) {
    UPoly<F> r = mod(f, a, b);
    if (is_zero(r)) return f.zero();
    if ((deg(a) & 1) && (deg(b) & 1)) acc = f.neg(acc);
    acc = f.mul(acc, f.pow(lc(f, b), static_cast<uint64_t>(deg(a) - deg(r))));
    a = std::move(b);
    b = std::move(r);
  }
  return f.mul(acc, f.pow(b[0], static_cast<uint64_t>(deg(a))));
}

}  // namespace up
}  // namespace quadweb
