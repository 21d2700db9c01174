#pragma once

// Sparse multivariate polynomials over a field context F (see arith.hpp).
// Terms are kept strictly sorted, descending in the ring's monomial order;
// no zero coefficients are stored. Every polynomial carries its ring, and
// binary operations reject mismatched rings.

#include "quadweb/arith.hpp"
#include "quadweb/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace quadweb {

template <class F>
struct Ring {
  int n = 0;
  MonomialOrder ord;
  F field;
  std::vector<std::string> names;

  Ring() = default;
  Ring(int nvars, MonomialOrder o, F f, std::vector<std::string> nm = {})
      : n(nvars), ord(o), field(std::move(f)), names(std::move(nm)) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::invalid_argument("ring: arity must be in [1, 9]");
    if (ord.nvars != nvars) throw std::invalid_argument("ring: order arity");
    if (names.empty()) {
      for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    }
  }

  bool same(const Ring& o) const {
    return n == o.n && ord == o.ord && field.same(o.field);
  }

  /// Same variables and coefficients, different order.
  Ring with_order(MonomialOrder o) const {
    Ring r(*this);
    r.ord = o;
    if (r.ord.nvars != n) throw std::invalid_argument("ring: order arity");
    return r;
  }
};

template <class F>
struct Term {
  Monomial m;
  typename F::Elem c;
};

template <class F>
class Poly {
 public:
  using Elem = typename F::Elem;

  Poly() = default;
  explicit Poly(std::shared_ptr<const Ring<F>> ring) : ring_(std::move(ring)) {}

  static Poly zero(std::shared_ptr<const Ring<F>> ring) { return Poly(ring); }

  static Poly constant(std::shared_ptr<const Ring<F>> ring, Elem c) {
    Poly p(ring);
    if (!ring->field.is_zero(c)) p.terms_.push_back({Monomial{}, c});
    return p;
  }

  static Poly variable(std::shared_ptr<const Ring<F>> ring, int i,
                       uint16_t k = 1) {
    if (i < 0 || i >= ring->n) throw std::out_of_range("poly: variable index");
    Poly p(ring);
    if (k == 0) return constant(ring, ring->field.one());
    p.terms_.push_back({Monomial::var(i, k), ring->field.one()});
    return p;
  }

  static Poly term(std::shared_ptr<const Ring<F>> ring, Monomial m, Elem c) {
    Poly p(ring);
    if (!ring->field.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  const std::shared_ptr<const Ring<F>>& ring() const { return ring_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  const Monomial& lm() const {
    check_nonzero();
    return terms_.front().m;
  }
  const Elem& lc() const {
    check_nonzero();
    return terms_.front().c;
  }

  uint32_t total_degree() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.deg);
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    uint32_t d = terms_.front().m.deg;
    for (const auto& t : terms_)
      if (t.m.deg != d) return false;
    return true;
  }

  bool uses_var(int i) const {
    for (const auto& t : terms_)
      if (t.m.e[i]) return true;
    return false;
  }

  bool operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    const F& f = ring_->field;
    for (size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].m == o.terms_[i].m)) return false;
      if (!f.eq(terms_[i].c, o.terms_[i].c)) return false;
    }
    return true;
  }

  Poly operator-() const {
    Poly r(*this);
    const F& f = ring_->field;
    for (auto& t : r.terms_) t.c = f.neg(t.c);
    return r;
  }

  Poly operator+(const Poly& o) const {
    check_ring(o);
    Poly r(ring_);
    const F& f = ring_->field;
    const MonomialOrder& ord = ring_->ord;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = ord.cmp(terms_[i].m, o.terms_[j].m);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        Elem s = f.add(terms_[i].c, o.terms_[j].c);
        if (!f.is_zero(s)) r.terms_.push_back({terms_[i].m, s});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  /// this * (c * m)
  Poly mul_term(const Monomial& m, const Elem& c) const {
    const F& f = ring_->field;
    Poly r(ring_);
    if (f.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Elem p = f.mul(t.c, c);
      if (!f.is_zero(p)) r.terms_.push_back({t.m.mul(m), p});
    }
    return r;
  }

  Poly scale(const Elem& c) const { return mul_term(Monomial{}, c); }

  Poly operator*(const Poly& o) const {
    check_ring(o);
    const F& f = ring_->field;
    Poly r(ring_);
    if (is_zero() || o.is_zero()) return r;
    std::vector<Term<F>> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_)
        prod.push_back({a.m.mul(b.m), f.mul(a.c, b.c)});
    const MonomialOrder& ord = ring_->ord;
    std::sort(prod.begin(), prod.end(),
              [&](const Term<F>& a, const Term<F>& b) {
                return ord.cmp(a.m, b.m) > 0;
              });
    for (auto& t : prod) {
      if (!r.terms_.empty() && r.terms_.back().m == t.m) {
        r.terms_.back().c = f.add(r.terms_.back().c, t.c);
        if (f.is_zero(r.terms_.back().c)) r.terms_.pop_back();
      } else if (!f.is_zero(t.c)) {
        r.terms_.push_back(t);
      }
    }
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scale(ring_->field.inv(lc()));
  }

  Poly pow(unsigned e) const {
    Poly acc = constant(ring_, ring_->field.one());
    Poly base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  /// Exact division by d (w.r.t. the ring order); throws on inexactness.
  Poly divexact(const Poly& d) const {
    check_ring(d);
    if (d.is_zero()) throw std::domain_error("poly divexact: zero divisor");
    const F& f = ring_->field;
    Poly q(ring_);
    Poly r = *this;
    Elem dlc_inv = f.inv(d.lc());
    while (!r.is_zero()) {
      if (!d.lm().divides(r.lm()))
        throw std::domain_error("poly divexact: inexact division");
      Monomial m = r.lm().div(d.lm());
      Elem c = f.mul(r.lc(), dlc_inv);
      q.terms_.push_back({m, c});
      r = r - d.mul_term(m, c);
    }
    // quotient terms were produced in strictly decreasing order already
    return q;
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    if (static_cast<int>(point.size()) != ring_->n)
      throw std::invalid_argument("poly evaluate: wrong point arity");
    const F& f = ring_->field;
    Elem acc = f.zero();
    for (const auto& t : terms_) {
      Elem v = t.c;
      for (int i = 0; i < ring_->n; ++i) {
        if (t.m.e[i]) v = f.mul(v, f.pow(point[i], t.m.e[i]));
      }
      acc = f.add(acc, v);
    }
    return acc;
  }

  /// Simultaneous substitution x_i -> images[i]; images live in `target`.
  Poly substitute(const std::vector<Poly>& images,
                  std::shared_ptr<const Ring<F>> target) const {
    if (static_cast<int>(images.size()) != ring_->n)
      throw std::invalid_argument("poly substitute: wrong image count");
    const F& f = ring_->field;
    Poly acc = Poly::zero(target);
    // cache powers of each image as needed
    std::vector<std::vector<Poly>> pows(ring_->n);
    for (int i = 0; i < ring_->n; ++i)
      pows[i].push_back(constant(target, f.one()));
    auto power = [&](int i, uint16_t k) -> const Poly& {
      auto& cache = pows[i];
      while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
      return cache[k];
    };
    for (const auto& t : terms_) {
      Poly v = constant(target, t.c);
      for (int i = 0; i < ring_->n; ++i)
        if (t.m.e[i]) v = v * power(i, t.m.e[i]);
      acc = acc + v;
    }
    return acc;
  }

  Poly derivative(int var) const {
    if (var < 0 || var >= ring_->n)
      throw std::out_of_range("poly derivative: variable index");
    const F& f = ring_->field;
    Poly r(ring_);
    for (const auto& t : terms_) {
      if (t.m.e[var] == 0) continue;
      Elem c = f.mul(t.c, f.from_int(t.m.e[var]));
      if (f.is_zero(c)) continue;
      Monomial m = t.m;
      m.e[var] -= 1;
      m.deg -= 1;
      r.terms_.push_back({m, c});
    }
    // term order is preserved by lowering one fixed exponent except for
    // possible ties in non-degree orders; re-sort defensively
    r.sort_terms();
    return r;
  }

  /// Set x_var = 1 and renumber the remaining variables into `target`
  /// (arity n-1, same field). Used for passing to an affine chart.
  Poly set_var_one_drop(int var, std::shared_ptr<const Ring<F>> target) const {
    if (target->n != ring_->n - 1)
      throw std::invalid_argument("set_var_one_drop: target arity");
    const F& f = ring_->field;
    Poly r(target);
    for (const auto& t : terms_) {
      Monomial m;
      for (int i = 0, j = 0; i < ring_->n; ++i) {
        if (i == var) continue;
        m.e[j] = t.m.e[i];
        m.deg += t.m.e[i];
        ++j;
      }
      r.terms_.push_back({m, t.c});
    }
    r.sort_terms();
    r.combine_sorted(f);
    return r;
  }

  /// Homogenize a chart polynomial back: insert variable `var` = 1 slot and
  /// pad each term up to degree `deg` with powers of it.
  Poly homogenize_insert(int var, uint32_t deg,
                         std::shared_ptr<const Ring<F>> target) const {
    if (target->n != ring_->n + 1)
      throw std::invalid_argument("homogenize_insert: target arity");
    Poly r(target);
    for (const auto& t : terms_) {
      if (t.m.deg > deg)
        throw std::invalid_argument("homogenize_insert: degree too small");
      Monomial m;
      for (int i = 0, j = 0; i < target->n; ++i) {
        if (i == var) continue;
        m.e[i] = t.m.e[j];
        ++j;
      }
      m.e[var] = static_cast<uint16_t>(deg - t.m.deg);
      m.deg = deg;
      r.terms_.push_back({m, t.c});
    }
    r.sort_terms();
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    const F& f = ring_->field;
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      if (!first) os << " + ";
      first = false;
      std::string cs = f.to_string(t.c);
      bool coef_shown = t.m.is_one() || cs != "1";
      if (coef_shown) os << cs;
      bool star = coef_shown && !t.m.is_one();
      for (int i = 0; i < ring_->n; ++i) {
        if (!t.m.e[i]) continue;
        if (star) os << "*";
        star = true;
        os << ring_->names[i];
        if (t.m.e[i] > 1) os << "^" << t.m.e[i];
      }
    }
    return os.str();
  }

  // -- internal builders -----------------------------------------------

  /// Append a term known to be strictly smaller than everything so far.
  void push_term_unchecked(Monomial m, Elem c) { terms_.push_back({m, c}); }

  void sort_terms() {
    const MonomialOrder& ord = ring_->ord;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<F>& a, const Term<F>& b) {
                return ord.cmp(a.m, b.m) > 0;
              });
  }

  void combine_sorted(const F& f) {
    std::vector<Term<F>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c = f.add(out.back().c, t.c);
        if (f.is_zero(out.back().c)) out.pop_back();
      } else if (!f.is_zero(t.c)) {
        out.push_back(t);
      }
    }
    terms_ = std::move(out);
  }

  /// Re-tag with an order-compatible ring (same arity/field, new order).
  Poly reorder(std::shared_ptr<const Ring<F>> target) const {
    if (target->n != ring_->n)
      throw std::invalid_argument("reorder: arity mismatch");
    Poly r(target);
    r.terms_ = terms_;
    r.sort_terms();
    return r;
  }

  /// Build from terms already strictly descending in the ring order.
  static Poly from_sorted_terms(std::shared_ptr<const Ring<F>> ring,
                                std::vector<Term<F>> terms) {
    Poly r(std::move(ring));
    r.terms_ = std::move(terms);
    return r;
  }

  /// View in a wider ring: variable indices keep their meaning, the new
  /// trailing variables simply do not occur.
  Poly extend_vars(std::shared_ptr<const Ring<F>> target) const {
    if (target->n < ring_->n)
      throw std::invalid_argument("extend_vars: target too narrow");
    Poly r(target);
    r.terms_ = terms_;
    r.sort_terms();
    return r;
  }

  /// Forget the first k variables, which must not occur; x_{k+i} becomes
  /// x_i of the target ring.
  Poly drop_leading_vars(int k, std::shared_ptr<const Ring<F>> target) const {
    if (target->n != ring_->n - k)
      throw std::invalid_argument("drop_leading_vars: target arity");
    Poly r(target);
    for (const auto& t : terms_) {
      Monomial m;
      for (int i = 0; i < k; ++i)
        if (t.m.e[i])
          throw std::invalid_argument("drop_leading_vars: variable in use");
      for (int i = k; i < ring_->n; ++i) m.e[i - k] = t.m.e[i];
      m.deg = t.m.deg;
      r.terms_.push_back({m, t.c});
    }
    r.sort_terms();
    return r;
  }

 private:
  void check_nonzero() const {
    if (terms_.empty()) throw std::domain_error("poly: zero has no lt");
  }
  void check_ring(const Poly& o) const {
    if (!ring_ || !o.ring_ || !ring_->same(*o.ring_))
      throw std::invalid_argument("poly: mixed rings");
  }

  std::shared_ptr<const Ring<F>> ring_;
  std::vector<Term<F>> terms_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(int n, MonomialOrder ord, F field,
                     std::vector<std::string> names = {}) {
  return std::make_shared<const Ring<F>>(n, ord, std::move(field),
                                         std::move(names));
}

}  // namespace quadweb
