#pragma once

// Buchberger engine with the Gebauer-Moller pair criteria and geobucket
// reduction, plus the ideal-theoretic queries built on top of it: Krull
// dimension from leading terms, elimination by block orders, radical
// membership, unit-ideal certification, and Hilbert-series degree counts.
//
// Every potentially long-running entry point takes a Deadline and reports
// a timeout instead of an answer; callers decide what "inconclusive" means.

#include "quadweb/poly.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace quadweb {

struct Deadline {
  std::chrono::steady_clock::time_point at{};
  bool enabled = false;

  static Deadline never() { return {}; }
  static Deadline after_seconds(double s) {
    Deadline d;
    d.enabled = true;
    d.at = std::chrono::steady_clock::now() +
           std::chrono::microseconds(static_cast<int64_t>(s * 1e6));
    return d;
  }
  bool expired() const {
    return enabled && std::chrono::steady_clock::now() >= at;
  }
};

struct DeadlineExceeded : std::runtime_error {
  DeadlineExceeded() : std::runtime_error("deadline exceeded") {}
};

enum class GBStatus { Done, Timeout };
enum class TriBool { Yes, No, Unknown };

// ---------------------------------------------------------------------------
// Geobucket: a sum of sorted term buckets with geometrically growing
// capacities. Keeps reduction tails from going quadratic. Buckets store
// terms in ascending order so the head sits at the back.

template <class F>
class Geobucket {
 public:
  explicit Geobucket(RingPtr<F> ring) : ring_(std::move(ring)) {}

  bool drained() const {
    for (const auto& b : buckets_)
      if (!b.empty()) return false;
    return true;
  }

  void add_poly(const Poly<F>& p) {
    if (p.is_zero()) return;
    std::vector<Term<F>> v(p.terms().rbegin(), p.terms().rend());
    insert(std::move(v));
  }

  /// Add c * m * src[from..], where src is descending.
  void add_product(const std::vector<Term<F>>& src, size_t from, Monomial m,
                   typename F::Elem c) {
    if (from >= src.size() || ring_->field.is_zero(c)) return;
    std::vector<Term<F>> v;
    v.reserve(src.size() - from);
    for (size_t i = src.size(); i-- > from;)
      v.push_back({src[i].m.mul(m), ring_->field.mul(src[i].c, c)});
    insert(std::move(v));
  }

  /// Extract the combined leading term (skipping cancellations); nullopt
  /// when nothing is left.
  std::optional<Term<F>> pop_leading() {
    const F& f = ring_->field;
    for (;;) {
      int best = -1;
      for (size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 ||
            ring_->ord.less(buckets_[best].back().m, buckets_[i].back().m))
          best = static_cast<int>(i);
      }
      if (best < 0) return std::nullopt;
      Monomial m = buckets_[best].back().m;
      typename F::Elem c = f.zero();
      for (auto& b : buckets_)
        while (!b.empty() && b.back().m == m) {
          c = f.add(c, b.back().c);
          b.pop_back();
        }
      if (!f.is_zero(c)) return Term<F>{m, c};
    }
  }

 private:
  static size_t cap(size_t i) { return size_t(4) << (2 * i); }  // 4^(i+1)

  // v ascending; merge into the smallest bucket that fits, carrying up.
  void insert(std::vector<Term<F>> v) {
    size_t i = 0;
    while (cap(i) < v.size()) ++i;
    for (;;) {
      if (i >= buckets_.size()) buckets_.resize(i + 1);
      if (buckets_[i].empty()) {
        buckets_[i] = std::move(v);
        return;
      }
      v = merge_asc(buckets_[i], v);
      buckets_[i].clear();
      if (v.empty()) return;
      if (v.size() <= cap(i)) {
        buckets_[i] = std::move(v);
        return;
      }
      ++i;
    }
  }

  std::vector<Term<F>> merge_asc(const std::vector<Term<F>>& a,
                                 const std::vector<Term<F>>& b) const {
    const F& f = ring_->field;
    std::vector<Term<F>> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].m == b[j].m) {
        typename F::Elem c = f.add(a[i].c, b[j].c);
        if (!f.is_zero(c)) out.push_back({a[i].m, c});
        ++i;
        ++j;
      } else if (ring_->ord.less(a[i].m, b[j].m)) {
        out.push_back(a[i]);
        ++i;
      } else {
        out.push_back(b[j]);
        ++j;
      }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
  }

  RingPtr<F> ring_;
  std::vector<std::vector<Term<F>>> buckets_;
};

// ---------------------------------------------------------------------------

namespace gb {

/// Remainder of f on division by the (not necessarily Groebner) family g.
/// Deterministic: always reduces by the first divisor in basis order.
template <class F>
Poly<F> normal_form(const Poly<F>& f, const std::vector<Poly<F>>& g,
                    const Deadline& dl = Deadline::never()) {
  const auto& ring = f.ring();
  const F& fld = ring->field;
  Geobucket<F> tail(ring);
  tail.add_poly(f);
  std::vector<Term<F>> out;
  int tick = 0;
  while (auto t = tail.pop_leading()) {
    if (++tick % 256 == 0 && dl.expired()) throw DeadlineExceeded();
    const Poly<F>* red = nullptr;
    for (const auto& gi : g)
      if (!gi.is_zero() && gi.lm().divides(t->m)) {
        red = &gi;
        break;
      }
    if (!red) {
      out.push_back(*t);
      continue;
    }
    Monomial shift = t->m.div(red->lm());
    typename F::Elem c = fld.neg(fld.div(t->c, red->lc()));
    tail.add_product(red->terms(), 1, shift, c);
  }
  return Poly<F>::from_sorted_terms(ring, std::move(out));
}

namespace detail {

template <class F>
struct Pair {
  uint32_t deg;  // total degree of the lcm
  int i, j;      // i < j
  Monomial lcm;
  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

/// Gebauer-Moller update: fold the new element (index t) into the pair set,
/// applying the B (back pair), M/F (new pair divisibility), and coprimality
/// criteria.
template <class F>
void update_pairs(std::set<Pair<F>>& pairs, const std::vector<Poly<F>>& basis,
                  int t) {
  const Monomial& mt = basis[t].lm();
  // B: old pairs whose lcm is strictly reducible through the newcomer
  for (auto it = pairs.begin(); it != pairs.end();) {
    const Monomial& l = it->lcm;
    if (mt.divides(l) && !(basis[it->i].lm().lcm(mt) == l) &&
        !(basis[it->j].lm().lcm(mt) == l))
      it = pairs.erase(it);
    else
      ++it;
  }
  // candidate pairs (i, t)
  struct Cand {
    int i;
    Monomial lcm;
    bool coprime;
    bool keep = true;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < t; ++i) {
    if (basis[i].is_zero()) continue;
    cands.push_back({i, basis[i].lm().lcm(mt), basis[i].lm().coprime(mt)});
  }
  // M: drop candidates whose lcm is a strict multiple of another's
  for (auto& a : cands)
    for (auto& b : cands) {
      if (!a.keep || !b.keep || a.i == b.i) continue;
      if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) a.keep = false;
    }
  // F: among equal lcms keep one, preferring to discard the whole class if
  // any member is coprime (its S-polynomial reduces to zero anyway)
  for (size_t x = 0; x < cands.size(); ++x) {
    if (!cands[x].keep) continue;
    for (size_t y = x + 1; y < cands.size(); ++y) {
      if (!cands[y].keep || !(cands[x].lcm == cands[y].lcm)) continue;
      cands[y].keep = false;
      cands[x].coprime = cands[x].coprime || cands[y].coprime;
    }
  }
  for (auto& c : cands) {
    if (!c.keep || c.coprime) continue;
    pairs.insert({c.lcm.deg, c.i, t, c.lcm});
  }
}

}  // namespace detail

template <class F>
struct GBResult {
  std::vector<Poly<F>> basis;
  GBStatus status = GBStatus::Done;

  /// A constant in the basis certifies the unit ideal even when the run
  /// timed out before completing.
  bool is_unit() const {
    for (const auto& g : basis)
      if (!g.is_zero() && g.lm().is_one()) return true;
    return false;
  }
};

/// Buchberger with normal selection (lowest lcm degree first, then oldest
/// pair). Returns the unique reduced basis on completion; on timeout the
/// partial basis is still a set of ideal members (not a Groebner basis).
template <class F>
GBResult<F> buchberger(const std::vector<Poly<F>>& gens,
                       const Deadline& dl = Deadline::never()) {
  if (gens.empty()) throw std::invalid_argument("buchberger: no generators");
  const auto& ring = gens[0].ring();
  GBResult<F> res;
  std::vector<Poly<F>>& basis = res.basis;
  std::set<detail::Pair<F>> pairs;
  try {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      Poly<F> r = normal_form(g, basis, dl);
      if (r.is_zero()) continue;
      basis.push_back(r.monic());
      detail::update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1);
    }
    while (!pairs.empty()) {
      if (dl.expired()) throw DeadlineExceeded();
      auto p = *pairs.begin();
      pairs.erase(pairs.begin());
      const Poly<F>&a = basis[p.i], &b = basis[p.j];
      Poly<F> spoly = a.mul_term(p.lcm.div(a.lm()), ring->field.one()) -
                      b.mul_term(p.lcm.div(b.lm()), ring->field.one());
      Poly<F> r = normal_form(spoly, basis, dl);
      if (r.is_zero()) continue;
      if (r.lm().is_one()) {  // unit ideal: short-circuit
        res.basis = {Poly<F>::constant(ring, ring->field.one())};
        return res;
      }
      basis.push_back(r.monic());
      detail::update_pairs(pairs, basis, static_cast<int>(basis.size()) - 1);
    }
    // interreduce to the unique reduced basis: leading monomials are
    // pairwise indivisible by construction except across additions, so
    // strip the strictly reducible ones, then tail-reduce.
    std::vector<Poly<F>> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < basis.size() && !redundant; ++j)
        if (i != j && basis[j].lm().divides(basis[i].lm()) &&
            !(basis[j].lm() == basis[i].lm()))
          redundant = true;
      if (!redundant) keep.push_back(basis[i]);
    }
    for (size_t i = 0; i < keep.size(); ++i) {
      std::vector<Poly<F>> others;
      for (size_t j = 0; j < keep.size(); ++j)
        if (j != i) others.push_back(keep[j]);
      keep[i] = normal_form(keep[i], others, dl).monic();
    }
    std::sort(keep.begin(), keep.end(),
              [&](const Poly<F>& x, const Poly<F>& y) {
                return ring->ord.less(y.lm(), x.lm());
              });
    res.basis = std::move(keep);
  } catch (const DeadlineExceeded&) {
    res.status = GBStatus::Timeout;
  }
  return res;
}

/// Ideal membership against a completed reduced basis.
template <class F>
bool reduces_to_zero(const Poly<F>& f, const GBResult<F>& g) {
  return normal_form(f, g.basis).is_zero();
}

/// Affine Krull dimension from the leading monomials of a Groebner basis:
/// the largest set S of variables such that no leading monomial lives
/// entirely on S. Unit ideal gives -1, the zero ideal gives n.
/// Exponential scan; fine for <= 9 variables.
template <class F>
int dimension_affine(const GBResult<F>& g, int nvars) {
  if (g.status != GBStatus::Done)
    throw std::invalid_argument("dimension: basis incomplete");
  if (g.is_unit()) return -1;
  if (g.basis.empty()) return nvars;
  std::vector<uint32_t> supports;
  for (const auto& b : g.basis) {
    uint32_t s = 0;
    for (int v = 0; v < nvars; ++v)
      if (b.lm().e[v] > 0) s |= (1u << v);
    supports.push_back(s);
  }
  int best = 0;
  for (uint32_t set = 0; set < (1u << nvars); ++set) {
    bool ok = true;
    for (uint32_t s : supports)
      if ((s & ~set) == 0) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, __builtin_popcount(set));
  }
  return best;
}

/// Certified unit-ideal test by truncated linear algebra: row-reduce all
/// monomial shifts of the generators up to the given total degree and look
/// for a constant. A true result is a proof; false only means "not found
/// at this degree".
template <class F>
bool unit_via_truncation(const std::vector<Poly<F>>& gens, uint32_t maxdeg,
                         const Deadline& dl = Deadline::never()) {
  if (gens.empty()) return false;
  const auto& ring = gens[0].ring();
  std::vector<Poly<F>> rows;
  std::vector<Monomial> shifts;
  // enumerate monomials of degree <= d in n vars
  int n = ring->n;
  std::vector<uint16_t> exps(n, 0);
  auto rec = [&](auto&& self, int var, uint32_t left) -> void {
    if (var == n) {
      Monomial m;
      for (int v = 0; v < n; ++v)
        if (exps[v]) m = m.mul(Monomial::var(v, exps[v]));
      shifts.push_back(m);
      return;
    }
    for (uint16_t e = 0; e <= left; ++e) {
      exps[var] = e;
      self(self, var + 1, left - e);
    }
    exps[var] = 0;
  };
  rec(rec, 0, maxdeg);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    uint32_t gd = g.total_degree();
    for (const auto& m : shifts) {
      if (m.deg + gd > maxdeg) continue;
      rows.push_back(g.mul_term(m, ring->field.one()));
    }
  }
  // Gaussian elimination on sparse polys, eliminating by leading monomial.
  std::vector<Poly<F>> echelon;
  for (auto& r : rows) {
    if (dl.expired()) throw DeadlineExceeded();
    Poly<F> cur = r;
    for (const auto& e : echelon) {
      if (cur.is_zero()) break;
      if (cur.lm() == e.lm())
        cur = cur - e.scale(cur.lc());
    }
    if (cur.is_zero()) continue;
    if (cur.lm().is_one()) return true;
    cur = cur.monic();
    // keep echelon sorted descending by leading monomial
    auto pos = std::lower_bound(
        echelon.begin(), echelon.end(), cur,
        [&](const Poly<F>& a, const Poly<F>& b) {
          return ring->ord.less(b.lm(), a.lm());
        });
    echelon.insert(pos, cur);
  }
  return false;
}

/// Groebner basis of the elimination ideal killing the first k variables:
/// computes a basis under the block order and keeps the polynomials free of
/// those variables, re-expressed in a fresh (n-k)-variable ring.
template <class F>
std::optional<std::vector<Poly<F>>> eliminate_first(
    const std::vector<Poly<F>>& gens, int k,
    const Deadline& dl = Deadline::never()) {
  if (gens.empty()) throw std::invalid_argument("eliminate: no generators");
  const auto& ring = gens[0].ring();
  int n = ring->n;
  if (k <= 0 || k >= n) throw std::invalid_argument("eliminate: bad k");
  auto elimring = std::make_shared<const Ring<F>>(
      n, MonomialOrder::elim(n, k), ring->field, ring->names);
  std::vector<Poly<F>> moved;
  for (const auto& g : gens) moved.push_back(g.reorder(elimring));
  GBResult<F> g = buchberger(moved, dl);
  if (g.status != GBStatus::Done) return std::nullopt;
  std::vector<std::string> names(ring->names.begin() + k, ring->names.end());
  auto small = make_ring(n - k, MonomialOrder::degrevlex(n - k), ring->field,
                         names);
  std::vector<Poly<F>> out;
  for (const auto& b : g.basis) {
    bool pure = true;
    for (int v = 0; v < k && pure; ++v)
      if (b.uses_var(v)) pure = false;
    if (pure) out.push_back(b.drop_leading_vars(k, small));
  }
  return out;
}

/// Radical membership via the Rabinowitsch trick: f vanishes on V(I) iff
/// 1 in I + (1 - t f) in a ring with one extra variable. Needs n+1 slots.
template <class F>
TriBool in_radical(const Poly<F>& f, const std::vector<Poly<F>>& gens,
                   const Deadline& dl = Deadline::never()) {
  const auto& ring = f.ring();
  int n = ring->n;
  if (n + 1 > kMaxVars)
    throw std::invalid_argument("radical membership: no spare variable");
  std::vector<std::string> names = ring->names;
  names.push_back("_t");
  auto ext = make_ring(n + 1, MonomialOrder::degrevlex(n + 1), ring->field,
                       names);
  std::vector<Poly<F>> g2;
  for (const auto& g : gens) g2.push_back(g.extend_vars(ext));
  Poly<F> fe = f.extend_vars(ext);
  Poly<F> t = Poly<F>::variable(ext, n);
  g2.push_back(Poly<F>::constant(ext, ring->field.one()) - t * fe);
  GBResult<F> g = buchberger(g2, dl);
  if (g.is_unit()) return TriBool::Yes;
  if (g.status == GBStatus::Timeout) return TriBool::Unknown;
  return TriBool::No;
}

// ---------------------------------------------------------------------------
// Hilbert series of monomial ideals.

namespace detail {

inline std::vector<Integer> hs_mul_one_minus_td(std::vector<Integer> a,
                                                uint32_t d) {
  // a(t) * (1 - t^d)
  std::vector<Integer> r(a.size() + d, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] += a[i];
    r[i + d] -= a[i];
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

inline void hs_minimalize(std::vector<Monomial>& gens) {
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && gens[j].divides(gens[i]) &&
          !(gens[i] == gens[j] && j > i))
        redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  gens = std::move(out);
}

inline std::vector<Integer> hs_numerator_rec(std::vector<Monomial> gens,
                                             int nvars) {
  hs_minimalize(gens);
  for (const auto& g : gens)
    if (g.is_one()) return {};  // unit ideal: numerator 0
  // base: pairwise coprime generators form a regular sequence
  bool coprime = true;
  for (size_t i = 0; i < gens.size() && coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && coprime; ++j)
      if (!gens[i].coprime(gens[j])) coprime = false;
  if (coprime) {
    std::vector<Integer> acc = {Integer(1)};
    for (const auto& g : gens) acc = hs_mul_one_minus_td(acc, g.deg);
    return acc;
  }
  // pivot: most frequent variable
  int best = -1, bestcount = 0;
  for (int v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& g : gens)
      if (g.e[v] > 0) ++count;
    if (count > bestcount) {
      bestcount = count;
      best = v;
    }
  }
  // I = (I + x) pinched with t^1 * (I : x)
  std::vector<Monomial> plus, colon;
  plus.push_back(Monomial::var(best));
  for (const auto& g : gens) {
    if (g.e[best] == 0) {
      plus.push_back(g);
      colon.push_back(g);
    } else {
      colon.push_back(g.div(Monomial::var(best)));
    }
  }
  std::vector<Integer> a = hs_numerator_rec(std::move(plus), nvars);
  std::vector<Integer> b = hs_numerator_rec(std::move(colon), nvars);
  std::vector<Integer> r(std::max(a.size(), b.size() + 1), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

}  // namespace detail

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/I for a monomial
/// ideal I (given by any generating set) in n variables. The zero ideal
/// gives {1}; the unit ideal gives {} (the zero numerator).
inline std::vector<Integer> hilbert_numerator(std::vector<Monomial> gens,
                                              int nvars) {
  return detail::hs_numerator_rec(std::move(gens), nvars);
}

/// Exact division of a polynomial (coefficient list) by (1 - t): the
/// quotient coefficients are the prefix sums, and exactness means the full
/// sum vanishes.
inline std::vector<Integer> divide_one_minus_t(const std::vector<Integer>& n) {
  if (n.empty()) return {};
  std::vector<Integer> q;
  Integer run(0);
  for (const auto& c : n) {
    run += c;
    q.push_back(run);
  }
  if (q.back() != 0)
    throw std::domain_error("hilbert: inexact division by (1 - t)");
  q.pop_back();
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

/// Degree of a graded quotient with affine cone dimension `dim_cone`:
/// cancel (1-t)^(n - dim_cone) from the numerator and evaluate at t = 1.
inline Integer graded_degree(std::vector<Integer> num, int nvars,
                             int dim_cone) {
  for (int k = 0; k < nvars - dim_cone; ++k) num = divide_one_minus_t(num);
  Integer acc(0);
  for (const auto& c : num) acc += c;
  return acc;
}

}  // namespace gb
}  // namespace quadweb
