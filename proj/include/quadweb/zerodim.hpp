#pragma once

// Zero-dimensional ideal analysis: finite quotient algebras as explicit
// vector spaces, multiplication operators, Seidenberg's radical, geometric
// multiplicity profiles through characteristic polynomials of a separating
// linear form, and shape-position parametrizations of radical schemes.
//
// Projective schemes are handled chart by chart; chart c imposes x_c = 1
// and x_0 = ... = x_{c-1} = 0, so the affine pieces partition the points.

#include "quadweb/groebner.hpp"
#include "quadweb/matrix.hpp"
#include "quadweb/poly.hpp"
#include "quadweb/univariate.hpp"

#include <map>
#include <optional>
#include <vector>

namespace quadweb {
namespace zd {

struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

/// Leading terms admit a pure power of every variable iff the quotient is
/// finite-dimensional (for a proper ideal).
template <class F>
bool is_zero_dimensional(const gb::GBResult<F>& g, int nvars) {
  if (g.status != GBStatus::Done) return false;
  if (g.is_unit()) return true;  // empty scheme counts as dimension <= 0
  for (int v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& b : g.basis) {
      const Monomial& m = b.lm();
      if (m.e[v] == 0) continue;
      bool pure = true;
      for (int u = 0; u < nvars && pure; ++u)
        if (u != v && m.e[u] > 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// A finite quotient algebra R/I with its monomial basis under the
/// staircase of a reduced Groebner basis.
template <class F>
struct Quotient {
  RingPtr<F> ring;
  std::vector<Poly<F>> gb;
  std::vector<Monomial> basis;  // basis[0] is the monomial 1
  std::map<Monomial, int, MonomialLexLess> index;

  int length() const { return static_cast<int>(basis.size()); }

  std::vector<typename F::Elem> coords(const Poly<F>& f) const {
    const F& fld = ring->field;
    Poly<F> nf = gb::normal_form(f, gb);
    std::vector<typename F::Elem> v(basis.size(), fld.zero());
    for (const auto& t : nf.terms()) {
      auto it = index.find(t.m);
      if (it == index.end())
        throw std::logic_error("quotient: residue escapes the staircase");
      v[it->second] = t.c;
    }
    return v;
  }
};

/// Build the quotient data; requires a completed basis of a
/// zero-dimensional ideal (the unit ideal yields an empty basis).
template <class F>
Quotient<F> make_quotient(const RingPtr<F>& ring, gb::GBResult<F> g) {
  if (g.status != GBStatus::Done)
    throw std::invalid_argument("quotient: basis incomplete");
  if (!is_zero_dimensional(g, ring->n))
    throw std::invalid_argument("quotient: ideal not zero-dimensional");
  Quotient<F> q;
  q.ring = ring;
  q.gb = std::move(g.basis);
  if (!q.gb.empty() && q.gb[0].lm().is_one()) return q;  // unit ideal
  // breadth-first walk of the staircase
  std::map<Monomial, int, MonomialLexLess> seen;
  std::vector<Monomial> queue = {Monomial{}};
  seen.emplace(Monomial{}, 0);
  for (size_t head = 0; head < queue.size(); ++head) {
    Monomial m = queue[head];
    bool reducible = false;
    for (const auto& b : q.gb)
      if (b.lm().divides(m)) {
        reducible = true;
        break;
      }
    if (reducible) continue;
    q.basis.push_back(m);
    for (int v = 0; v < ring->n; ++v) {
      Monomial next = m.mul(Monomial::var(v));
      if (seen.emplace(next, 0).second) queue.push_back(next);
    }
  }
  // sort ascending in the ring order so that basis[0] = 1
  std::sort(q.basis.begin(), q.basis.end(),
            [&](const Monomial& a, const Monomial& b) {
              return ring->ord.less(a, b);
            });
  for (size_t i = 0; i < q.basis.size(); ++i)
    q.index.emplace(q.basis[i], static_cast<int>(i));
  return q;
}

/// Matrix of multiplication by f on the quotient, columns indexed by basis
/// monomials.
template <class F>
Mat<F> mult_matrix(const Quotient<F>& q, const Poly<F>& f) {
  const F& fld = q.ring->field;
  int n = q.length();
  Mat<F> m(n, n, fld.zero());
  for (int j = 0; j < n; ++j) {
    Poly<F> bj = Poly<F>::term(q.ring, q.basis[j], fld.one());
    auto col = q.coords(f * bj);
    for (int i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  return m;
}

/// Monic generator of the elimination ideal I cap k[f]: the minimal
/// polynomial of multiplication by f applied to 1.
template <class F>
UPoly<F> minpoly_of(const Quotient<F>& q, const Poly<F>& f) {
  const F& fld = q.ring->field;
  if (q.length() == 0) return up::constant(fld, fld.one());
  Mat<F> m = mult_matrix(q, f);
  std::vector<typename F::Elem> one(q.length(), fld.zero());
  one[0] = fld.one();
  return mtx::minpoly_krylov(fld, m, one);
}

template <class F>
UPoly<F> minpoly_of_var(const Quotient<F>& q, int var) {
  return minpoly_of(q, Poly<F>::variable(q.ring, var));
}

/// Turn a univariate polynomial into g(x_var).
template <class F>
Poly<F> plug_variable(const RingPtr<F>& ring, const UPoly<F>& g, int var) {
  Poly<F> acc = Poly<F>::zero(ring);
  for (size_t i = 0; i < g.size(); ++i) {
    if (ring->field.is_zero(g[i])) continue;
    acc = acc + Poly<F>::term(ring, Monomial::var(var, static_cast<uint16_t>(i)),
                              g[i]);
  }
  return acc;
}

/// Seidenberg: saturate with squarefree parts of the variable minimal
/// polynomials until all of them are squarefree; the result is the radical.
/// Each round strictly drops the length, so this terminates.
template <class F>
std::optional<gb::GBResult<F>> radical_zero_dim(
    const RingPtr<F>& ring, std::vector<Poly<F>> gens,
    const Deadline& dl = Deadline::never()) {
  for (;;) {
    gb::GBResult<F> g = gb::buchberger(gens, dl);
    if (g.status != GBStatus::Done) return std::nullopt;
    if (g.is_unit()) return g;
    Quotient<F> q = make_quotient(ring, g);
    bool changed = false;
    for (int v = 0; v < ring->n; ++v) {
      UPoly<F> m = minpoly_of_var(q, v);
      UPoly<F> s = up::squarefree_part(ring->field, m);
      if (up::deg(s) < up::deg(m)) {
        gens.push_back(plug_variable(ring, s, v));
        changed = true;
      }
    }
    if (!changed) return g;
  }
}

/// Geometric multiplicity profile: counts of points (over the algebraic
/// closure) by local length, extracted from the characteristic polynomial
/// of a separating linear form on the full quotient.
template <class F>
struct Profile {
  std::vector<std::pair<int, int>> by_multiplicity;  // (local length, points)
  std::vector<typename F::Elem> form;                // the separating form
  int total_length = 0;
  int distinct_points = 0;
};

template <class F>
std::optional<Profile<F>> multiplicity_profile(const Quotient<F>& qfull,
                                               int distinct_points, Rng& rng,
                                               int retries = 5) {
  const F& fld = qfull.ring->field;
  Profile<F> out;
  out.total_length = qfull.length();
  out.distinct_points = distinct_points;
  if (qfull.length() == 0) return out;  // empty scheme: empty profile
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<typename F::Elem> c(qfull.ring->n);
    for (auto& e : c) e = fld.sample(rng);
    Poly<F> ell = Poly<F>::zero(qfull.ring);
    for (int v = 0; v < qfull.ring->n; ++v)
      ell = ell + Poly<F>::variable(qfull.ring, v).scale(c[v]);
    Mat<F> m = mult_matrix(qfull, ell);
    UPoly<F> chi = mtx::charpoly(fld, m);
    UPoly<F> sf = up::squarefree_part(fld, chi);
    if (up::deg(sf) != distinct_points) continue;  // not separating; retry
    auto layers = up::multiplicity_layers(fld, chi);
    out.by_multiplicity.clear();
    for (size_t k = 0; k < layers.size(); ++k)
      if (up::deg(layers[k]) > 0)
        out.by_multiplicity.push_back(
            {static_cast<int>(k) + 1, up::deg(layers[k])});
    out.form = c;
    return out;
  }
  return std::nullopt;
}

/// Shape position of a radical zero-dimensional scheme: a separating form
/// u with squarefree minimal polynomial g of full degree, and per-variable
/// parametrizations x_i = h_i(u) modulo g.
template <class F>
struct Shape {
  std::vector<typename F::Elem> form;  // coefficients of u in the variables
  UPoly<F> eliminant;                  // monic squarefree, deg = #points
  std::vector<UPoly<F>> coord;         // coord[i] = h_i, deg < deg eliminant
};

template <class F>
std::optional<Shape<F>> shape_position(const Quotient<F>& qrad, Rng& rng,
                                       int retries = 5) {
  const F& fld = qrad.ring->field;
  int n = qrad.length();
  if (n == 0) return std::nullopt;
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<typename F::Elem> c(qrad.ring->n);
    for (auto& e : c) e = fld.sample(rng);
    Poly<F> ell = Poly<F>::zero(qrad.ring);
    for (int v = 0; v < qrad.ring->n; ++v)
      ell = ell + Poly<F>::variable(qrad.ring, v).scale(c[v]);
    Mat<F> m = mult_matrix(qrad, ell);
    std::vector<typename F::Elem> vec(n, fld.zero());
    vec[0] = fld.one();  // coordinates of 1
    // Krylov matrix: columns 1, u, u^2, ..., u^{n-1}
    Mat<F> kry(n, n, fld.zero());
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) kry.at(i, j) = vec[i];
      if (j + 1 < n) vec = mtx::mulvec(fld, m, vec);
    }
    if (mtx::rank(fld, kry) != n) continue;  // u does not generate; retry
    UPoly<F> g = mtx::charpoly(fld, m);
    if (up::deg(up::squarefree_part(fld, g)) != n) continue;
    // solve kry * h_i = coords(x_i) for all variables at once
    Mat<F> aug(n, n + qrad.ring->n, fld.zero());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) aug.at(i, j) = kry.at(i, j);
    for (int v = 0; v < qrad.ring->n; ++v) {
      auto xv = qrad.coords(Poly<F>::variable(qrad.ring, v));
      for (int i = 0; i < n; ++i) aug.at(i, n + v) = xv[i];
    }
    mtx::rref(fld, aug);
    Shape<F> s;
    s.form = c;
    s.eliminant = g;
    for (int v = 0; v < qrad.ring->n; ++v) {
      UPoly<F> h(n, fld.zero());
      for (int i = 0; i < n; ++i) h[i] = aug.at(i, n + v);
      up::normalize(fld, h);
      s.coord.push_back(std::move(h));
    }
    return s;
  }
  return std::nullopt;
}

/// All points of the (radical, shaped) scheme with coordinates in the base
/// field.
template <class F>
std::vector<std::vector<typename F::Elem>> rational_points(const Shape<F>& s,
                                                           const F& fld,
                                                           Rng& rng) {
  std::vector<std::vector<typename F::Elem>> pts;
  for (auto& tau : up::roots(fld, s.eliminant, rng)) {
    std::vector<typename F::Elem> p;
    for (const auto& h : s.coord) p.push_back(up::eval(fld, h, tau));
    pts.push_back(std::move(p));
  }
  return pts;
}

/// Degrees of the residue fields (orbit sizes under Frobenius).
template <class F>
std::vector<int> orbit_degrees(const Shape<F>& s, const F& fld, Rng& rng) {
  std::vector<int> degs;
  for (auto& [g, m] : up::factor(fld, s.eliminant, rng)) {
    (void)m;  // eliminant is squarefree
    degs.push_back(up::deg(g));
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

// ---------------------------------------------------------------------------
// Projective schemes, chart by chart.

enum class ChartState { Empty, Finite, PositiveDimensional, Timeout };

template <class F>
struct Chart {
  int index = -1;        // which homogeneous coordinate is set to 1
  RingPtr<F> ring;       // affine ring in the remaining n-1 variables
  std::vector<Poly<F>> gens;        // plain dehomogenization
  std::vector<Poly<F>> dedup_gens;  // gens + high powers of earlier coords
  ChartState state = ChartState::Timeout;
  gb::GBResult<F> gb;           // basis of the deduplicated chart ideal
  gb::GBResult<F> radical_gb;   // its radical (when Finite and requested)
  int dim = -2;                 // of the deduplicated locus; see states
  int length = 0;
  int radical_length = 0;
};

/// Dehomogenize to chart c: variable j (j != c) keeps its name at position
/// j - (j > c ? 1 : 0).
template <class F>
std::vector<Poly<F>> dehomogenize_chart(const std::vector<Poly<F>>& homog,
                                        int c, const RingPtr<F>& chart_ring) {
  std::vector<Poly<F>> out;
  for (const auto& h : homog) {
    Poly<F> d = h.set_var_one_drop(c, chart_ring);
    if (!d.is_zero()) out.push_back(d);
  }
  if (out.empty()) out.push_back(Poly<F>::zero(chart_ring));
  return out;
}

/// Analyze the projective scheme cut out by homogeneous generators in the
/// given n-variable ring: per-chart dimension, length, radical length.
///
/// Chart c is restricted to the points whose coordinates 0..c-1 all vanish,
/// so the charts partition the points and the lengths and radical lengths
/// sum to those of the whole scheme. The restriction must not disturb the
/// local structure at the surviving points, so instead of the linear forms
/// x_j themselves we impose x_j^L with L at least the biggest local length:
/// at a surviving point x_j^L lies in the L-th power of the maximal ideal
/// and is already in the local ideal, while any point with x_j != 0 is
/// killed because x_j^L is a unit there. The radical computation is free
/// to use the linear forms, which cut the same point set.
template <class F>
std::vector<Chart<F>> project_charts(const RingPtr<F>& ring,
                                     const std::vector<Poly<F>>& homog,
                                     const Deadline& dl = Deadline::never(),
                                     bool want_radical = true) {
  std::vector<Chart<F>> charts;
  int n = ring->n;
  for (int c = 0; c < n; ++c) {
    Chart<F> ch;
    ch.index = c;
    std::vector<std::string> names;
    for (int j = 0; j < n; ++j)
      if (j != c) names.push_back(ring->names[j]);
    ch.ring = make_ring(n - 1, MonomialOrder::degrevlex(n - 1), ring->field,
                        names);
    ch.gens = dehomogenize_chart(homog, c, ch.ring);
    gb::GBResult<F> plain = gb::buchberger(ch.gens, dl);
    if (plain.status != GBStatus::Done) {
      ch.state = ChartState::Timeout;
      charts.push_back(std::move(ch));
      continue;
    }
    int plain_dim = gb::dimension_affine(plain, ch.ring->n);
    if (plain_dim > 0) {
      // The slice x_c != 0 of the scheme is already not finite; the length
      // bound needed for deduplication does not exist.
      ch.state = ChartState::PositiveDimensional;
      ch.dim = plain_dim;
      ch.gb = std::move(plain);
      charts.push_back(std::move(ch));
      continue;
    }
    ch.dedup_gens = ch.gens;
    if (c > 0 && plain_dim == 0) {
      int bound = make_quotient(ch.ring, plain).length();
      for (int j = 0; j < c; ++j)
        ch.dedup_gens.push_back(
            Poly<F>::variable(ch.ring, j, static_cast<uint16_t>(bound)));
    }
    ch.gb = (c == 0 || plain_dim < 0) ? std::move(plain)
                                      : gb::buchberger(ch.dedup_gens, dl);
    if (ch.gb.status != GBStatus::Done) {
      ch.state = ChartState::Timeout;
      charts.push_back(std::move(ch));
      continue;
    }
    ch.dim = gb::dimension_affine(ch.gb, ch.ring->n);
    if (ch.dim < 0) {
      ch.state = ChartState::Empty;
      charts.push_back(std::move(ch));
      continue;
    }
    ch.state = ChartState::Finite;
    ch.length = make_quotient(ch.ring, ch.gb).length();
    if (want_radical) {
      std::vector<Poly<F>> rgens = ch.gens;
      for (int j = 0; j < c; ++j)
        rgens.push_back(Poly<F>::variable(ch.ring, j));
      auto rad = radical_zero_dim(ch.ring, rgens, dl);
      if (!rad) {
        ch.state = ChartState::Timeout;
      } else {
        ch.radical_gb = std::move(*rad);
        ch.radical_length = make_quotient(ch.ring, ch.radical_gb).length();
      }
    }
    charts.push_back(std::move(ch));
  }
  return charts;
}

/// Independent route to the total length of a zero-dimensional projective
/// scheme: the constant Hilbert polynomial, read off the numerator of the
/// Hilbert series of the homogeneous ideal. Returns nullopt on timeout;
/// -1 when the scheme has positive dimension (cone dimension above 1).
template <class F>
std::optional<int> projective_length(const RingPtr<F>& ring,
                                     const std::vector<Poly<F>>& homog,
                                     const Deadline& dl = Deadline::never()) {
  gb::GBResult<F> g = gb::buchberger(homog, dl);
  if (g.status != GBStatus::Done) return std::nullopt;
  int cone_dim = gb::dimension_affine(g, ring->n);
  if (cone_dim > 1) return -1;
  if (cone_dim <= 0) return 0;  // at most the origin: empty in projective space
  std::vector<Monomial> lms;
  for (const auto& b : g.basis) lms.push_back(b.lm());
  std::vector<Integer> num = gb::hilbert_numerator(lms, ring->n);
  return gb::graded_degree(num, ring->n, 1).template convert_to<int>();
}

}  // namespace zd
}  // namespace quadweb
