#pragma once

// Dense matrices over a field context, plus matrices of multivariate
// polynomials with fraction-free determinant machinery.
//
// The numeric routines only ever probe elements through is_zero/inv, so they
// work unchanged over composite coordinate rings that signal zero divisors
// by throwing: the exception passes straight through the elimination loops.

#include "quadweb/arith.hpp"
#include "quadweb/poly.hpp"
#include "quadweb/univariate.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace quadweb {

template <class F>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<typename F::Elem> a;

  Mat() = default;
  Mat(int r, int c, typename F::Elem fill)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

  typename F::Elem& at(int i, int j) {
    return a[static_cast<size_t>(i) * cols + j];
  }
  const typename F::Elem& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }
};

namespace mtx {

template <class F>
Mat<F> zero(const F& f, int r, int c) {
  return Mat<F>(r, c, f.zero());
}

template <class F>
Mat<F> identity(const F& f, int n) {
  Mat<F> m(n, n, f.zero());
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

template <class F>
Mat<F> transpose(const F&, const Mat<F>& m) {
  Mat<F> r;
  r.rows = m.cols;
  r.cols = m.rows;
  r.a.resize(m.a.size());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

template <class F>
Mat<F> mul(const F& f, const Mat<F>& x, const Mat<F>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat: shape mismatch");
  Mat<F> r(x.rows, y.cols, f.zero());
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (f.is_zero(x.at(i, k))) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(x.at(i, k), y.at(k, j)));
    }
  return r;
}

template <class F>
std::vector<typename F::Elem> mulvec(const F& f, const Mat<F>& m,
                                     const std::vector<typename F::Elem>& v) {
  if (static_cast<int>(v.size()) != m.cols)
    throw std::invalid_argument("mat: shape mismatch");
  std::vector<typename F::Elem> r(m.rows, f.zero());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      r[i] = f.add(r[i], f.mul(m.at(i, j), v[j]));
  return r;
}

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<int> rref(const F& f, Mat<F>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    typename F::Elem inv = f.inv(m.at(row, col));
    for (int j = col; j < m.cols; ++j)
      m.at(row, j) = f.mul(m.at(row, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || f.is_zero(m.at(i, col))) continue;
      typename F::Elem c = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
int rank(const F& f, Mat<F> m) {
  return static_cast<int>(rref(f, m).size());
}

/// Basis of the right kernel {v : Mv = 0}, one vector per free column.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& f,
                                                        Mat<F> m) {
  std::vector<int> pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<typename F::Elem> v(m.cols, f.zero());
    v[j] = f.one();
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(m.at(static_cast<int>(r), j));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
typename F::Elem det(const F& f, Mat<F> m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  typename F::Elem acc = f.one();
  for (int col = 0; col < m.cols; ++col) {
    int p = -1;
    for (int i = col; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) return f.zero();
    if (p != col) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(col, j));
      acc = f.neg(acc);
    }
    acc = f.mul(acc, m.at(col, col));
    typename F::Elem inv = f.inv(m.at(col, col));
    for (int i = col + 1; i < m.rows; ++i) {
      if (f.is_zero(m.at(i, col))) continue;
      typename F::Elem c = f.mul(m.at(i, col), inv);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(col, j)));
    }
  }
  return acc;
}

/// Characteristic polynomial det(tI - M): Hessenberg reduction by similarity
/// transforms, then the leading-principal-minor recurrence. O(n^3).
template <class F>
UPoly<F> charpoly(const F& f, Mat<F> h) {
  if (h.rows != h.cols) throw std::invalid_argument("charpoly: not square");
  int n = h.rows;
  for (int c = 0; c + 2 <= n - 1; ++c) {
    int p = -1;
    for (int i = c + 1; i < n; ++i)
      if (!f.is_zero(h.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(p, j), h.at(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, p), h.at(i, c + 1));
    }
    typename F::Elem pinv = f.inv(h.at(c + 1, c));
    for (int r = c + 2; r < n; ++r) {
      if (f.is_zero(h.at(r, c))) continue;
      typename F::Elem u = f.mul(h.at(r, c), pinv);
      for (int j = 0; j < n; ++j)
        h.at(r, j) = f.sub(h.at(r, j), f.mul(u, h.at(c + 1, j)));
      for (int i = 0; i < n; ++i)
        h.at(i, c + 1) = f.add(h.at(i, c + 1), f.mul(u, h.at(i, r)));
    }
  }
  // p_m(t) = (t - h[m-1][m-1]) p_{m-1}
  //        - sum_i h[m-1-i][m-1] (prod of subdiagonal run) p_{m-1-i}
  // Updates are fused so each p_m keeps leading coefficient exactly one and
  // no zero tests run on the entries (product rings must not split here).
  std::vector<UPoly<F>> p(n + 1);
  p[0] = up::constant(f, f.one());
  for (int m = 1; m <= n; ++m) {
    p[m].assign(static_cast<size_t>(m) + 1, f.zero());
    typename F::Elem d = h.at(m - 1, m - 1);
    for (int k = 0; k < m; ++k) {
      p[m][k + 1] = f.add(p[m][k + 1], p[m - 1][k]);
      p[m][k] = f.sub(p[m][k], f.mul(d, p[m - 1][k]));
    }
    typename F::Elem prod = f.one();
    for (int i = 1; i <= m - 1; ++i) {
      prod = f.mul(prod, h.at(m - i, m - i - 1));
      typename F::Elem coef = f.mul(h.at(m - 1 - i, m - 1), prod);
      const UPoly<F>& q = p[m - 1 - i];
      for (size_t k = 0; k < q.size(); ++k)
        p[m][k] = f.sub(p[m][k], f.mul(coef, q[k]));
    }
  }
  return p[n];
}

/// Monic minimal polynomial of the Krylov sequence v, Mv, M^2 v, ...
/// i.e. the least-degree monic g with g(M)v = 0.
template <class F>
UPoly<F> minpoly_krylov(const F& f, const Mat<F>& m,
                        std::vector<typename F::Elem> v) {
  int n = m.cols;
  // Echelon basis of the span so far, with the expression of each stored
  // vector in terms of the Krylov iterates.
  std::vector<std::vector<typename F::Elem>> rows;   // echelonized vectors
  std::vector<std::vector<typename F::Elem>> combo;  // Krylov coordinates
  std::vector<int> lead;                             // leading index per row
  for (int step = 0; step <= n; ++step) {
    std::vector<typename F::Elem> w = v;
    std::vector<typename F::Elem> c(step + 1, f.zero());
    c[step] = f.one();
    for (size_t r = 0; r < rows.size(); ++r) {
      if (f.is_zero(w[lead[r]])) continue;
      typename F::Elem u = f.mul(w[lead[r]], f.inv(rows[r][lead[r]]));
      for (int j = 0; j < n; ++j)
        w[j] = f.sub(w[j], f.mul(u, rows[r][j]));
      for (size_t k = 0; k < combo[r].size(); ++k)
        c[k] = f.sub(c[k], f.mul(u, combo[r][k]));
    }
    int l = -1;
    for (int j = 0; j < n; ++j)
      if (!f.is_zero(w[j])) {
        l = j;
        break;
      }
    if (l < 0) {
      // dependence: sum c_k M^k v = 0 gives the minimal polynomial
      return up::monic(f, up::from_coeffs(f, std::move(c)));
    }
    rows.push_back(std::move(w));
    combo.push_back(std::move(c));
    lead.push_back(l);
    v = mulvec(f, m, v);
  }
  throw std::logic_error("minpoly_krylov: no dependence up to dimension");
}

}  // namespace mtx

// ---------------------------------------------------------------------------
// Matrices of multivariate polynomials.

template <class F>
struct PolyMat {
  int rows = 0, cols = 0;
  std::vector<Poly<F>> a;

  PolyMat() = default;
  PolyMat(int r, int c, const RingPtr<F>& ring)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, Poly<F>::zero(ring)) {}

  Poly<F>& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Poly<F>& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }
};

namespace pmx {

/// Fraction-free Gaussian elimination (one-step Bareiss) with row pivoting.
/// Exact over any ring of polynomials with integral coefficients; every
/// division in the update is exact by the Sylvester identity.
template <class F>
Poly<F> det_bareiss(PolyMat<F> m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  int n = m.rows;
  if (n == 0) throw std::invalid_argument("det: empty matrix");
  const auto& ring = m.a[0].ring();
  bool negate = false;
  Poly<F> prev = Poly<F>::constant(ring, ring->field.one());
  for (int k = 0; k < n; ++k) {
    int p = -1;
    size_t best = 0;
    for (int i = k; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      if (p < 0 || m.at(i, k).size() < best) {
        p = i;
        best = m.at(i, k).size();
      }
    }
    if (p < 0) return Poly<F>::zero(ring);
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Poly<F> num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num.divexact(prev);
      }
      m.at(i, k) = Poly<F>::zero(ring);
    }
    prev = m.at(k, k);
  }
  Poly<F> d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

/// Laplace expansion along successive rows, memoized on the set of columns
/// still in play. Exponential in principle; intended for small matrices
/// whose entries are too nonlinear for the fraction-free route.
template <class F>
Poly<F> det_cofactor(const PolyMat<F>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  int n = m.rows;
  if (n == 0) throw std::invalid_argument("det: empty matrix");
  if (n > 20) throw std::invalid_argument("det_cofactor: too large");
  const auto& ring = m.a[0].ring();
  std::map<uint32_t, Poly<F>> memo;
  auto rec = [&](auto&& self, uint32_t mask) -> Poly<F> {
    if (mask == 0) return Poly<F>::constant(ring, ring->field.one());
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int row = n - __builtin_popcount(mask);
    Poly<F> acc = Poly<F>::zero(ring);
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const Poly<F>& e = m.at(row, j);
      if (!e.is_zero()) {
        Poly<F> sub = self(self, mask & ~(1u << j));
        Poly<F> contrib = e * sub;
        acc = (pos % 2 == 0) ? acc + contrib : acc - contrib;
      }
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (n >= 32 ? ~0u : (1u << n) - 1u));
}

template <class F>
bool all_entries_affine(const PolyMat<F>& m) {
  for (const auto& e : m.a)
    if (!e.is_zero() && e.total_degree() > 1) return false;
  return true;
}

/// Determinant dispatch: fraction-free elimination when every entry is
/// affine (the expensive intermediate swell stays polynomial there),
/// memoized cofactor expansion otherwise.
template <class F>
Poly<F> det(const PolyMat<F>& m) {
  return all_entries_affine(m) ? det_bareiss(m) : det_cofactor(m);
}

namespace detail {
inline bool next_subset(std::vector<int>& s, int n) {
  int k = static_cast<int>(s.size());
  for (int i = k - 1; i >= 0; --i) {
    if (s[i] < n - (k - i)) {
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}
}  // namespace detail

/// All k x k minors, plain determinants (no cofactor signs), enumerated in
/// lexicographic order of the row subset and, within it, of the column
/// subset: rows {0,1} cols {0,1} first, rows {0,1} cols {0,2} next, and so
/// on.
template <class F>
std::vector<Poly<F>> minors(const PolyMat<F>& m, int k) {
  if (k < 1 || k > m.rows || k > m.cols)
    throw std::invalid_argument("minors: bad size");
  std::vector<Poly<F>> out;
  std::vector<int> rs(k), cs0(k);
  for (int i = 0; i < k; ++i) rs[i] = cs0[i] = i;
  do {
    std::vector<int> cs = cs0;
    do {
      PolyMat<F> sub(k, k, m.a[0].ring());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
      out.push_back(det(sub));
    } while (detail::next_subset(cs, m.cols));
  } while (detail::next_subset(rs, m.rows));
  return out;
}

/// Entrywise evaluation at a point.
template <class F>
Mat<F> eval_at(const PolyMat<F>& m,
               const std::vector<typename F::Elem>& point) {
  if (m.a.empty()) return Mat<F>();
  const F& f = m.a[0].ring()->field;
  Mat<F> r(m.rows, m.cols, f.zero());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(i, j) = m.at(i, j).evaluate(point);
  return r;
}

}  // namespace pmx
}  // namespace quadweb
