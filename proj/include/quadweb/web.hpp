#pragma once

// A web of quadrics in P7 through the plane {x0 = ... = x4 = 0}: four
// symmetric 8x8 matrices whose lower-right 3x3 blocks vanish. This header
// owns the input validation, the block decomposition
//
//            [ U_i   K_i^T ]      U_i : 5x5,  K_i : 3x5
//      q_i = [ K_i    0    ]      (rows of K_i pair the three plane
//                                  coordinates x5, x6, x7 with x0..x4)
//
// and the symbolic matrices derived from it:
//
//   b_lin   3x5 over y0..y3      sum_i y_i K_i
//   c_lin   5x4 over x5,x6,x7    column i = K_i^T (x5,x6,x7)^T
//   a_lin   3x4 over x0..x4      column i = K_i xbar
//   a_ext   4x4 over x0..x4      row i = (xbar^T U_i xbar | column i of a_lin)
//   q_lin   8x8 over y0..y3      sum_i y_i q_i
//
// together with the quadric polynomials Q_i = x^T q_i x, the four cubics
// (maximal minors of a_lin), and the identities tying them together.

#include "quadweb/arith.hpp"
#include "quadweb/matrix.hpp"
#include "quadweb/poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace quadweb {

struct WebError : std::runtime_error {
  explicit WebError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The exact integer form of a web, as read from input files or produced by
/// the random sampler. Field reductions are derived from this.
struct WebInts {
  // entry[i][r][c] of the i-th matrix
  std::array<std::array<std::array<Integer, 8>, 8>, 4> e{};

  bool operator==(const WebInts& o) const { return e == o.e; }
};

/// Integer-level validation: symmetry, vanishing lower-right blocks, linear
/// independence over the rationals. Returns human-readable violations.
inline std::vector<std::string> validate_web_ints(const WebInts& w) {
  std::vector<std::string> bad;
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 8; ++r)
      for (int c = r + 1; c < 8; ++c)
        if (w.e[i][r][c] != w.e[i][c][r]) {
          bad.push_back("matrix " + std::to_string(i) +
                        " not symmetric at (" + std::to_string(r) + "," +
                        std::to_string(c) + ")");
          r = 8;  // one report per matrix
          break;
        }
  for (int i = 0; i < 4; ++i)
    for (int r = 5; r < 8; ++r)
      for (int c = 5; c < 8; ++c)
        if (w.e[i][r][c] != 0) {
          bad.push_back("plane not contained in Q" + std::to_string(i) +
                        " (entry (" + std::to_string(r) + "," +
                        std::to_string(c) + ") nonzero)");
          r = 8;
          break;
        }
  if (bad.empty()) {
    QQCtx qq;
    Mat<QQCtx> flat(4, 36, qq.zero());
    for (int i = 0; i < 4; ++i) {
      int k = 0;
      for (int r = 0; r < 8; ++r)
        for (int c = r; c < 8; ++c) flat.at(i, k++) = Rational(w.e[i][r][c]);
    }
    if (mtx::rank(qq, flat) != 4)
      bad.push_back("the four matrices are linearly dependent");
  }
  return bad;
}

/// Random integer web with entries in [-bound, bound], symmetric, plane
/// contained; resamples the rare linearly dependent draw.
inline WebInts sample_web_ints(Rng& rng, long bound = 4) {
  if (bound < 1) throw std::invalid_argument("web sample: bound must be >= 1");
  for (;;) {
    WebInts w;
    for (int i = 0; i < 4; ++i)
      for (int r = 0; r < 8; ++r)
        for (int c = r; c < 8; ++c) {
          if (r >= 5 && c >= 5) continue;  // keep the plane inside
          Integer v =
              Integer(rng.below(2 * static_cast<uint64_t>(bound) + 1)) - bound;
          w.e[i][r][c] = v;
          w.e[i][c][r] = v;
        }
    if (validate_web_ints(w).empty()) return w;
  }
}

/// sum_i y_i q_i evaluated at a point y with coordinates in any context.
template <class G>
Mat<G> q_at(const WebInts& w, const G& g,
            const std::vector<typename G::Elem>& y) {
  Mat<G> m(8, 8, g.zero());
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        m.at(r, c) =
            g.add(m.at(r, c), g.mul(y[i], g.from_integer(w.e[i][r][c])));
  return m;
}

/// sum_i y_i K_i (the 3x5 coupling blocks) at a point y.
template <class G>
Mat<G> coupling_at(const WebInts& w, const G& g,
                   const std::vector<typename G::Elem>& y) {
  Mat<G> m(3, 5, g.zero());
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 5; ++c)
        m.at(r, c) =
            g.add(m.at(r, c), g.mul(y[i], g.from_integer(w.e[i][5 + r][c])));
  return m;
}

template <class F>
struct DerivedMats {
  RingPtr<F> yring;       // y0..y3
  RingPtr<F> plane_ring;  // x5, x6, x7
  RingPtr<F> xbar_ring;   // x0..x4
  RingPtr<F> xring;       // x0..x7
  PolyMat<F> b_lin;       // 3x5, linear in y
  PolyMat<F> c_lin;       // 5x4, linear in x5..x7
  PolyMat<F> a_lin;       // 3x4, linear in x0..x4
  PolyMat<F> a_ext;       // 4x4, first column quadratic
  PolyMat<F> q_lin;       // 8x8, linear in y
  std::array<Poly<F>, 4> quadrics;  // Q_i = x^T q_i x in x0..x7
  std::vector<Poly<F>> cubics;      // maximal minors of a_lin, column-i-deleted
};

template <class F>
struct Web {
  F field;
  std::array<Mat<F>, 4> q;  // 8x8 symmetric, plane block zero

  static Web validated(const F& f, std::array<Mat<F>, 4> mats) {
    for (int i = 0; i < 4; ++i) {
      if (mats[i].rows != 8 || mats[i].cols != 8)
        throw WebError("matrix " + std::to_string(i) + " is not 8x8");
      for (int r = 0; r < 8; ++r)
        for (int c = r + 1; c < 8; ++c)
          if (!f.eq(mats[i].at(r, c), mats[i].at(c, r)))
            throw WebError("matrix " + std::to_string(i) +
                           " not symmetric at (" + std::to_string(r) + "," +
                           std::to_string(c) + ")");
      for (int r = 5; r < 8; ++r)
        for (int c = 5; c < 8; ++c)
          if (!f.is_zero(mats[i].at(r, c)))
            throw WebError("plane not contained in Q" + std::to_string(i) +
                           " (entry (" + std::to_string(r) + "," +
                           std::to_string(c) + ") nonzero)");
    }
    Mat<F> flat(4, 36, f.zero());
    for (int i = 0; i < 4; ++i) {
      int k = 0;
      for (int r = 0; r < 8; ++r)
        for (int c = r; c < 8; ++c) flat.at(i, k++) = mats[i].at(r, c);
    }
    if (mtx::rank(f, flat) != 4)
      throw WebError("the four matrices are linearly dependent");
    return Web{f, std::move(mats)};
  }

  static Web from_ints(const F& f, const WebInts& w) {
    std::array<Mat<F>, 4> mats{Mat<F>(8, 8, f.zero()), Mat<F>(8, 8, f.zero()),
                               Mat<F>(8, 8, f.zero()), Mat<F>(8, 8, f.zero())};
    for (int i = 0; i < 4; ++i)
      for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
          mats[i].at(r, c) = f.from_integer(w.e[i][r][c]);
    return validated(f, std::move(mats));
  }

  /// Upper-left 5x5 block of q_i.
  Mat<F> upper_block(int i) const {
    Mat<F> m(5, 5, field.zero());
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c) m.at(r, c) = q[i].at(r, c);
    return m;
  }

  /// The 3x5 coupling block of q_i (rows x5, x6, x7 against columns x0..x4).
  Mat<F> coupling_block(int i) const {
    Mat<F> m(3, 5, field.zero());
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 5; ++c) m.at(r, c) = q[i].at(5 + r, c);
    return m;
  }

  DerivedMats<F> derive() const {
    DerivedMats<F> d;
    d.yring = make_ring(4, MonomialOrder::degrevlex(4), field,
                        {"y0", "y1", "y2", "y3"});
    d.plane_ring = make_ring(3, MonomialOrder::degrevlex(3), field,
                             {"x5", "x6", "x7"});
    d.xbar_ring = make_ring(5, MonomialOrder::degrevlex(5), field,
                            {"x0", "x1", "x2", "x3", "x4"});
    d.xring = make_ring(8, MonomialOrder::degrevlex(8), field,
                        {"x0", "x1", "x2", "x3", "x4", "x5", "x6", "x7"});
    using P = Poly<F>;

    d.b_lin = PolyMat<F>(3, 5, d.yring);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 5; ++c) {
        P acc = P::zero(d.yring);
        for (int i = 0; i < 4; ++i)
          acc = acc + P::variable(d.yring, i).scale(q[i].at(5 + r, c));
        d.b_lin.at(r, c) = acc;
      }

    d.c_lin = PolyMat<F>(5, 4, d.plane_ring);
    for (int r = 0; r < 5; ++r)
      for (int i = 0; i < 4; ++i) {
        P acc = P::zero(d.plane_ring);
        for (int k = 0; k < 3; ++k)
          acc = acc + P::variable(d.plane_ring, k).scale(q[i].at(5 + k, r));
        d.c_lin.at(r, i) = acc;
      }

    d.a_lin = PolyMat<F>(3, 4, d.xbar_ring);
    for (int r = 0; r < 3; ++r)
      for (int i = 0; i < 4; ++i) {
        P acc = P::zero(d.xbar_ring);
        for (int c = 0; c < 5; ++c)
          acc = acc + P::variable(d.xbar_ring, c).scale(q[i].at(5 + r, c));
        d.a_lin.at(r, i) = acc;
      }

    d.a_ext = PolyMat<F>(4, 4, d.xbar_ring);
    for (int i = 0; i < 4; ++i) {
      d.a_ext.at(i, 0) = quadratic_form(d.xbar_ring, upper_block(i));
      for (int r = 0; r < 3; ++r) d.a_ext.at(i, 1 + r) = d.a_lin.at(r, i);
    }

    d.q_lin = PolyMat<F>(8, 8, d.yring);
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) {
        P acc = P::zero(d.yring);
        for (int i = 0; i < 4; ++i)
          acc = acc + P::variable(d.yring, i).scale(q[i].at(r, c));
        d.q_lin.at(r, c) = acc;
      }

    for (int i = 0; i < 4; ++i)
      d.quadrics[i] = quadratic_form(d.xring, q[i]);

    // minors() walks column subsets in lexicographic order, so a 3x4 matrix
    // yields [delete col 3, delete col 2, delete col 1, delete col 0];
    // reverse to index the cubics by the deleted column.
    d.cubics = pmx::minors(d.a_lin, 3);
    std::reverse(d.cubics.begin(), d.cubics.end());
    return d;
  }

  /// x^T m x as a polynomial in the first m.rows variables of ring.
  Poly<F> quadratic_form(const RingPtr<F>& ring, const Mat<F>& m) const {
    using P = Poly<F>;
    P acc = P::zero(ring);
    typename F::Elem two = field.from_int(2);
    for (int r = 0; r < m.rows; ++r) {
      if (!field.is_zero(m.at(r, r)))
        acc = acc + P::term(ring, Monomial::var(r, 2), m.at(r, r));
      for (int c = r + 1; c < m.cols; ++c) {
        if (field.is_zero(m.at(r, c))) continue;
        acc = acc + P::term(ring, Monomial::var(r).mul(Monomial::var(c)),
                            field.mul(two, m.at(r, c)));
      }
    }
    return acc;
  }
};

// ---------------------------------------------------------------------------
// Identity checks. All three families must hold coefficient-wise for every
// valid web; they pin the sign and transpose conventions of the derived
// matrices against the original input.

/// a_lin(xbar) * y = b_lin(y) * xbar, three components in the 9 variables
/// x0..x4, y0..y3.
template <class F>
bool check_coupling_identity(const Web<F>& w, const DerivedMats<F>& d) {
  using P = Poly<F>;
  auto r9 = make_ring(9, MonomialOrder::degrevlex(9), w.field,
                      {"x0", "x1", "x2", "x3", "x4", "y0", "y1", "y2", "y3"});
  std::vector<P> yimg;
  for (int j = 0; j < 4; ++j) yimg.push_back(P::variable(r9, 5 + j));
  for (int r = 0; r < 3; ++r) {
    P lhs = P::zero(r9);
    for (int i = 0; i < 4; ++i)
      lhs = lhs + d.a_lin.at(r, i).extend_vars(r9) * P::variable(r9, 5 + i);
    P rhs = P::zero(r9);
    for (int c = 0; c < 5; ++c)
      rhs = rhs + d.b_lin.at(r, c).substitute(yimg, r9) * P::variable(r9, c);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

/// c_lin(x5,x6,x7) * y = b_lin(y)^T * (x5,x6,x7)^T, five components in the
/// 7 variables x5, x6, x7, y0..y3.
template <class F>
bool check_plane_identity(const Web<F>& w, const DerivedMats<F>& d) {
  using P = Poly<F>;
  auto r7 = make_ring(7, MonomialOrder::degrevlex(7), w.field,
                      {"x5", "x6", "x7", "y0", "y1", "y2", "y3"});
  std::vector<P> yimg;
  for (int j = 0; j < 4; ++j) yimg.push_back(P::variable(r7, 3 + j));
  for (int r = 0; r < 5; ++r) {
    P lhs = P::zero(r7);
    for (int i = 0; i < 4; ++i)
      lhs = lhs + d.c_lin.at(r, i).extend_vars(r7) * P::variable(r7, 3 + i);
    P rhs = P::zero(r7);
    for (int k = 0; k < 3; ++k)
      rhs = rhs + d.b_lin.at(k, r).substitute(yimg, r7) * P::variable(r7, k);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

/// Block restriction of each quadric: Q_i equals the upper-block form plus
/// twice the coupling cross terms. Linear in y, so checking the four basis
/// members checks the whole pencil identity.
template <class F>
bool check_restriction_identity(const Web<F>& w, const DerivedMats<F>& d) {
  using P = Poly<F>;
  typename F::Elem two = w.field.from_int(2);
  for (int i = 0; i < 4; ++i) {
    P rhs = w.quadratic_form(d.xring, w.upper_block(i));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 5; ++c) {
        typename F::Elem coef = w.field.mul(two, w.q[i].at(5 + r, c));
        if (w.field.is_zero(coef)) continue;
        rhs = rhs + P::term(d.xring,
                            Monomial::var(5 + r).mul(Monomial::var(c)), coef);
      }
    if (!(d.quadrics[i] == rhs)) return false;
  }
  return true;
}

template <class F>
bool check_all_identities(const Web<F>& w, const DerivedMats<F>& d) {
  return check_coupling_identity(w, d) && check_plane_identity(w, d) &&
         check_restriction_identity(w, d);
}

}  // namespace quadweb
