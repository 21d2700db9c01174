#pragma once

// Integer bookkeeping that needs no field arithmetic: the enumeration of
// curve classes contracted by the fibration, cubes of divisor combinations
// from a four-entry intersection table, and the Euler-characteristic budget.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadweb {

// ---------------------------------------------------------------------------
// Contracted curve classes. A contracted class is written against a basis of
// ten exceptional classes with integer multiplicities m_1..m_10 and the 46
// even-cover classes with multiplicities n_j in {0,1}; its plane-image degree
// d ties them by
//
//     sum m_i   = 4d - 1,       sum m_i^2 = d^2 + d + 1,
//     sum n_j   = 4 - d   (so 0 <= 4 - d <= 46 bounds d),
//
// and every solution must also satisfy the arithmetic-genus relation
//     d^2 - 3d - sum(m_i^2 - m_i) = -2.

struct ContractedClass {
  int degree = 0;          // d
  std::vector<int> mults;  // the nonzero m_i, descending (10 slots total)
  int lines_met = 0;       // sum of the n_j
  char fiber_case = '?';   // matching fiber type: 4 lines met -> a, 3 -> b, ...
  std::string note;
};

namespace detail {

inline void contracted_search(int slots, int sum, int sumsq, int maxv,
                              int bound, std::vector<int>& cur,
                              std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    if (sum == 0 && sumsq == 0) out.push_back(cur);
    return;
  }
  // Cauchy-Schwarz: `sum` over `slots` entries needs sumsq >= sum^2/slots.
  if (sumsq < 0) return;
  if (static_cast<long>(sum) * sum > static_cast<long>(sumsq) * slots) return;
  for (int v = maxv; v >= -bound; --v) {
    if (v * v > sumsq) continue;
    cur.push_back(v);
    contracted_search(slots - 1, sum - v, sumsq - v * v, v, bound, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All solutions of the contracted-class system, exhaustively, for
/// 0 <= d <= dmax (the n-budget alone forces d <= 4). Multisets are listed
/// once, entries descending.
inline std::vector<ContractedClass> enumerate_contracted_classes(
    int dmax = 4) {
  std::vector<ContractedClass> out;
  for (int d = 0; d <= dmax; ++d) {
    int target_sum = 4 * d - 1;
    int target_sq = d * d + d + 1;
    if (4 - d < 0 || 4 - d > 46) continue;
    int cap = 0;
    while ((cap + 1) * (cap + 1) <= target_sq) ++cap;
    std::vector<int> cur;
    std::vector<std::vector<int>> sols;
    detail::contracted_search(10, target_sum, target_sq, cap, cap, cur, sols);
    for (auto& m : sols) {
      // genus relation, redundant given the two equations above
      int sq = 0, lin = 0;
      for (int v : m) {
        sq += v * v;
        lin += v;
      }
      if (d * d - 3 * d - (sq - lin) != -2)
        throw std::logic_error("contracted classes: genus relation violated");
      std::erase(m, 0);
      ContractedClass c;
      c.degree = d;
      c.mults = std::move(m);
      c.lines_met = 4 - d;
      c.fiber_case = static_cast<char>('a' + (4 - c.lines_met));
      if (d == 3)
        c.note =
            "not realized by a line: the ideal of the ten points contains "
            "no cubic; this class appears as the conic in fibers of case d";
      out.push_back(std::move(c));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Intersection numbers: cube of a*D + b*E from the table of monomial cubes.

struct CubeTable {
  long d3, d2e, de2, e3;  // D^3, D^2 E, D E^2, E^3
};

inline long combination_cube(long a, long b, const CubeTable& t) {
  return a * a * a * t.d3 + 3 * a * a * b * t.d2e + 3 * a * b * b * t.de2 +
         b * b * b * t.e3;
}

/// The two divisor tables used downstream: hyperplane vs exceptional divisor
/// on the blown-up base-locus model, and on the quintic model.
inline constexpr CubeTable kBaseLocusTable{16, 1, -3, -1};
inline constexpr CubeTable kQuinticTable{5, 6, -2, -47};

// ---------------------------------------------------------------------------
// Euler budget. The constants below are inputs taken from the source
// geometry, not computed here: Hodge numbers (2, 56) of the blown-up base
// locus with Euler number -108, and the nodal-quintic count -200 + (number
// of nodes).

struct EulerConstants {
  int h11 = 2;
  int h12 = 56;
  int euler_blowup = -108;
  int quintic_base = -200;
};

struct EulerBudget {
  bool hodge_consistent = false;  // e = 2(h11 - h12)
  bool quintic_identity = false;  // e - 46 = base + 46
  long lhs = 0, rhs = 0;
};

inline EulerBudget euler_budget(const EulerConstants& c = EulerConstants{}) {
  EulerBudget b;
  b.hodge_consistent = (c.euler_blowup == 2 * (c.h11 - c.h12));
  b.lhs = c.euler_blowup - 46;
  b.rhs = c.quintic_base + 46;
  b.quintic_identity = (b.lhs == b.rhs);
  return b;
}

}  // namespace quadweb
