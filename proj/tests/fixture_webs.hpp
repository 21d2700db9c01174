#pragma once

// The two reference webs used across the test suite, as exact integer data.
// web_line_of_four(): ten isolated singular points on the plane, but four of
// them lie on the line {x5 = 0} — the no-four-on-a-line check must fail and
// produce that line together with the binary quartic
//   19 x6^4 + 102 x6^3 x7 + 189 x6^2 x7^2 + 137 x6 x7^3 + 27 x7^4.
// web_rank5_member(): satisfies every assumption; its first matrix has rank 5
// (rows 0, 1, 5 vanish), so the point (1:0:0:0) is a triple point of the
// discriminant octic.

#include "quadweb/web.hpp"

namespace quadweb::testing {

inline WebInts from_rows(const long (&m)[4][8][8]) {
  WebInts w;
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c) w.e[i][r][c] = m[i][r][c];
  return w;
}

inline WebInts web_line_of_four() {
  static const long m[4][8][8] = {
      {{0, -4, 4, 0, 1, -2, 0, 1},
       {-4, 4, 4, 3, -3, 2, 2, -2},
       {4, 4, 4, 1, -1, 0, -1, 0},
       {0, 3, 1, -2, -1, -2, -1, 2},
       {1, -3, -1, -1, 2, 0, 0, 0},
       {-2, 2, 0, -2, 0, 0, 0, 0},
       {0, 2, -1, -1, 0, 0, 0, 0},
       {1, -2, 0, 2, 0, 0, 0, 0}},
      {{-2, 2, -1, -3, 0, 0, 0, -2},
       {2, 0, -4, 1, 1, 4, -3, 2},
       {-1, -4, 2, 3, 1, 1, 0, -1},
       {-3, 1, 3, -2, -3, 1, -3, 1},
       {0, 1, 1, -3, 2, -2, 0, 0},
       {0, 4, 1, 1, -2, 0, 0, 0},
       {0, -3, 0, -3, 0, 0, 0, 0},
       {-2, 2, -1, 1, 0, 0, 0, 0}},
      {{-4, 1, 1, 1, -2, -1, -1, -1},
       {1, 4, -1, -1, -3, -3, 0, 1},
       {1, -1, 2, -4, 0, 2, 2, 1},
       {1, -1, -4, 2, -1, -1, 1, 1},
       {-2, -3, 0, -1, -4, -2, 0, 0},
       {-1, -3, 2, -1, -2, 0, 0, 0},
       {-1, 0, 2, 1, 0, 0, 0, 0},
       {-1, 1, 1, 1, 0, 0, 0, 0}},
      {{-4, -1, -4, 3, -1, 4, 1, 0},
       {-1, 4, -4, -3, 0, 3, -1, 0},
       {-4, -4, 0, 1, 0, 1, 1, 1},
       {3, -3, 1, 2, 2, 1, 0, -2},
       {-1, 0, 0, 2, 4, 3, 0, 0},
       {4, 3, 1, 1, 3, 0, 0, 0},
       {1, -1, 1, 0, 0, 0, 0, 0},
       {0, 0, 1, -2, 0, 0, 0, 0}}};
  return from_rows(m);
}

inline WebInts web_rank5_member() {
  static const long m[4][8][8] = {
      {{0, 0, 0, 0, 0, 0, 0, 0},
       {0, 0, 0, 0, 0, 0, 0, 0},
       {0, 0, 6, 0, -4, 0, -2, 1},
       {0, 0, 0, 4, 3, 0, 2, -4},
       {0, 0, -4, 3, 8, 0, -5, 0},
       {0, 0, 0, 0, 0, 0, 0, 0},
       {0, 0, -2, 2, -5, 0, 0, 0},
       {0, 0, 1, -4, 0, 0, 0, 0}},
      {{-4, -4, 2, -1, 0, -1, -1, -3},
       {-4, 2, 0, 0, 4, -2, 0, -1},
       {2, 0, 0, -1, 2, -2, 4, 2},
       {-1, 0, -1, 2, 3, -1, 3, -2},
       {0, 4, 2, 3, -4, -2, 0, 1},
       {-1, -2, -2, -1, -2, 0, 0, 0},
       {-1, 0, 4, 3, 0, 0, 0, 0},
       {-3, -1, 2, -2, 1, 0, 0, 0}},
      {{4, -3, -3, -2, 1, -3, -3, -1},
       {-3, -2, -3, -4, 1, 4, 3, 1},
       {-3, -3, 4, 1, 0, 1, 1, 1},
       {-2, -4, 1, 2, -2, 0, 1, 4},
       {1, 1, 0, -2, 4, -1, 0, -1},
       {-3, 4, 1, 0, -1, 0, 0, 0},
       {-3, 3, 1, 1, 0, 0, 0, 0},
       {-1, 1, 1, 4, -1, 0, 0, 0}},
      {{4, -1, 2, 2, -2, -1, -2, 0},
       {-1, 2, 2, -3, -1, -4, -2, 4},
       {2, 2, -2, -1, 1, 3, 2, -1},
       {2, -3, -1, -2, 0, 1, 3, -2},
       {-2, -1, 1, 0, -4, 4, 1, -1},
       {-1, -4, 3, 1, 4, 0, 0, 0},
       {-2, -2, 2, 3, 1, 0, 0, 0},
       {0, 4, -1, -2, -1, 0, 0, 0}}};
  return from_rows(m);
}

}  // namespace quadweb::testing
