#pragma once

// Iteration over the points of a zero-dimensional projective scheme defined
// over F_p, one Frobenius orbit at a time. Each orbit is handed to the
// visitor as a branch of a split quotient ring F_p[t]/(m(t)) together with
// the point's homogeneous coordinates as ring elements (the chart coordinate
// is 1, coordinates before it are 0). Conjugate points answer every
// zero/nonzero probe identically, so ranks, kernels and containment tests
// computed in a branch hold verbatim for each of its deg(m) geometric
// points.
//
// Visitor contract: fn(ctx, coords, mass) may be re-invoked on refined
// branches after a SplitRequest. An invocation that RETURNS NORMALLY is a
// committed leaf (splits only propagate out of probes inside fn), so any
// caller-side accumulation must happen at the very end of fn and nowhere
// earlier.

#include "quadweb/extension.hpp"
#include "quadweb/zerodim.hpp"

#include <functional>
#include <optional>

namespace quadweb::orb {

enum class ScanStatus { Ok, Timeout, ShapeFailure, PositiveDimensional };

struct OrbitScan {
  ScanStatus status = ScanStatus::Ok;
  int points = 0;    // geometric points visited (sum of branch masses)
  int branches = 0;  // leaves visited; a leaf covers one or more orbits
};

/// Visit every point of V(homog) in projective space, partitioned by charts
/// (first nonzero coordinate). Within a chart the visitor runs over a split
/// quotient ring; branches refine exactly as far as the visitor's probes
/// distinguish points, so one leaf may cover several Frobenius orbits whose
/// points the probes never separated (its assertions then hold for all of
/// them). fn receives (SplitCtx&, coords as n ctx elements, branch mass).
template <class Fn>
OrbitScan for_each_point_orbit(const RingPtr<FpCtx>& ring,
                               const std::vector<Poly<FpCtx>>& homog,
                               const Deadline& dl, Rng& rng, Fn&& fn) {
  OrbitScan scan;
  const FpCtx& fp = ring->field;
  auto charts = zd::project_charts(ring, homog, dl, /*want_radical=*/true);
  for (const auto& ch : charts) {
    if (ch.state == zd::ChartState::Timeout) {
      scan.status = ScanStatus::Timeout;
      return scan;
    }
    if (ch.state == zd::ChartState::PositiveDimensional) {
      scan.status = ScanStatus::PositiveDimensional;
      return scan;
    }
    if (ch.state == zd::ChartState::Empty || ch.radical_length == 0) continue;
    zd::Quotient<FpCtx> qrad = zd::make_quotient(ch.ring, ch.radical_gb);
    auto shape = zd::shape_position(qrad, rng);
    if (!shape) {
      scan.status = ScanStatus::ShapeFailure;
      return scan;
    }
    split_cases(fp, shape->eliminant, [&](SplitCtx& ctx) {
      std::vector<SplitCtx::Elem> coords(static_cast<size_t>(ring->n));
      for (int j = 0; j < ring->n; ++j) {
        if (j == ch.index)
          coords[j] = ctx.one();
        else
          coords[j] = ctx.reduce_poly(shape->coord[j - (j > ch.index ? 1 : 0)]);
      }
      int mass = ctx.core.degree();
      fn(ctx, coords, mass);
      // normal return == committed leaf
      scan.points += mass;
      scan.branches += 1;
    });
  }
  return scan;
}

/// A uniformly random linear form (may be refused and resampled by callers
/// that need nonzero specific coefficients).
inline Poly<FpCtx> random_linear_form(const RingPtr<FpCtx>& ring, Rng& rng) {
  const FpCtx& f = ring->field;
  Poly<FpCtx> acc = Poly<FpCtx>::zero(ring);
  for (int i = 0; i < ring->n; ++i)
    acc = acc + Poly<FpCtx>::variable(ring, i).scale(f.sample(rng));
  return acc;
}

}  // namespace quadweb::orb
