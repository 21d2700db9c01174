// Zero-dimensional solver: quotient bases, multiplication operators,
// radicals, multiplicity profiles, shape position, projective charts.

#include "quadweb/zerodim.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace quadweb;

namespace {

using P = Poly<FpCtx>;

RingPtr<FpCtx> affine2(const FpCtx& f) {
  return make_ring(2, MonomialOrder::degrevlex(2), f, {"x", "y"});
}

// Three points (1,5), (2,7), (3,11) planted in shape position by hand.
std::vector<P> three_points(const RingPtr<FpCtx>& r) {
  const FpCtx& f = r->field;
  P x = P::variable(r, 0), y = P::variable(r, 1);
  auto c = [&](long v) { return P::constant(r, f.from_int(v)); };
  P g = (x - c(1)) * (x - c(2)) * (x - c(3));
  // Lagrange through (1,5), (2,7), (3,11): y = x^2 - x + 5
  P h = x * x - x + c(5);
  return {g, y - h};
}

TEST(Quotient, StaircaseAndLength) {
  FpCtx f(10007);
  auto r = affine2(f);
  auto g = gb::buchberger(three_points(r));
  ASSERT_EQ(g.status, GBStatus::Done);
  auto q = zd::make_quotient(r, g);
  EXPECT_EQ(q.length(), 3);
  ASSERT_FALSE(q.basis.empty());
  EXPECT_TRUE(q.basis[0].is_one());
  // coords of a basis monomial is the corresponding unit vector
  auto v = q.coords(P::term(r, q.basis[1], f.one()));
  EXPECT_TRUE(f.is_zero(v[0]));
  EXPECT_TRUE(f.eq(v[1], f.one()));
}

TEST(Quotient, UnitIdealIsEmptyScheme) {
  FpCtx f(10007);
  auto r = affine2(f);
  std::vector<P> gens = {P::constant(r, f.from_int(7))};
  auto q = zd::make_quotient(r, gb::buchberger(gens));
  EXPECT_EQ(q.length(), 0);
}

TEST(Quotient, RejectsPositiveDimension) {
  FpCtx f(10007);
  auto r = affine2(f);
  std::vector<P> gens = {P::variable(r, 0)};  // a line in the plane
  EXPECT_THROW(zd::make_quotient(r, gb::buchberger(gens)),
               std::invalid_argument);
}

TEST(MultMatrix, NilpotentShiftOnTruncatedPowers) {
  FpCtx f(10007);
  auto r = make_ring(1, MonomialOrder::degrevlex(1), f, {"t"});
  P t = P::variable(r, 0);
  std::vector<P> gens = {t * t * t};
  auto q = zd::make_quotient(r, gb::buchberger(gens));
  ASSERT_EQ(q.length(), 3);
  Mat<FpCtx> m = zd::mult_matrix(q, t);
  Mat<FpCtx> m3 = mtx::mul(f, mtx::mul(f, m, m), m);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_TRUE(f.is_zero(m3.at(i, j)));
  UPoly<FpCtx> chi = mtx::charpoly(f, m);
  EXPECT_EQ(up::deg(chi), 3);
  EXPECT_TRUE(f.is_zero(chi[0]));
  EXPECT_TRUE(f.is_zero(chi[1]));
  EXPECT_TRUE(f.is_zero(chi[2]));
}

TEST(MinPoly, PerVariableEliminants) {
  FpCtx f(10007);
  auto r = affine2(f);
  auto q = zd::make_quotient(r, gb::buchberger(three_points(r)));
  UPoly<FpCtx> mx = zd::minpoly_of_var(q, 0);
  // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
  UPoly<FpCtx> expect_x = {f.from_int(-6), f.from_int(11), f.from_int(-6),
                           f.one()};
  EXPECT_EQ(mx, expect_x);
  UPoly<FpCtx> my = zd::minpoly_of_var(q, 1);
  // (t-5)(t-7)(t-11) = t^3 - 23t^2 + 167t - 385
  UPoly<FpCtx> expect_y = {f.from_int(-385), f.from_int(167), f.from_int(-23),
                           f.one()};
  EXPECT_EQ(my, expect_y);
}

TEST(PlugVariable, BuildsUnivariateImage) {
  FpCtx f(10007);
  auto r = affine2(f);
  UPoly<FpCtx> g = {f.one(), f.from_int(3), f.one()};  // t^2 + 3t + 1
  P img = zd::plug_variable(r, g, 1);
  P y = P::variable(r, 1);
  EXPECT_EQ(img, y * y + y.scale(f.from_int(3)) + P::constant(r, f.one()));
}

TEST(Radical, FatPointCollapses) {
  FpCtx f(10007);
  auto r = affine2(f);
  P x = P::variable(r, 0), y = P::variable(r, 1);
  std::vector<P> gens = {x * x, x * y, y * y};
  auto q = zd::make_quotient(r, gb::buchberger(gens));
  EXPECT_EQ(q.length(), 3);
  auto rad = zd::radical_zero_dim(r, gens);
  ASSERT_TRUE(rad.has_value());
  auto qr = zd::make_quotient(r, *rad);
  EXPECT_EQ(qr.length(), 1);
}

TEST(Radical, MixedMultiplicitiesAndIdempotence) {
  FpCtx f(10007);
  auto r = affine2(f);
  P x = P::variable(r, 0), y = P::variable(r, 1);
  auto c = [&](long v) { return P::constant(r, f.from_int(v)); };
  // double point at x=0 plus simple point at x=1, all on the line y=0
  std::vector<P> gens = {x * x * (x - c(1)), y};
  EXPECT_EQ(zd::make_quotient(r, gb::buchberger(gens)).length(), 3);
  auto rad = zd::radical_zero_dim(r, gens);
  ASSERT_TRUE(rad.has_value());
  EXPECT_EQ(zd::make_quotient(r, *rad).length(), 2);
  // applying the radical again changes nothing
  auto rad2 = zd::radical_zero_dim(r, rad->basis);
  ASSERT_TRUE(rad2.has_value());
  EXPECT_EQ(rad->basis, rad2->basis);
}

TEST(Radical, TimeoutPropagates) {
  FpCtx f(10007);
  auto r = affine2(f);
  P x = P::variable(r, 0), y = P::variable(r, 1);
  std::vector<P> gens = {x * x, y * y};
  auto rad = zd::radical_zero_dim(r, gens, Deadline::after_seconds(0.0));
  EXPECT_FALSE(rad.has_value());
}

TEST(Profile, MixedMultiplicities) {
  FpCtx f(1000003);
  auto r = affine2(f);
  P x = P::variable(r, 0), y = P::variable(r, 1);
  auto c = [&](long v) { return P::constant(r, f.from_int(v)); };
  std::vector<P> gens = {x * x * (x - c(1)), y};
  auto q = zd::make_quotient(r, gb::buchberger(gens));
  Rng rng(20260822);
  auto prof = zd::multiplicity_profile(q, /*distinct=*/2, rng);
  ASSERT_TRUE(prof.has_value());
  EXPECT_EQ(prof->total_length, 3);
  std::vector<std::pair<int, int>> want = {{1, 1}, {2, 1}};
  EXPECT_EQ(prof->by_multiplicity, want);
}

TEST(Profile, FatPointAndSimplePoints) {
  FpCtx f(1000003);
  auto r = affine2(f);
  P x = P::variable(r, 0), y = P::variable(r, 1);
  auto c = [&](long v) { return P::constant(r, f.from_int(v)); };
  // (x^2, y^2) at the origin meet the reduced points (1,0) and (2,0)
  std::vector<P> gens = {x * x * (x - c(1)) * (x - c(2)), x * x * y, y * y};
  auto g = gb::buchberger(gens);
  ASSERT_EQ(g.status, GBStatus::Done);
  auto q = zd::make_quotient(r, g);
  ASSERT_EQ(q.length(), 6);
  auto rad = zd::radical_zero_dim(r, gens);
  ASSERT_TRUE(rad.has_value());
  int distinct = zd::make_quotient(r, *rad).length();
  ASSERT_EQ(distinct, 3);
  Rng rng(7);
  auto prof = zd::multiplicity_profile(q, distinct, rng);
  ASSERT_TRUE(prof.has_value());
  std::vector<std::pair<int, int>> want = {{1, 2}, {4, 1}};
  EXPECT_EQ(prof->by_multiplicity, want);
}

TEST(Shape, RecoversPlantedPoints) {
  FpCtx f(1000003);
  auto r = affine2(f);
  auto gens = three_points(r);
  auto rad = zd::radical_zero_dim(r, gens);
  ASSERT_TRUE(rad.has_value());
  auto q = zd::make_quotient(r, *rad);
  Rng rng(42);
  auto s = zd::shape_position(q, rng);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(up::deg(s->eliminant), 3);
  auto pts = zd::rational_points(*s, f, rng);
  ASSERT_EQ(pts.size(), 3u);
  std::set<std::pair<uint64_t, uint64_t>> got;
  for (auto& p : pts) {
    got.insert({p[0], p[1]});
    for (auto& gpoly : gens)
      EXPECT_TRUE(f.is_zero(gpoly.evaluate(p)));
  }
  std::set<std::pair<uint64_t, uint64_t>> want = {
      {1, 5}, {2, 7}, {3, 11}};
  EXPECT_EQ(got, want);
}

TEST(Shape, IrreducibleOrbitHasNoRationalPoints) {
  FpCtx f(10007);
  auto r = make_ring(1, MonomialOrder::degrevlex(1), f, {"t"});
  P t = P::variable(r, 0);
  // find a quadratic non-residue and plant t^2 = n
  uint64_t n = 2;
  while (f.eq(f.pow(f.from_int(static_cast<long>(n)), (f.p - 1) / 2), f.one()))
    ++n;
  std::vector<P> gens = {t * t - P::constant(r, f.from_int(static_cast<long>(n)))};
  auto q = zd::make_quotient(r, gb::buchberger(gens));
  Rng rng(11);
  auto s = zd::shape_position(q, rng);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(zd::rational_points(*s, f, rng).empty());
  std::vector<int> degs = zd::orbit_degrees(*s, f, rng);
  EXPECT_EQ(degs, std::vector<int>({2}));
}

TEST(Charts, FourReducedPointsPartitioned) {
  FpCtx f(10007);
  auto r = make_ring(3, MonomialOrder::degrevlex(3), f, {"x", "y", "z"});
  P x = P::variable(r, 0), y = P::variable(r, 1), z = P::variable(r, 2);
  // two split conics meeting in (0:1:0), (0:1:1), (1:0:1), (1:0:0)
  std::vector<P> gens = {x * y, (x - z) * (y - z)};
  auto charts = zd::project_charts(r, gens);
  ASSERT_EQ(charts.size(), 3u);
  EXPECT_EQ(charts[0].state, zd::ChartState::Finite);
  EXPECT_EQ(charts[0].length, 2);
  EXPECT_EQ(charts[0].radical_length, 2);
  EXPECT_EQ(charts[1].state, zd::ChartState::Finite);
  EXPECT_EQ(charts[1].length, 2);
  EXPECT_EQ(charts[2].state, zd::ChartState::Empty);
  int total = 0;
  for (auto& ch : charts) total += ch.length;
  EXPECT_EQ(total, 4);
  auto hilbert = zd::projective_length(r, gens);
  ASSERT_TRUE(hilbert.has_value());
  EXPECT_EQ(*hilbert, 4);
}

TEST(Charts, NonReducedPointSeesRadicalDrop) {
  FpCtx f(10007);
  auto r = make_ring(3, MonomialOrder::degrevlex(3), f, {"x", "y", "z"});
  P x = P::variable(r, 0), y = P::variable(r, 1);
  std::vector<P> gens = {x * x, y};  // double structure at (0:0:1)
  auto charts = zd::project_charts(r, gens);
  EXPECT_EQ(charts[0].state, zd::ChartState::Empty);
  EXPECT_EQ(charts[1].state, zd::ChartState::Empty);
  EXPECT_EQ(charts[2].state, zd::ChartState::Finite);
  EXPECT_EQ(charts[2].length, 2);
  EXPECT_EQ(charts[2].radical_length, 1);
  auto hilbert = zd::projective_length(r, gens);
  ASSERT_TRUE(hilbert.has_value());
  EXPECT_EQ(*hilbert, 2);
}

TEST(Charts, PositiveDimensionalIsFlagged) {
  FpCtx f(10007);
  auto r = make_ring(3, MonomialOrder::degrevlex(3), f, {"x", "y", "z"});
  P x = P::variable(r, 0);
  std::vector<P> gens = {x};  // a line in the plane
  auto charts = zd::project_charts(r, gens);
  EXPECT_EQ(charts[0].state, zd::ChartState::Empty);
  EXPECT_EQ(charts[1].state, zd::ChartState::PositiveDimensional);
  EXPECT_EQ(charts[2].state, zd::ChartState::PositiveDimensional);
  auto hilbert = zd::projective_length(r, gens);
  ASSERT_TRUE(hilbert.has_value());
  EXPECT_EQ(*hilbert, -1);
}

TEST(Charts, EmbeddedDirectionAlongKilledCoordinate) {
  FpCtx f(10007);
  auto r = make_ring(3, MonomialOrder::degrevlex(3), f, {"x", "y", "z"});
  P x = P::variable(r, 0), y = P::variable(r, 1);
  // double structure at (0:0:1) pointing along x, the coordinate the
  // deduplication kills: the length must still come out as 2
  std::vector<P> gens = {x * x, x * y, y * y};
  auto charts = zd::project_charts(r, gens);
  EXPECT_EQ(charts[0].state, zd::ChartState::Empty);
  EXPECT_EQ(charts[1].state, zd::ChartState::Empty);
  EXPECT_EQ(charts[2].state, zd::ChartState::Finite);
  EXPECT_EQ(charts[2].length, 3);
  EXPECT_EQ(charts[2].radical_length, 1);
  auto hilbert = zd::projective_length(r, gens);
  ASSERT_TRUE(hilbert.has_value());
  EXPECT_EQ(*hilbert, 3);
}

}  // namespace
