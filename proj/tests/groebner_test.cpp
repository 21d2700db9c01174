#include "quadweb/groebner.hpp"

#include <gtest/gtest.h>

namespace quadweb {
namespace {

using P = Poly<FpCtx>;

RingPtr<FpCtx> ring(int n, uint64_t p = 32003) {
  return make_ring(n, MonomialOrder::degrevlex(n), FpCtx(p));
}

P rand_poly(const RingPtr<FpCtx>& r, Rng& rng, int nterms, uint32_t maxdeg) {
  P acc = P::zero(r);
  for (int t = 0; t < nterms; ++t) {
    Monomial m;
    uint32_t left = maxdeg;
    for (int v = 0; v < r->n; ++v) {
      uint16_t e = static_cast<uint16_t>(rng.below(left + 1));
      m = m.mul(Monomial::var(v, e));
      left -= e;
    }
    acc = acc + P::term(r, m, r->field.sample(rng));
  }
  return acc;
}

TEST(Geobucket, AgreesWithPolyAddition) {
  auto r = ring(4);
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    Geobucket<FpCtx> bucket(r);
    P direct = P::zero(r);
    for (int i = 0; i < 10; ++i) {
      P p = rand_poly(r, rng, 6, 4);
      bucket.add_poly(p);
      direct = direct + p;
    }
    std::vector<Term<FpCtx>> collected;
    while (auto t = bucket.pop_leading()) collected.push_back(*t);
    P rebuilt = P::from_sorted_terms(r, std::move(collected));
    EXPECT_EQ(rebuilt, direct);
    EXPECT_TRUE(bucket.drained());
  }
}

TEST(Geobucket, ProductAccumulation) {
  auto r = ring(3);
  Rng rng(2);
  const FpCtx& f = r->field;
  for (int trial = 0; trial < 20; ++trial) {
    P a = rand_poly(r, rng, 8, 5), b = rand_poly(r, rng, 4, 3);
    if (a.is_zero() || b.is_zero()) continue;
    // accumulate a * b term by term through the bucket
    Geobucket<FpCtx> bucket(r);
    for (const auto& t : b.terms())
      bucket.add_product(a.terms(), 0, t.m, t.c);
    std::vector<Term<FpCtx>> collected;
    while (auto t = bucket.pop_leading()) collected.push_back(*t);
    EXPECT_EQ(P::from_sorted_terms(r, std::move(collected)), a * b);
  }
}

TEST(NormalForm, HandReduction) {
  auto r = ring(2);
  P x = P::variable(r, 0), y = P::variable(r, 1);
  // x^2 reduced by {x - y} telescopes to y^2
  P nf = gb::normal_form(x * x, {x - y});
  EXPECT_EQ(nf, y * y);
  // already-reduced input passes through
  EXPECT_EQ(gb::normal_form(y * y + y, {x - y}), y * y + y);
}

TEST(NormalForm, LinearAndIdempotent) {
  auto r = ring(3);
  Rng rng(3);
  std::vector<P> basis = {rand_poly(r, rng, 4, 3), rand_poly(r, rng, 4, 3),
                          rand_poly(r, rng, 4, 2)};
  for (int trial = 0; trial < 20; ++trial) {
    P f = rand_poly(r, rng, 6, 4), g = rand_poly(r, rng, 6, 4);
    P nf = gb::normal_form(f, basis), ng = gb::normal_form(g, basis);
    EXPECT_EQ(gb::normal_form(nf, basis), nf);
    EXPECT_EQ(gb::normal_form(f + g, basis), nf + ng);
    // the reduction certificate: f - nf(f) is in the ideal, so any further
    // reduction of it ends at zero once the basis is a Groebner basis
  }
}

// Buchberger's criterion as an oracle: a completed run must leave every
// S-polynomial of the output reducing to zero, whatever the pair bookkeeping
// did along the way.
void expect_buchberger_criterion(const gb::GBResult<FpCtx>& g) {
  ASSERT_EQ(g.status, GBStatus::Done);
  const auto& basis = g.basis;
  if (basis.empty()) return;
  const auto& ring = basis[0].ring();
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Monomial l = basis[i].lm().lcm(basis[j].lm());
      P s = basis[i].mul_term(l.div(basis[i].lm()), ring->field.one()) -
            basis[j].mul_term(l.div(basis[j].lm()), ring->field.one());
      EXPECT_TRUE(gb::normal_form(s, basis).is_zero())
          << "S(" << i << "," << j << ") does not reduce to zero";
    }
}

TEST(Buchberger, TwistedCubicLexBasis) {
  auto r = make_ring(3, MonomialOrder::lex(3), FpCtx(32003), {"x", "y", "z"});
  P x = P::variable(r, 0), y = P::variable(r, 1), z = P::variable(r, 2);
  auto g = gb::buchberger<FpCtx>({y - x * x, z - x * x * x});
  ASSERT_EQ(g.status, GBStatus::Done);
  expect_buchberger_criterion(g);
  // the classical reduced basis
  std::vector<P> expected = {x * x - y, x * y - z, x * z - y * y,
                             y * y * y - z * z};
  ASSERT_EQ(g.basis.size(), expected.size());
  for (const auto& e : expected) {
    bool found = false;
    for (const auto& b : g.basis) found = found || (b == e);
    EXPECT_TRUE(found) << "missing " << e.str();
  }
}

TEST(Buchberger, CriterionHoldsOnRandomIdeals) {
  Rng rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + static_cast<int>(rng.below(2));  // 2 or 3 variables
    auto r = ring(n);
    std::vector<P> gens;
    int k = 2 + static_cast<int>(rng.below(2));
    for (int i = 0; i < k; ++i) gens.push_back(rand_poly(r, rng, 4, 3));
    auto g = gb::buchberger(gens, Deadline::after_seconds(30));
    if (g.status != GBStatus::Done) continue;  // extremely unlikely
    expect_buchberger_criterion(g);
    // membership: random combinations reduce to zero
    for (int m = 0; m < 5; ++m) {
      P combo = P::zero(r);
      for (const auto& gen : gens)
        combo = combo + rand_poly(r, rng, 3, 2) * gen;
      EXPECT_TRUE(gb::reduces_to_zero(combo, g));
    }
  }
}

TEST(Buchberger, ReducedBasisIsCanonical) {
  // feeding the output back in reproduces it, and generator order is
  // irrelevant
  auto r = ring(3);
  Rng rng(11);
  std::vector<P> gens = {rand_poly(r, rng, 4, 2), rand_poly(r, rng, 4, 2),
                         rand_poly(r, rng, 3, 3)};
  auto g1 = gb::buchberger(gens);
  ASSERT_EQ(g1.status, GBStatus::Done);
  auto g2 = gb::buchberger(g1.basis);
  ASSERT_EQ(g2.basis.size(), g1.basis.size());
  for (size_t i = 0; i < g1.basis.size(); ++i)
    EXPECT_EQ(g1.basis[i], g2.basis[i]);
  std::vector<P> rev(gens.rbegin(), gens.rend());
  auto g3 = gb::buchberger(rev);
  ASSERT_EQ(g3.basis.size(), g1.basis.size());
  for (size_t i = 0; i < g1.basis.size(); ++i)
    EXPECT_EQ(g1.basis[i], g3.basis[i]);
}

TEST(Buchberger, UnitIdealShortCircuit) {
  auto r = ring(2);
  P x = P::variable(r, 0), y = P::variable(r, 1);
  // V(x^2+y^2-1, x-y, x+y-5) is empty
  auto g = gb::buchberger<FpCtx>(
      {x * x + y * y - P::constant(r, 1), x - y, x + y - P::constant(r, 5)});
  EXPECT_TRUE(g.is_unit());
  EXPECT_EQ(gb::dimension_affine(g, 2), -1);
}

TEST(Buchberger, TimeoutReported) {
  auto r = ring(6, 1000003);
  Rng rng(13);
  std::vector<P> gens;
  for (int i = 0; i < 5; ++i) gens.push_back(rand_poly(r, rng, 12, 3));
  auto g = gb::buchberger(gens, Deadline::after_seconds(0.02));
  EXPECT_EQ(g.status, GBStatus::Timeout);
}

TEST(Dimension, KnownVarieties) {
  // hypersurface in 3-space
  auto r = ring(3);
  P x = P::variable(r, 0), y = P::variable(r, 1), z = P::variable(r, 2);
  auto hyp = gb::buchberger<FpCtx>({x * y - z * z});
  EXPECT_EQ(gb::dimension_affine(hyp, 3), 2);
  // a fat point
  auto fat = gb::buchberger<FpCtx>({x * x, y * y * y, z});
  EXPECT_EQ(gb::dimension_affine(fat, 3), 0);
  // a coordinate plane
  auto plane = gb::buchberger<FpCtx>({x});
  EXPECT_EQ(gb::dimension_affine(plane, 3), 2);
  // affine twisted cubic is a curve
  auto tc = gb::buchberger<FpCtx>({y - x * x, z - x * x * x});
  EXPECT_EQ(gb::dimension_affine(tc, 3), 1);
}

TEST(Eliminate, TwistedCubicProjection) {
  // eliminate x from (y - x^2, z - x^3): the image is y^3 = z^2
  auto r = ring(3);
  P x = P::variable(r, 0), y = P::variable(r, 1), z = P::variable(r, 2);
  auto out = gb::eliminate_first<FpCtx>({y - x * x, z - x * x * x}, 1);
  ASSERT_TRUE(out.has_value());
  ASSERT_EQ(out->size(), 1u);
  auto r2 = (*out)[0].ring();
  P y2 = P::variable(r2, 0), z2 = P::variable(r2, 1);
  EXPECT_EQ((*out)[0], y2 * y2 * y2 - z2 * z2);
}

TEST(RadicalMembership, NilpotentsAndAxes) {
  auto r = ring(2);
  P x = P::variable(r, 0), y = P::variable(r, 1);
  EXPECT_EQ(gb::in_radical(x, {x * x}), TriBool::Yes);
  EXPECT_EQ(gb::in_radical(y, {x * x}), TriBool::No);
  EXPECT_EQ(gb::in_radical(x * y, {x * x * y * y * y}), TriBool::Yes);
  EXPECT_EQ(gb::in_radical(x + y, {x * y}), TriBool::No);
  EXPECT_EQ(gb::in_radical(P::zero(r), {x}), TriBool::Yes);
}

TEST(UnitTruncation, CertifiesEmptiness) {
  auto r = ring(2);
  P x = P::variable(r, 0), y = P::variable(r, 1);
  std::vector<P> empty_sys = {x * x + y * y - P::constant(r, 1), x - y,
                              x + y - P::constant(r, 5)};
  bool found = false;
  for (uint32_t d = 2; d <= 6 && !found; ++d)
    found = gb::unit_via_truncation(empty_sys, d);
  EXPECT_TRUE(found);
  // a consistent system never certifies
  std::vector<P> consistent = {x * x - y, x + y};
  for (uint32_t d = 2; d <= 6; ++d)
    EXPECT_FALSE(gb::unit_via_truncation(consistent, d));
  // degenerate: a nonzero constant generator
  std::vector<P> unit_gen = {P::constant(r, 3)};
  EXPECT_TRUE(gb::unit_via_truncation(unit_gen, 1));
}

TEST(Hilbert, NumeratorSmallCases) {
  // zero ideal
  EXPECT_EQ(gb::hilbert_numerator({}, 2), std::vector<Integer>{Integer(1)});
  // unit ideal
  EXPECT_TRUE(gb::hilbert_numerator({Monomial{}}, 2).empty());
  // principal: (x) in k[x]
  EXPECT_EQ(gb::hilbert_numerator({Monomial::var(0)}, 1),
            (std::vector<Integer>{Integer(1), Integer(-1)}));
  // (x^2, xy) in k[x,y]: HS = 1/(1-t) + t, numerator 1 - 2t^2 + t^3
  auto n = gb::hilbert_numerator(
      {Monomial::var(0, 2), Monomial::var(0).mul(Monomial::var(1))}, 2);
  EXPECT_EQ(n, (std::vector<Integer>{Integer(1), Integer(0), Integer(-2),
                                     Integer(1)}));
  // redundant generators change nothing
  auto n2 = gb::hilbert_numerator(
      {Monomial::var(0, 2), Monomial::var(0).mul(Monomial::var(1)),
       Monomial::var(0, 3).mul(Monomial::var(1, 2))},
      2);
  EXPECT_EQ(n, n2);
}

TEST(Hilbert, DegreeOfProjectiveTwistedCubic) {
  // homogeneous ideal in P^3: (xz - y^2, yw - z^2, xw - yz)
  auto r = ring(4);
  P x = P::variable(r, 0), y = P::variable(r, 1), z = P::variable(r, 2),
    w = P::variable(r, 3);
  auto g = gb::buchberger<FpCtx>({x * z - y * y, y * w - z * z,
                                  x * w - y * z});
  ASSERT_EQ(g.status, GBStatus::Done);
  expect_buchberger_criterion(g);
  EXPECT_EQ(gb::dimension_affine(g, 4), 2);  // cone over a curve
  std::vector<Monomial> lms;
  for (const auto& b : g.basis) lms.push_back(b.lm());
  auto num = gb::hilbert_numerator(lms, 4);
  EXPECT_EQ(gb::graded_degree(num, 4, 2), Integer(3));
}

TEST(Hilbert, DegreeOfHypersurfaceAndPoints) {
  // quartic surface in P^3
  auto r = ring(4);
  Rng rng(17);
  P f = P::zero(r);
  while (f.is_zero() || f.total_degree() != 4) f = rand_poly(r, rng, 8, 4);
  // homogenize by hand: keep only degree-4 terms
  P hom = P::zero(r);
  for (const auto& t : f.terms())
    if (t.m.deg == 4) hom = hom + P::term(r, t.m, t.c);
  auto g = gb::buchberger<FpCtx>({hom});
  std::vector<Monomial> lms = {g.basis[0].lm()};
  EXPECT_EQ(gb::graded_degree(gb::hilbert_numerator(lms, 4), 4, 3),
            Integer(4));
}

TEST(RadicalMembership, TimeoutGivesUnknown) {
  auto r = ring(6, 1000003);
  Rng rng(19);
  std::vector<P> gens;
  for (int i = 0; i < 5; ++i) gens.push_back(rand_poly(r, rng, 10, 3));
  P f = rand_poly(r, rng, 5, 2);
  EXPECT_EQ(gb::in_radical(f, gens, Deadline::after_seconds(0.01)),
            TriBool::Unknown);
}

}  // namespace
}  // namespace quadweb
