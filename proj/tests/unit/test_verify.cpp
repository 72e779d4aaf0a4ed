#include <gtest/gtest.h>

#include <cmath>

#include "cardrep/characters.hpp"
#include "cardrep/errors.hpp"
#include "cardrep/parabolic.hpp"
#include "cardrep/rsk.hpp"
#include "cardrep/selftest.hpp"
#include "cardrep/verify.hpp"
#include "support.hpp"

using namespace cardrep;
using testing_support::C;
using testing_support::P;
using testing_support::Q;

TEST(ShapeLaw, Examples) {
  const auto one = verify_shape_law(ShuffleSpec::top_to_random(3), 1);
  EXPECT_TRUE(one.holds());
  EXPECT_EQ(one.chain_side.masses(), (std::vector<Rational>{Q(1, 3), Q(2, 3), Q(0)}));
  const auto zero = verify_shape_law(ShuffleSpec::riffle_k_cut(5, 2), 0);
  EXPECT_TRUE(zero.holds());
  EXPECT_EQ(zero.shuffle_side.at(P("5")), 1);
  const auto mix = ShuffleSpec::mixture({{Q(1, 2), ShuffleSpec::top_to_random(5)}, {Q(1, 2), ShuffleSpec::riffle_k_cut(5, 2)}});
  EXPECT_TRUE(verify_shape_law(mix, 3).holds());
  EXPECT_THROW(verify_shape_law(ShuffleSpec::top_to_random(9), 1), CapacityError);
}

TEST(ShapeLaw, SeriesAgreesWithSingleCalls) {
  const auto spec = selftest::fixed_mixture(5);
  const auto series = verify_shape_law_series(spec, 4);
  ASSERT_EQ(series.size(), 5u);
  for (const auto& r : series) {
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.shuffle_side, verify_shape_law(spec, r.r).shuffle_side);
  }
}

TEST(ShapeLaw, DetectsAWrongChain) {
  // Pairing the shuffle with the wrong subgroup must produce a discrepancy.
  const int n = 5;
  const GroupData g = GroupData::symmetric(CharacterTable::build(n));
  const auto wrong = r_step_from_trivial<Rational>(g, ratio_vector_for(C("2,3")), 2);
  const auto right = pushforward(convolution_power<Rational>(ShuffleSpec::top_to_random(n), 2));
  EXPECT_NE(as_partition_distribution(wrong), right);
}

TEST(MixedChain, SharedEigenbasisMatchesSummedMatrices) {
  for (int n = 3; n <= 5; ++n) {
    const auto spec = selftest::fixed_mixture(n);
    const GroupData g = GroupData::symmetric(CharacterTable::build(n));
    SquareMatrix<Rational> sum(g.irreducible_count());
    for (const auto& [roots, p] : spec.weights()) {
      const auto J = transition_matrix<Rational>(g, ratio_vector_for(composition_of(roots)));
      for (std::size_t i = 0; i < sum.size(); ++i)
        for (std::size_t j = 0; j < sum.size(); ++j) sum(i, j) += p * J(i, j);
    }
    const auto eig = mixed_chain_eigenvalues(spec);
    EXPECT_EQ(transition_matrix<Rational>(g, std::span<const Rational>(eig)), sum);
    for (unsigned r = 0; r <= 6; ++r)
      EXPECT_EQ(r_step_from_trivial<Rational>(g, std::span<const Rational>(eig), r), r_step_by_matrix<Rational>(g, sum, r));
  }
}

TEST(Tv, Basics) {
  const auto pi = plancherel<Rational>(3);
  EXPECT_EQ(tv(pi, pi), 0);
  const auto a = PartitionDistribution<Rational>(pi.labels(), {Q(1), Q(0), Q(0)});
  const auto b = PartitionDistribution<Rational>(pi.labels(), {Q(0), Q(0), Q(1)});
  EXPECT_EQ(tv(a, b), 1);
  const auto top = pushforward(measure_of<Rational>(ShuffleSpec::top_to_random(3)));
  EXPECT_EQ(tv(top, pi), Q(1, 6));
  EXPECT_THROW(tv(pi, plancherel<Rational>(4)), ArgumentError);
  EXPECT_THROW(tv(GroupAlgebraMeasure<Rational>::uniform(3), GroupAlgebraMeasure<Rational>::uniform(4)), ArgumentError);
}

TEST(Tv, TwiceTvIsL1) {
  for (int n = 2; n <= 6; ++n) {
    const GroupData g = GroupData::symmetric(CharacterTable::build(n));
    for (const auto& mu : enumerate_compositions(n))
      for (unsigned r : {0u, 1u, 3u}) {
        const auto d = r_step_from_trivial<Rational>(g, ratio_vector_for(mu), r);
        EXPECT_EQ(2 * tv(as_partition_distribution(d), plancherel<Rational>(n)), l1_to_plancherel(d, g));
      }
  }
}

TEST(ShapeTv, Inequality) {
  const auto zero = shape_tv_check(ShuffleSpec::top_to_random(4), 0);
  EXPECT_TRUE(zero.holds);
  EXPECT_EQ(zero.shape_tv, Q(23, 24));
  EXPECT_EQ(zero.permutation_tv, Q(23, 24));
  for (const auto& c : shape_tv_series(ShuffleSpec::top_to_random(4), 8)) EXPECT_TRUE(c.holds) << c.r;
  for (const auto& c : shape_tv_series(ShuffleSpec::riffle_k_cut(5, 2), 6)) EXPECT_TRUE(c.holds) << c.r;
}

TEST(ShapeTv, BoundsDominateTheExactCurve) {
  // sqrt(n!) beta^r >= 2 * shape TV, and permutation TV >= shape TV, along the whole curve.
  const int n = 6;
  const GroupData g = GroupData::symmetric(CharacterTable::build(n));
  const auto crv = ratio_vector_for(point_stabilizer(n));
  TvCurveOptions o;
  o.r_max = 25;
  const auto curve = tv_curve(ShuffleSpec::top_to_random(n), o);
  for (const auto& p : curve.points) {
    EXPECT_TRUE(spectral_bound(g, crv, p.r).dominates(2 * *p.exact_shape_tv, g.group_order())) << p.r;
    EXPECT_LE(p.shape_tv, *p.permutation_tv);
  }
}

TEST(TvCurve, Exact) {
  TvCurveOptions o;
  o.r_max = 20;
  const auto curve = tv_curve(ShuffleSpec::top_to_random(6), o);
  ASSERT_EQ(curve.points.size(), 21u);
  EXPECT_EQ(*curve.points[0].exact_shape_tv, Rational(1) - ratio(Integer(1), factorial(6)));
  EXPECT_LT(curve.points[20].shape_tv, curve.points[5].shape_tv);
  EXPECT_TRUE(curve.weakly_decreasing);
  EXPECT_FALSE(curve.monte_carlo);
}

TEST(TvCurve, GridAndValidation) {
  TvCurveOptions o;
  o.r_max = 7;
  o.r_step = 3;
  o.extra_points = {5};
  const auto curve = tv_curve(ShuffleSpec::top_to_random(4), o);
  std::vector<unsigned> rs;
  for (const auto& p : curve.points) rs.push_back(p.r);
  EXPECT_EQ(rs, (std::vector<unsigned>{0, 3, 5, 6, 7}));
  o.r_step = 0;
  EXPECT_THROW(tv_curve(ShuffleSpec::top_to_random(4), o), ArgumentError);
  o.r_step = 1;
  o.mode = TvCurveOptions::Mode::monte_carlo;
  o.samples = 999;
  EXPECT_THROW(tv_curve(ShuffleSpec::top_to_random(4), o), ArgumentError);
}

TEST(TvCurve, MonteCarloIsReproducibleAcrossWorkerCounts) {
  TvCurveOptions o;
  o.mode = TvCurveOptions::Mode::monte_carlo;
  o.r_max = 30;
  o.r_step = 10;
  o.samples = 5000;
  o.seed = 11;
  o.workers = 1;
  const auto one = tv_curve(ShuffleSpec::riffle_k_cut(12, 6), o);
  o.workers = 4;
  const auto four = tv_curve(ShuffleSpec::riffle_k_cut(12, 6), o);
  ASSERT_EQ(one.points.size(), four.points.size());
  for (std::size_t i = 0; i < one.points.size(); ++i) {
    EXPECT_EQ(one.points[i].shape_tv, four.points[i].shape_tv);
    EXPECT_EQ(one.points[i].std_error, four.points[i].std_error);
  }
  o.seed = 12;
  const auto other = tv_curve(ShuffleSpec::riffle_k_cut(12, 6), o);
  EXPECT_NE(other.points[1].shape_tv, one.points[1].shape_tv);
}

TEST(TvCurve, MonteCarloTracksExactValues) {
  // At n = 6 the exact curve is available; the plug-in estimate sits within a
  // few standard errors plus its small upward bias.
  TvCurveOptions o;
  o.r_max = 12;
  o.r_step = 4;
  const auto exact = tv_curve(ShuffleSpec::top_to_random(6), o);
  o.mode = TvCurveOptions::Mode::monte_carlo;
  o.samples = 40000;
  o.seed = 5;
  const auto mc = tv_curve(ShuffleSpec::top_to_random(6), o);
  ASSERT_EQ(exact.points.size(), mc.points.size());
  for (std::size_t i = 0; i < mc.points.size(); ++i) {
    EXPECT_GT(*mc.points[i].std_error, 0.0);
    EXPECT_NEAR(mc.points[i].shape_tv, exact.points[i].shape_tv, 5 * *mc.points[i].std_error + 0.01) << mc.points[i].r;
  }
}
