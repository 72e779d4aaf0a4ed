#include <gtest/gtest.h>

#include <algorithm>

#include "cardrep/characters.hpp"
#include "cardrep/errors.hpp"
#include "cardrep/parabolic.hpp"
#include "cardrep/selftest.hpp"
#include "support.hpp"

using namespace cardrep;
using testing_support::C;
using testing_support::P;
using testing_support::Q;

TEST(RootSubset, CompositionOf) {
  EXPECT_EQ(composition_of(RootSubset::none(4)), C("1,1,1,1"));
  EXPECT_EQ(composition_of(RootSubset::all(4)), C("4"));
  EXPECT_EQ(composition_of(RootSubset(5, {3, 4})), C("1,1,3"));
  for (int n = 1; n <= 8; ++n)
    for (const auto& mu : enumerate_compositions(n)) EXPECT_EQ(composition_of(RootSubset::from_composition(mu)), mu);
}

TEST(RootSubset, ParseAndValidate) {
  EXPECT_EQ(RootSubset::parse(5, "1,3"), RootSubset(5, {3, 1}));
  EXPECT_EQ(RootSubset::parse(5, "empty"), RootSubset::none(5));
  EXPECT_EQ(RootSubset(5, {1, 3}).to_string(), "1,3");
  EXPECT_THROW(RootSubset(4, {4}), ArgumentError);
  EXPECT_THROW(RootSubset::parse(4, "1,,2"), ParseError);
}

TEST(ClassRatio, Examples) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(class_ratio(point_stabilizer(n), Partition::column(n)), 1);
    EXPECT_EQ(class_ratio(point_stabilizer(n), Partition::row(n)), 0);
    std::vector<int> t{2};
    t.insert(t.end(), static_cast<std::size_t>(n - 2), 1);
    EXPECT_EQ(class_ratio(point_stabilizer(n), Partition(t)), beta_point_stabilizer(n));
  }
  EXPECT_EQ(class_ratio(C("3"), P("3")), 1);
}

TEST(ClassRatio, MatchesEnumeration) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : enumerate_compositions(n))
      for (const auto& nu : enumerate_partitions(n))
        EXPECT_EQ(class_ratio(mu, nu), selftest::brute_force_class_ratio(mu, nu)) << mu.to_string() << " " << nu.to_string();
}

TEST(ClassRatio, CountsTheSubgroup) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& mu : enumerate_compositions(n)) {
      Rational total = 0;
      for (const auto& nu : enumerate_partitions(n)) total += Rational(class_size(nu)) * class_ratio(mu, nu);
      EXPECT_EQ(total, Rational(young_subgroup_order(mu)));
    }
}

TEST(ClassRatio, BlockOrderDoesNotMatter) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : enumerate_compositions(n)) {
      const Composition sorted(mu.sorted().parts());
      for (const auto& nu : enumerate_partitions(n)) EXPECT_EQ(class_ratio(mu, nu), class_ratio(sorted, nu));
    }
}

TEST(Beta, NamedExamples) {
  const auto top = beta_parabolic(C("1,5"));
  EXPECT_EQ(top.beta, Q(2, 3));
  EXPECT_EQ(top.witnesses, std::vector<Partition>{P("2,1,1,1,1")});
  EXPECT_EQ(beta_parabolic(C("1,1,4")).beta, Q(2, 5));
  EXPECT_EQ(beta_top_k_stabilizer(6, 2), Q(2, 5));
  EXPECT_EQ(beta_parabolic(C("3,3")).beta, Q(2, 5));
  EXPECT_EQ(beta_k_set_stabilizer(6, 3), Q(2, 5));
  EXPECT_EQ(beta_parabolic(C("1,1,1")).beta, 0);
  EXPECT_EQ(beta_parabolic(C("1")).beta, 0);
}

TEST(Beta, ClosedFormsAgainstMaxima) {
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(beta_parabolic(point_stabilizer(n)).beta, beta_point_stabilizer(n));
    for (int k = 1; k < n; ++k) EXPECT_EQ(beta_parabolic(top_k_stabilizer(n, k)).beta, beta_top_k_stabilizer(n, k));
  }
  for (int n = 5; n <= 10; ++n)
    for (int k = 1; k <= n / 2; ++k) {
      const auto b = beta_parabolic(k_set_stabilizer(n, k));
      EXPECT_EQ(b.beta, beta_k_set_stabilizer(n, k));
      std::vector<int> t{2};
      t.insert(t.end(), static_cast<std::size_t>(n - 2), 1);
      EXPECT_NE(std::find(b.witnesses.begin(), b.witnesses.end(), Partition(t)), b.witnesses.end());
    }
}

TEST(Beta, RangeChecks) {
  EXPECT_THROW(top_k_stabilizer(4, 4), ArgumentError);
  EXPECT_THROW(k_set_stabilizer(4, 0), ArgumentError);
  EXPECT_THROW(point_stabilizer(1), ArgumentError);
}

TEST(RatioVector, Examples) {
  const auto whole = ratio_vector_for(C("4"));
  for (const auto& r : whole.ratios()) EXPECT_EQ(r, 1);
  const auto s2 = ratio_vector_for(C("1,2"));
  EXPECT_EQ(s2.ratios(), (std::vector<Rational>{Q(0), Q(1, 3), Q(1)}));
  EXPECT_EQ(s2.subgroup_order(), 2);
  const auto trivial = ratio_vector_for(C("1,1,1,1"));
  for (std::size_t c = 0; c + 1 < trivial.ratios().size(); ++c) EXPECT_EQ(trivial.ratios()[c], 0);
  EXPECT_EQ(trivial.ratios().back(), 1);
  EXPECT_THROW(ratio_vector_for(C("13")), CapacityError);
}
