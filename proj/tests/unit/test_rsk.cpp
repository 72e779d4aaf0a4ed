#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "cardrep/parabolic.hpp"
#include "cardrep/rsk.hpp"
#include "support.hpp"

using namespace cardrep;
using testing_support::C;
using testing_support::G;
using testing_support::P;
using testing_support::Q;

namespace {

// Longest increasing subsequence by checking every subset.
int lis_exhaustive(const Permutation& g) {
  const int n = g.degree();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int last = 0;
    int len = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (mask & (1u << i)) {
        ok = g(i + 1) > last;
        last = g(i + 1);
        ++len;
      }
    if (ok) best = std::max(best, len);
  }
  return best;
}

}  // namespace

TEST(Rsk, Examples) {
  EXPECT_EQ(rsk_shape(Permutation::identity(5)), P("5"));
  EXPECT_EQ(rsk_shape(Permutation::reversal(5)), P("1,1,1,1,1"));
  EXPECT_EQ(rsk_shape(G("2 1 3")), P("2,1"));
  EXPECT_EQ(lis_length(Permutation::identity(6)), 6);
  EXPECT_EQ(lis_length(Permutation::reversal(6)), 1);
  EXPECT_EQ(lis_length(G("3 1 4 2 5")), 3);
}

TEST(Rsk, InsertionTableauIsSemistandard) {
  const std::vector<int> word{2, 1, 3, 1, 2, 2, 3, 1};
  const auto pair = rsk_pair(word);
  ASSERT_EQ(pair.insertion.size(), pair.recording.size());
  for (std::size_t r = 0; r < pair.insertion.size(); ++r) {
    ASSERT_EQ(pair.insertion[r].size(), pair.recording[r].size());
    EXPECT_TRUE(std::is_sorted(pair.insertion[r].begin(), pair.insertion[r].end()));
    if (r > 0)
      for (std::size_t c = 0; c < pair.insertion[r].size(); ++c) {
        EXPECT_LT(pair.insertion[r - 1][c], pair.insertion[r][c]);
        EXPECT_LT(pair.recording[r - 1][c], pair.recording[r][c]);
      }
  }
  EXPECT_EQ(rsk_shape(std::span<const int>(word)), P("5,2,1"));
}

TEST(Rsk, PushforwardExamples) {
  EXPECT_EQ(pushforward(GroupAlgebraMeasure<Rational>::point_mass(Permutation::identity(4))).at(P("4")), 1);
  const auto top = pushforward(measure_of<Rational>(ShuffleSpec::top_to_random(3)));
  EXPECT_EQ(top.masses(), (std::vector<Rational>{Q(1, 3), Q(2, 3), Q(0)}));
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(pushforward(GroupAlgebraMeasure<Rational>::uniform(n)), plancherel<Rational>(n));
}

TEST(Rsk, InversionInvariance) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : all_permutations(n)) ASSERT_EQ(rsk_shape(g), rsk_shape(g.inverse())) << g.to_string();
}

TEST(Rsk, DescentClassCountsAreDimensionTimesKostka) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : enumerate_compositions(n)) {
      std::map<Partition, long> counts;
      for (const auto& g : x_l_support(RootSubset::from_composition(mu))) ++counts[rsk_shape(g)];
      for (const auto& l : enumerate_partitions(n))
        EXPECT_EQ(Integer(counts[l]), dimension(l) * kostka(l, mu)) << mu.to_string() << " " << l.to_string();
    }
}

TEST(Rsk, LongestIncreasingSubsequence) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& g : all_permutations(n)) ASSERT_EQ(lis_length(g), rsk_shape(g)[0]);
  for (const auto& g : all_permutations(6)) ASSERT_EQ(lis_length(g), lis_exhaustive(g));
}

TEST(Rsk, RecordingTableauDeterminesPermutation) {
  // The (P, Q) pairs of S_5 are all distinct.
  std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> seen;
  for (const auto& g : all_permutations(5)) {
    const auto pq = rsk_pair(std::span<const int>(g.one_line()));
    EXPECT_TRUE(seen.emplace(pq.insertion, pq.recording).second);
  }
}

TEST(ShapeTally, MergeAndFrequencies) {
  ShapeTally a;
  ShapeTally b;
  a.add(P("2,1"), 3);
  b.add(P("3"));
  a.merge(b);
  EXPECT_EQ(a.total(), 4u);
  const auto f = a.frequencies(3);
  EXPECT_DOUBLE_EQ(f.at(P("2,1")), 0.75);
  EXPECT_DOUBLE_EQ(f.at(P("3")), 0.25);
  EXPECT_DOUBLE_EQ(f.at(P("1,1,1")), 0.0);
}
