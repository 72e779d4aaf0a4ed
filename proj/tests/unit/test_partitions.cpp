#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "cardrep/errors.hpp"
#include "cardrep/partitions.hpp"
#include "support.hpp"

using namespace cardrep;
using testing_support::C;
using testing_support::P;
using testing_support::Q;

TEST(Partitions, EnumerationSmall) {
  ASSERT_EQ(enumerate_partitions(0).size(), 1u);
  EXPECT_TRUE(enumerate_partitions(0)[0].empty());
  ASSERT_EQ(enumerate_partitions(1), std::vector<Partition>{P("1")});
  EXPECT_EQ(enumerate_partitions(4), (std::vector<Partition>{P("4"), P("3,1"), P("2,2"), P("2,1,1"), P("1,1,1,1")}));
}

TEST(Partitions, EnumerationMatchesBruteForce) {
  // Every weakly decreasing sequence, built independently, in reverse-lex order.
  for (int n = 1; n <= 12; ++n) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int left, int cap) {
      if (left == 0) {
        all.push_back(cur);
        return;
      }
      for (int p = std::min(left, cap); p >= 1; --p) {
        cur.push_back(p);
        go(left - p, p);
        cur.pop_back();
      }
    };
    go(n, n);
    const auto got = enumerate_partitions(n);
    ASSERT_EQ(got.size(), all.size()) << n;
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(got[i].parts(), all[i]);
  }
}

TEST(Partitions, Validation) {
  EXPECT_THROW(Partition({1, 2}), ArgumentError);
  EXPECT_THROW(Partition({2, 0}), ArgumentError);
  EXPECT_THROW(Partition::parse("3,x"), ParseError);
  EXPECT_EQ(Partition::from_unordered({1, 3, 2}), P("3,2,1"));
  EXPECT_EQ(P("3,1").to_string(), "3,1");
  EXPECT_EQ(P("2,1,1").multiplicity(1), 2);
}

TEST(Partitions, Conjugate) {
  EXPECT_EQ(conjugate(Partition::row(5)), Partition::column(5));
  EXPECT_EQ(conjugate(P("2,1")), P("2,1"));
  EXPECT_EQ(conjugate(P("3,1")), P("2,1,1"));
  for (int n = 0; n <= 12; ++n)
    for (const auto& l : enumerate_partitions(n)) EXPECT_EQ(conjugate(conjugate(l)), l);
}

TEST(Partitions, Dimension) {
  EXPECT_EQ(dimension(Partition::row(7)), 1);
  EXPECT_EQ(dimension(P("2,1")), 2);
  EXPECT_EQ(dimension(P("2,2")), 2);
  EXPECT_EQ(dimension(P("3,2")), 5);
}

TEST(Partitions, SumOfSquaredDimensions) {
  for (int n = 1; n <= 10; ++n) {
    Integer sum = 0;
    for (const auto& l : enumerate_partitions(n)) sum += dimension(l) * dimension(l);
    EXPECT_EQ(sum, factorial(n)) << n;
  }
}

TEST(Kostka, Examples) {
  EXPECT_EQ(kostka(P("3,1"), P("3,1")), 1);
  EXPECT_EQ(kostka(P("2,1"), C("1,1,1")), 2);
  EXPECT_EQ(kostka(P("1,1"), C("2")), 0);
  EXPECT_EQ(kostka(P("3,2"), P("2,2,1")), 2);
  EXPECT_THROW(kostka(P("2,1"), C("2")), ArgumentError);
}

TEST(Kostka, EqualsDimensionOnOnes) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : enumerate_partitions(n)) EXPECT_EQ(kostka(l, Partition::column(n)), dimension(l));
}

TEST(Kostka, DominanceAndReordering) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : enumerate_partitions(n))
      for (const auto& mu : enumerate_compositions(n)) {
        const Integer k = kostka(l, mu);
        EXPECT_EQ(k, kostka(l, mu.sorted())) << l.to_string() << " " << mu.to_string();
        if (!dominates(l, mu.sorted())) {
          EXPECT_EQ(k, 0);
        } else {
          EXPECT_GT(k, 0);
        }
      }
}

TEST(Plancherel, Examples) {
  const auto one = plancherel<Rational>(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], 1);
  const auto three = plancherel<Rational>(3);
  EXPECT_EQ(three.masses(), (std::vector<Rational>{Q(1, 6), Q(2, 3), Q(1, 6)}));
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(plancherel<Rational>(n).total(), 1);
  EXPECT_NEAR(plancherel<double>(9).total(), 1.0, 1e-12);
}

TEST(Compositions, Enumeration) {
  for (int n = 1; n <= 8; ++n) {
    const auto all = enumerate_compositions(n);
    EXPECT_EQ(all.size(), std::size_t{1} << (n - 1));
    for (const auto& c : all) EXPECT_EQ(c.size(), n);
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  }
}
