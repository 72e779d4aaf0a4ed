#include <gtest/gtest.h>

#include "cardrep/characters.hpp"
#include "cardrep/errors.hpp"
#include "cardrep/permutation.hpp"
#include "support.hpp"

using namespace cardrep;
using testing_support::C;
using testing_support::P;

TEST(Characters, ClassSize) {
  EXPECT_EQ(class_size(Partition::column(6)), 1);
  EXPECT_EQ(class_size(P("2,1,1")), 6);
  Integer sum = 0;
  for (const auto& mu : enumerate_partitions(5)) sum += class_size(mu);
  EXPECT_EQ(sum, 120);
}

TEST(Characters, ClassSizeMatchesEnumeration) {
  for (int n = 1; n <= 7; ++n) {
    std::map<Partition, long> counts;
    for (const auto& g : all_permutations(n)) ++counts[g.cycle_type()];
    for (const auto& [mu, c] : counts) EXPECT_EQ(class_size(mu), c);
  }
}

TEST(Characters, Examples) {
  for (const auto& mu : enumerate_partitions(6)) {
    EXPECT_EQ(character(Partition::row(6), mu), 1);
    EXPECT_EQ(character(Partition::column(6), mu), sign(mu));
  }
  EXPECT_EQ(character(P("2,1"), P("3")), -1);
  EXPECT_EQ(character(P("2,1"), P("2,1")), 0);
  EXPECT_EQ(character(P("3,1"), P("2,2")), -1);
  EXPECT_THROW(character(P("2,1"), P("2")), ArgumentError);
}

TEST(Characters, TableForTwo) {
  const auto t = CharacterTable::build(2);
  ASSERT_EQ(t.size(), 2u);
  // Classes in canonical order: (2), (1,1).
  EXPECT_EQ(t.row(0), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(t.row(1), (std::vector<std::int64_t>{-1, 1}));
}

TEST(Characters, Orthogonality) {
  for (int n = 1; n <= 10; ++n) {
    const auto t = CharacterTable::build(n);
    const Integer order = factorial(n);
    Integer sizes = 0;
    for (std::size_t c = 0; c < t.size(); ++c) sizes += t.class_size(c);
    EXPECT_EQ(sizes, order);
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_EQ(t.value(i, t.index_of(Partition::column(n))), dimension(t.partitions()[i]));
      for (std::size_t j = 0; j < t.size(); ++j) {
        Integer row = 0;
        for (std::size_t c = 0; c < t.size(); ++c)
          row += t.class_size(c) * Integer(static_cast<long>(t.value(i, c) * t.value(j, c)));
        EXPECT_EQ(row, i == j ? order : Integer(0));
      }
    }
    for (std::size_t c = 0; c < t.size(); ++c)
      for (std::size_t d = 0; d < t.size(); ++d) {
        Integer col = 0;
        for (std::size_t i = 0; i < t.size(); ++i) col += Integer(static_cast<long>(t.value(i, c) * t.value(i, d)));
        EXPECT_EQ(col * t.class_size(c), c == d ? order : Integer(0));
      }
  }
}

TEST(Characters, ConjugateTimesSign) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : enumerate_partitions(n))
      for (const auto& mu : enumerate_partitions(n)) EXPECT_EQ(character(l, mu), character(conjugate(l), mu) * sign(mu));
}

TEST(Characters, CapacityLimit) {
  EXPECT_THROW(CharacterTable::build(13), CapacityError);
  EXPECT_NO_THROW(CharacterTable::build(6, 6));
  EXPECT_THROW(CharacterTable::build(7, 6), CapacityError);
}

TEST(Restriction, Examples) {
  const std::vector<Partition> rows{P("2"), P("1")};
  EXPECT_EQ(restriction_multiplicity(P("3"), C("2,1"), rows), 1);
  EXPECT_EQ(restriction_multiplicity(P("2,1"), C("2,1"), rows), 1);
  const std::vector<Partition> other{P("1,1"), P("1")};
  EXPECT_EQ(restriction_multiplicity(P("2,1"), C("2,1"), other), 1);
  EXPECT_EQ(restriction_multiplicity(P("3"), C("2,1"), other), 0);
  const std::vector<Partition> bad{P("2"), P("2")};
  EXPECT_THROW(restriction_multiplicity(P("2,1"), C("2,1"), bad), ArgumentError);
}

TEST(Restriction, PreservesDimension) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : enumerate_compositions(n))
      for (const auto& l : enumerate_partitions(n)) {
        // Walk all tuples of block partitions.
        std::vector<std::vector<Partition>> tuples{{}};
        for (int part : mu.parts()) {
          std::vector<std::vector<Partition>> next;
          for (const auto& t : tuples)
            for (const auto& tau : enumerate_partitions(part)) {
              auto u = t;
              u.push_back(tau);
              next.push_back(u);
            }
          tuples = next;
        }
        Integer total = 0;
        for (const auto& t : tuples) {
          Integer dims = 1;
          for (const auto& tau : t) dims *= dimension(tau);
          total += restriction_multiplicity(l, mu, t) * dims;
        }
        EXPECT_EQ(total, dimension(l)) << l.to_string() << " | " << mu.to_string();
      }
}

TEST(Characters, AgreesWithPermutationCharacterTrace) {
  // The standard representation has character (fixed points - 1).
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> parts{n - 1, 1};
    const Partition standard(parts);
    for (const auto& g : all_permutations(n)) {
      int fixed = 0;
      for (int i = 1; i <= n; ++i) fixed += g(i) == i;
      EXPECT_EQ(character(standard, g.cycle_type()), fixed - 1);
    }
  }
}
