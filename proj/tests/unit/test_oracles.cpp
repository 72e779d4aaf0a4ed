#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <map>

#include "cardrep/characters.hpp"
#include "cardrep/parabolic.hpp"
#include "cardrep/plancherel_chain.hpp"
#include "cardrep/selftest.hpp"
#include "cardrep/shuffles.hpp"
#include "support.hpp"

using namespace cardrep;
using testing_support::C;
using testing_support::P;

TEST(Oracles, ClassRatioByEnumeration) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : enumerate_compositions(n))
      for (const auto& nu : enumerate_partitions(n))
        ASSERT_EQ(selftest::brute_force_class_ratio(mu, nu), class_ratio(mu, nu)) << mu.to_string() << " " << nu.to_string();
}

TEST(Oracles, InducedCharacterIsIndexTimesRatio) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : enumerate_compositions(n)) {
      const Rational index = ratio(factorial(n), young_subgroup_order(mu));
      for (const auto& nu : enumerate_partitions(n))
        ASSERT_EQ(Rational(selftest::induced_character_direct(mu, nu)), index * class_ratio(mu, nu));
    }
}

TEST(Oracles, TensorMultiplicities) {
  EXPECT_EQ(selftest::tensor_multiplicity_direct(P("3"), C("1,2"), 2), 2);
  EXPECT_EQ(selftest::tensor_multiplicity_direct(P("2,1"), C("1,2"), 2), 3);
  EXPECT_EQ(selftest::tensor_multiplicity_direct(P("1,1,1"), C("1,2"), 2), 1);
  for (int n = 2; n <= 5; ++n) {
    const GroupData g = GroupData::symmetric(CharacterTable::build(n));
    for (const auto& mu : enumerate_compositions(n)) {
      const auto rv = ratio_vector_for(mu);
      for (unsigned r = 0; r <= 3; ++r)
        for (std::size_t i = 0; i < g.irreducible_count(); ++i)
          ASSERT_EQ(tensor_power_multiplicity(g, rv, i, r),
                    selftest::tensor_multiplicity_direct(Partition::parse(g.irreducible_labels()[i]), mu, r));
    }
  }
}

TEST(Oracles, TransitionByDefinition) {
  for (int n = 2; n <= 6; ++n) {
    const GroupData g = GroupData::symmetric(CharacterTable::build(n));
    const auto parts = enumerate_partitions(n);
    for (const auto& mu : enumerate_compositions(n)) {
      const auto J = transition_matrix<Rational>(g, ratio_vector_for(mu));
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j)
          ASSERT_EQ(J(i, j), selftest::transition_by_definition(parts[i], parts[j], mu));
    }
  }
}

TEST(Oracles, ShuffleEigenvaluesNumerically) {
  // Eigenvalues of left multiplication by the shuffle element on the group
  // algebra, by a dense numerical solver.
  for (int n = 3; n <= 4; ++n)
    for (const auto& [name, spec] : selftest::spec_grid(n)) {
      const auto m = measure_of<double>(spec);
      const auto perms = all_permutations(n);
      std::map<std::vector<int>, Eigen::Index> index;
      for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i].one_line()] = static_cast<Eigen::Index>(i);
      const auto size = static_cast<Eigen::Index>(perms.size());
      Eigen::MatrixXd M = Eigen::MatrixXd::Zero(size, size);
      for (const auto& g : perms)
        for (const auto& h : perms) M(index[(g * h).one_line()], index[h.one_line()]) += m.mass(g);
      Eigen::EigenSolver<Eigen::MatrixXd> solver(M, false);
      std::vector<double> numeric;
      for (Eigen::Index i = 0; i < size; ++i) {
        EXPECT_NEAR(solver.eigenvalues()[i].imag(), 0.0, 1e-8);
        numeric.push_back(solver.eigenvalues()[i].real());
      }
      std::vector<double> expected;
      for (const auto& [value, count] : isospectral_check(spec).shuffle_side)
        expected.insert(expected.end(), count, to_double(value));
      std::sort(numeric.begin(), numeric.end());
      std::sort(expected.begin(), expected.end());
      ASSERT_EQ(numeric.size(), expected.size());
      for (std::size_t i = 0; i < numeric.size(); ++i) EXPECT_NEAR(numeric[i], expected[i], 1e-6) << name << " n=" << n;
    }
}
