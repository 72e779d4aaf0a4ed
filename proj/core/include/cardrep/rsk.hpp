#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cardrep/partitions.hpp"
#include "cardrep/permutation.hpp"
#include "cardrep/shuffles.hpp"

namespace cardrep {

/// Partial insertion tableau: rows weakly increasing, columns strictly increasing.
class InsertionState {
 public:
  /// Row insertion; returns the row index where the tableau grew.
  std::size_t insert(int value);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Partition shape() const;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Shape of the insertion tableau of g(1), ..., g(n).
Partition rsk_shape(const Permutation& g);

/// Shape of the insertion tableau of an arbitrary word (letters may repeat).
Partition rsk_shape(std::span<const int> word);

/// Both tableaux of the correspondence, for words; the recording tableau is
/// standard, the insertion tableau semistandard with the word's content.
struct TableauPair {
  std::vector<std::vector<int>> insertion;
  std::vector<std::vector<int>> recording;
};
TableauPair rsk_pair(std::span<const int> word);

/// Longest increasing subsequence, by patience sorting.
int lis_length(const Permutation& g);

/// Mass of lambda = total mass of permutations with RSK shape lambda, in
/// canonical partition order over all partitions of n.
template <class T>
PartitionDistribution<T> pushforward(const GroupAlgebraMeasure<T>& measure);

/// Shape counts from sampling. Tallies merge associatively.
class ShapeTally {
 public:
  void add(const Partition& shape, std::uint64_t count = 1);
  void merge(const ShapeTally& other);

  std::uint64_t total() const noexcept { return total_; }
  const std::map<Partition, std::uint64_t>& counts() const noexcept { return counts_; }

  /// Plug-in frequencies over all partitions of n (zeros included).
  PartitionDistribution<double> frequencies(int n) const;

 private:
  std::map<Partition, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

extern template PartitionDistribution<Rational> pushforward<Rational>(const GroupAlgebraMeasure<Rational>&);
extern template PartitionDistribution<double> pushforward<double>(const GroupAlgebraMeasure<double>&);

}  // namespace cardrep
