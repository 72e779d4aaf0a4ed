#include "cardrep/rsk.hpp"

#include <algorithm>

#include "cardrep/errors.hpp"

namespace cardrep {

std::size_t InsertionState::insert(int value) {
  int carry = value;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto& row = rows_[r];
    // Bump the leftmost entry strictly greater than the incoming one.
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      return r;
    }
    std::swap(carry, *it);
  }
  rows_.push_back({carry});
  return rows_.size() - 1;
}

Partition InsertionState::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

Partition rsk_shape(std::span<const int> word) {
  InsertionState state;
  for (int letter : word) state.insert(letter);
  return state.shape();
}

Partition rsk_shape(const Permutation& g) { return rsk_shape(std::span<const int>(g.one_line())); }

TableauPair rsk_pair(std::span<const int> word) {
  InsertionState state;
  std::vector<std::vector<int>> recording;
  int step = 0;
  for (int letter : word) {
    const std::size_t row = state.insert(letter);
    if (row == recording.size()) recording.emplace_back();
    recording[row].push_back(++step);
  }
  return {state.rows(), std::move(recording)};
}

int lis_length(const Permutation& g) {
  std::vector<int> tops;  // smallest tail of an increasing run of each length
  for (int v : g.one_line()) {
    auto it = std::lower_bound(tops.begin(), tops.end(), v);
    if (it == tops.end()) {
      tops.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tops.size());
}

template <class T>
PartitionDistribution<T> pushforward(const GroupAlgebraMeasure<T>& measure) {
  const int n = measure.degree();
  auto shapes = enumerate_partitions(n);
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < shapes.size(); ++i) index.emplace(shapes[i], i);
  std::vector<T> masses(shapes.size(), T(0));
  for (auto r : measure.support()) masses[index.at(rsk_shape(unrank(n, r)))] += measure.mass_at_rank(r);
  return PartitionDistribution<T>(std::move(shapes), std::move(masses));
}

void ShapeTally::add(const Partition& shape, std::uint64_t count) {
  counts_[shape] += count;
  total_ += count;
}

void ShapeTally::merge(const ShapeTally& other) {
  for (const auto& [shape, count] : other.counts_) add(shape, count);
}

PartitionDistribution<double> ShapeTally::frequencies(int n) const {
  auto shapes = enumerate_partitions(n);
  std::vector<double> masses(shapes.size(), 0.0);
  if (total_ > 0) {
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      if (auto it = counts_.find(shapes[i]); it != counts_.end())
        masses[i] = static_cast<double>(it->second) / static_cast<double>(total_);
    }
  }
  for (const auto& [shape, count] : counts_)
    if (shape.size() != n) throw ArgumentError("shape tally: partition of the wrong size");
  return PartitionDistribution<double>(std::move(shapes), std::move(masses));
}

template PartitionDistribution<Rational> pushforward<Rational>(const GroupAlgebraMeasure<Rational>&);
template PartitionDistribution<double> pushforward<double>(const GroupAlgebraMeasure<double>&);

}  // namespace cardrep
