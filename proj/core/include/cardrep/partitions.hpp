#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cardrep/errors.hpp"
#include "cardrep/rational.hpp"

namespace cardrep {

/// Weakly decreasing sequence of positive integers. Labels both the
/// irreducible representations and the conjugacy classes (cycle types) of S_n.
///
/// The canonical order on partitions of a fixed n is reverse-lexicographic,
/// largest first: (4), (3,1), (2,2), (2,1,1), (1,1,1,1). Every table and
/// distribution in this library is laid out in that order.
class Partition {
 public:
  Partition() = default;

  /// Throws ArgumentError unless the parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts arbitrary positive parts into a partition.
  static Partition from_unordered(std::vector<int> parts);

  /// Parses "3,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  static Partition row(int n);
  static Partition column(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based), or 0 past the last part.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// Number of parts equal to `part` (m_j in the usual notation).
  int multiplicity(int part) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Ordered sequence of positive integers; the block sizes of a Young subgroup.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  /// Parses "1,2"; the empty string is the empty composition.
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  /// The partition obtained by sorting the parts.
  Partition sorted() const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in canonical (reverse-lexicographic) order. n = 0 gives
/// the single empty partition.
std::vector<Partition> enumerate_partitions(int n);

/// All 2^(n-1) compositions of n >= 1, ordered as the root subsets they encode.
std::vector<Composition> enumerate_compositions(int n);

Partition conjugate(const Partition& lambda);

/// Number of standard Young tableaux of shape lambda, by the hook length formula.
Integer dimension(const Partition& lambda);

/// Dominance order: lambda_1 + ... + lambda_i >= mu_1 + ... + mu_i for all i.
bool dominates(const Partition& lambda, const Partition& mu);

/// Number of semistandard tableaux of shape lambda with content mu, found by
/// filling cells row by row with backtracking. Throws on |lambda| != |mu|.
Integer kostka(const Partition& lambda, const Composition& mu);
Integer kostka(const Partition& lambda, const Partition& mu);

/// Finite distribution over labels, stored in label order.
template <class Label, class T>
class Distribution {
 public:
  Distribution() = default;
  Distribution(std::vector<Label> labels, std::vector<T> masses)
      : labels_(std::move(labels)), masses_(std::move(masses)) {
    if (labels_.size() != masses_.size())
      throw ArgumentError("distribution: label and mass counts differ");
  }

  const std::vector<Label>& labels() const noexcept { return labels_; }
  const std::vector<T>& masses() const noexcept { return masses_; }
  std::size_t size() const noexcept { return labels_.size(); }

  const T& operator[](std::size_t i) const { return masses_[i]; }

  const T& at(const Label& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return masses_[i];
    throw ArgumentError("distribution: unknown label");
  }

  T total() const {
    T sum(0);
    for (const auto& m : masses_) sum += m;
    return sum;
  }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<Label> labels_;
  std::vector<T> masses_;
};

template <class T>
using PartitionDistribution = Distribution<Partition, T>;

/// dim(lambda)^2 / n! on every partition of n >= 1.
template <class T>
PartitionDistribution<T> plancherel(int n);

extern template PartitionDistribution<Rational> plancherel<Rational>(int);
extern template PartitionDistribution<double> plancherel<double>(int);

}  // namespace cardrep
