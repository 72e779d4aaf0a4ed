#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cardrep/partitions.hpp"

namespace cardrep {

/// A permutation of {1, ..., n} in one-line notation g(1) g(2) ... g(n).
/// Products compose as functions: (g * h)(i) = g(h(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws ArgumentError unless the values are exactly 1..n.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation reversal(int n);
  /// "2 1 3" (whitespace or comma separated).
  static Permutation parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(values_.size()); }
  /// g(i), 1-based.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const noexcept { return values_; }

  Permutation inverse() const;
  Partition cycle_type() const;
  bool is_identity() const noexcept;

  /// Space-separated one-line notation.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<int> one_line, Unchecked) : values_(std::move(one_line)) {}
  friend Permutation unrank(int n, std::uint64_t rank);

  std::vector<int> values_;
};

/// Lexicographic rank in [0, n!), via the Lehmer code. Requires n <= 20.
std::uint64_t rank(const Permutation& g);
Permutation unrank(int n, std::uint64_t rank);

/// n! as a machine integer; throws CapacityError for n > 20.
std::uint64_t factorial_u64(int n);

/// Positions i in 1..n-1 with g(i) > g(i+1).
std::vector<int> descent_set(const Permutation& g);

/// Bit i-1 set for each descent i.
std::uint64_t descent_mask(const Permutation& g);

/// All permutations of n in lexicographic (rank) order.
std::vector<Permutation> all_permutations(int n);

}  // namespace cardrep
