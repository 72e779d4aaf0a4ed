#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cardrep/partitions.hpp"
#include "cardrep/plancherel_chain.hpp"
#include "cardrep/rational.hpp"

namespace cardrep {

/// A subset L of the simple roots {1, ..., n-1} of S_n; index i stands for the
/// root e_i - e_{i+1}. It generates the Young subgroup S_L.
class RootSubset {
 public:
  RootSubset() = default;
  /// Throws ArgumentError for indices outside 1..n-1. Duplicates are merged.
  RootSubset(int n, std::vector<int> indices);

  /// The subset whose Young subgroup has the given consecutive blocks.
  static RootSubset from_composition(const Composition& mu);
  static RootSubset all(int n);
  static RootSubset none(int n);

  /// "1,3" or "empty".
  static RootSubset parse(int n, std::string_view text);

  int degree() const noexcept { return n_; }
  const std::vector<int>& indices() const noexcept { return indices_; }
  bool contains(int index) const noexcept;
  /// Bit i-1 set for each index i.
  std::uint64_t mask() const noexcept { return mask_; }

  std::string to_string() const;

  friend bool operator==(const RootSubset& a, const RootSubset& b) { return a.n_ == b.n_ && a.mask_ == b.mask_; }
  friend std::strong_ordering operator<=>(const RootSubset& a, const RootSubset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.mask_ <=> b.mask_;
  }

 private:
  int n_ = 0;
  std::vector<int> indices_;
  std::uint64_t mask_ = 0;
};

/// Orbit sizes of S_L on {1, ..., n}, in order.
Composition composition_of(const RootSubset& roots);

/// |S_mu| = prod mu_k!.
Integer young_subgroup_order(const Composition& mu);

/// |C n S_mu| / |C| for the class C of cycle type nu, by summing over the ways
/// to share the cycles of nu among the blocks of mu.
Rational class_ratio(const Composition& mu, const Partition& nu);

struct BetaResult {
  Rational beta;
  std::vector<Partition> witnesses;  ///< every non-identity cycle type attaining beta
};

/// Largest class ratio over non-identity classes, with all maximizers.
/// For mu = (1, ..., 1) this is 0 (every non-identity ratio vanishes).
BetaResult beta_parabolic(const Composition& mu);

/// Class ratios of S_mu in canonical class order, labelled as GroupData::symmetric does.
ClassRatioVector ratio_vector_for(const Composition& mu, int max_degree = kDefaultMaxCharacterDegree);

/// Young subgroups of the three named shuffles.
Composition point_stabilizer(int n);           ///< (1, n-1)
Composition top_k_stabilizer(int n, int k);    ///< (1, ..., 1, n-k) with k ones
Composition k_set_stabilizer(int n, int k);    ///< (k, n-k)

/// Closed forms for beta of the named subgroups.
Rational beta_point_stabilizer(int n);         ///< 1 - 2/n
Rational beta_top_k_stabilizer(int n, int k);  ///< (n-k)(n-k-1) / (n(n-1))
Rational beta_k_set_stabilizer(int n, int k);  ///< (C(n-2,k) + C(n-2,k-2)) / C(n,k); stated for n >= 5

}  // namespace cardrep
