#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cardrep/parabolic.hpp"
#include "cardrep/partitions.hpp"
#include "cardrep/permutation.hpp"
#include "cardrep/rational.hpp"

namespace cardrep {

/// Exact work over all of S_n is limited to this degree unless overridden.
inline constexpr int kDefaultMaxExactDegree = 8;

/// Weights p_L over root subsets L of S_n, summing to exactly 1. Defines the
/// probability measure sum_L p_L (|S_L| / n!) X_L on S_n, where X_L is the set
/// of permutations whose descent set avoids L.
class ShuffleSpec {
 public:
  /// Throws ArgumentError for negative weights, mismatched degrees, or a total other than 1.
  ShuffleSpec(int n, std::map<RootSubset, Rational> weights);

  /// L = all roots except 1: composition (1, n-1).
  static ShuffleSpec top_to_random(int n);
  /// L = all roots except 1..k: composition (1, ..., 1, n-k).
  static ShuffleSpec top_k_to_random(int n, int k);
  /// L = all roots except k: composition (k, n-k).
  static ShuffleSpec riffle_k_cut(int n, int k);
  /// Point mass on a single root subset.
  static ShuffleSpec single(const RootSubset& roots);
  /// Convex combination; weights of repeated subsets are added.
  static ShuffleSpec mixture(const std::vector<std::pair<Rational, ShuffleSpec>>& parts);

  int degree() const noexcept { return n_; }
  const std::map<RootSubset, Rational>& weights() const noexcept { return weights_; }

  friend bool operator==(const ShuffleSpec&, const ShuffleSpec&) = default;

 private:
  int n_ = 0;
  std::map<RootSubset, Rational> weights_;
};

/// A probability measure on S_n stored densely by permutation rank.
template <class T>
class GroupAlgebraMeasure {
 public:
  /// Throws CapacityError when n > max_degree.
  explicit GroupAlgebraMeasure(int n, int max_degree = kDefaultMaxExactDegree);

  static GroupAlgebraMeasure point_mass(const Permutation& g, int max_degree = kDefaultMaxExactDegree);
  static GroupAlgebraMeasure uniform(int n, int max_degree = kDefaultMaxExactDegree);

  int degree() const noexcept { return n_; }
  int max_degree() const noexcept { return max_degree_; }
  std::size_t group_size() const noexcept { return masses_.size(); }

  const T& mass(const Permutation& g) const { return masses_[rank(g)]; }
  const T& mass_at_rank(std::uint64_t r) const { return masses_[r]; }
  void add(std::uint64_t r, const T& value) { masses_[r] += value; }
  const std::vector<T>& masses() const noexcept { return masses_; }

  std::size_t support_size() const;
  /// Ranks with nonzero mass, ascending.
  std::vector<std::uint64_t> support() const;
  T total() const;

  friend bool operator==(const GroupAlgebraMeasure&, const GroupAlgebraMeasure&) = default;

 private:
  int n_ = 0;
  int max_degree_ = kDefaultMaxExactDegree;
  std::vector<T> masses_;
};

/// Permutations whose descent set is disjoint from L, in rank order.
std::vector<Permutation> x_l_support(const RootSubset& roots, int max_degree = kDefaultMaxExactDegree);

/// Mass of g: sum over L with descent_set(g) n L empty of p_L |S_L| / n!.
template <class T>
GroupAlgebraMeasure<T> measure_of(const ShuffleSpec& spec, int max_degree = kDefaultMaxExactDegree);

/// Distribution of g * h for independent g ~ a, h ~ b.
template <class T>
GroupAlgebraMeasure<T> convolve(const GroupAlgebraMeasure<T>& a, const GroupAlgebraMeasure<T>& b);

/// Distribution of the product g_1 g_2 ... g_r of independent draws from
/// measure_of(spec); r = 0 is the point mass at the identity.
template <class T>
GroupAlgebraMeasure<T> convolution_power(const ShuffleSpec& spec, unsigned r,
                                         int max_degree = kDefaultMaxExactDegree);

/// Seedable pseudo-random source: std::mt19937_64 seeded through
/// std::seed_seq from (seed, stream). Distinct streams of one seed are
/// independent substreams for parallel workers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }
  std::mt19937_64& engine() noexcept { return engine_; }

  Rng split(std::uint64_t stream) const { return Rng(seed_, stream); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

/// Draws from measure_of(spec) at any n: picks L with probability p_L, then a
/// uniform word with content composition_of(L), which fixes the unique g in
/// X_L sending block k of positions onto the positions of letter k.
class ShuffleSampler {
 public:
  explicit ShuffleSampler(const ShuffleSpec& spec);

  Permutation operator()(Rng& rng);
  /// Writes g(1..n) into `one_line` (resized to n).
  void draw(Rng& rng, std::vector<int>& one_line);

  int degree() const noexcept { return n_; }

 private:
  int n_;
  std::vector<std::vector<int>> words_;  // sorted letter multiset per subset
  std::vector<std::vector<int>> block_starts_;
  std::discrete_distribution<std::size_t> choose_;
  std::vector<int> word_;
  std::vector<int> cursor_;
};

Permutation sample(const ShuffleSpec& spec, Rng& rng);

/// Proportion of block-ordered set partitions of type mu whose every block is
/// a union of cycles of a permutation of cycle type nu.
Rational bhr_eigenvalue(const Composition& mu, const Partition& nu);

struct IsospectralReport {
  bool equal = false;
  /// Chain side: value -> number of conjugacy classes carrying it.
  std::map<Rational, std::size_t> chain_side;
  /// Shuffle side: value -> number of permutations carrying it.
  std::map<Rational, std::size_t> shuffle_side;
};

/// Compares the eigenvalue sets of the mixed chain and of the shuffle element.
IsospectralReport isospectral_check(const ShuffleSpec& spec, int max_degree = kDefaultMaxExactDegree);

#define CARDREP_SHUFFLE_EXTERN(T)                                                                         \
  extern template class GroupAlgebraMeasure<T>;                                                           \
  extern template GroupAlgebraMeasure<T> measure_of<T>(const ShuffleSpec&, int);                          \
  extern template GroupAlgebraMeasure<T> convolve<T>(const GroupAlgebraMeasure<T>&,                       \
                                                     const GroupAlgebraMeasure<T>&);                      \
  extern template GroupAlgebraMeasure<T> convolution_power<T>(const ShuffleSpec&, unsigned, int);

CARDREP_SHUFFLE_EXTERN(Rational)
CARDREP_SHUFFLE_EXTERN(double)
#undef CARDREP_SHUFFLE_EXTERN

}  // namespace cardrep
