#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cardrep/partitions.hpp"
#include "cardrep/rational.hpp"

namespace cardrep {

inline constexpr int kDefaultMaxCharacterDegree = 12;

/// Number of permutations of cycle type mu: n! / prod_i i^{m_i} m_i!.
Integer class_size(const Partition& mu);

/// (-1)^(n - number of cycles).
int sign(const Partition& cycle_type);

/// chi^lambda evaluated on the class of cycle type mu (Murnaghan-Nakayama).
/// Throws ArgumentError when |lambda| != |mu|.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// Full character table of S_n. Rows (irreducibles) and columns (classes) are
/// both indexed by partitions in canonical order.
class CharacterTable {
 public:
  /// Throws CapacityError when n exceeds max_degree.
  static CharacterTable build(int n, int max_degree = kDefaultMaxCharacterDegree);

  int degree() const noexcept { return n_; }
  const std::vector<Partition>& partitions() const noexcept { return partitions_; }
  std::size_t size() const noexcept { return partitions_.size(); }

  std::int64_t value(std::size_t irreducible, std::size_t cls) const { return values_[irreducible][cls]; }
  const std::vector<std::int64_t>& row(std::size_t irreducible) const { return values_[irreducible]; }
  const Integer& class_size(std::size_t cls) const { return class_sizes_[cls]; }
  const std::vector<Integer>& class_sizes() const noexcept { return class_sizes_; }

  /// Throws ArgumentError for a partition of a different n.
  std::size_t index_of(const Partition& lambda) const;

  Integer group_order() const { return factorial(n_); }

 private:
  int n_ = 0;
  std::vector<Partition> partitions_;
  std::vector<std::vector<std::int64_t>> values_;
  std::vector<Integer> class_sizes_;
};

/// Multiplicity of the outer product tau_1 x tau_2 x ... in the restriction of
/// chi^lambda to the Young subgroup S_mu, as an inner product over the classes
/// of S_mu (tuples of cycle types).
Integer restriction_multiplicity(const Partition& lambda, const Composition& mu,
                                 std::span<const Partition> tau);

}  // namespace cardrep
