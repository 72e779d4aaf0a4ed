#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cardrep/characters.hpp"
#include "cardrep/partitions.hpp"
#include "cardrep/rational.hpp"

namespace cardrep {

/// Character data of a finite group G: classes with sizes, and one row of
/// integer character values per irreducible. Validated on construction
/// (orthogonality, sum of squared dimensions, identity class, trivial row).
class GroupData {
 public:
  /// `characters[i][c]` is the value of irreducible i on class c; dimensions
  /// are listed separately and must match the values on the identity class.
  /// Empty `irreducible_labels` are replaced by "rho0", "rho1", ...
  GroupData(Integer group_order, std::vector<std::string> class_labels, std::vector<Integer> class_sizes,
            std::vector<Integer> dimensions, std::vector<std::vector<std::int64_t>> characters,
            std::vector<std::string> irreducible_labels = {});

  /// S_n, with both classes and irreducibles labelled by partition strings.
  static GroupData symmetric(const CharacterTable& table);

  const Integer& group_order() const noexcept { return order_; }
  std::size_t class_count() const noexcept { return class_labels_.size(); }
  std::size_t irreducible_count() const noexcept { return dimensions_.size(); }

  const std::vector<std::string>& class_labels() const noexcept { return class_labels_; }
  const std::vector<Integer>& class_sizes() const noexcept { return class_sizes_; }
  const std::vector<std::string>& irreducible_labels() const noexcept { return irreducible_labels_; }
  const std::vector<Integer>& dimensions() const noexcept { return dimensions_; }
  std::int64_t character(std::size_t irreducible, std::size_t cls) const { return characters_[irreducible][cls]; }

  std::size_t identity_class() const noexcept { return identity_class_; }
  std::size_t trivial_irreducible() const noexcept { return trivial_irreducible_; }

  std::size_t class_index(const std::string& label) const;
  std::size_t irreducible_index(const std::string& label) const;

  /// dim^2 / |G| for every irreducible.
  template <class T>
  std::vector<T> plancherel() const;

 private:
  Integer order_;
  std::vector<std::string> class_labels_;
  std::vector<Integer> class_sizes_;
  std::vector<std::string> irreducible_labels_;
  std::vector<Integer> dimensions_;
  std::vector<std::vector<std::int64_t>> characters_;
  std::size_t identity_class_ = 0;
  std::size_t trivial_irreducible_ = 0;
};

/// For each class C of G, the fraction |C n H| / |C| for a subgroup H. This is
/// everything the chain needs to know about H.
class ClassRatioVector {
 public:
  ClassRatioVector(Integer subgroup_order, std::vector<std::string> class_labels, std::vector<Rational> ratios);

  const Integer& subgroup_order() const noexcept { return subgroup_order_; }
  const std::vector<std::string>& class_labels() const noexcept { return labels_; }
  const std::vector<Rational>& ratios() const noexcept { return ratios_; }

  /// Throws ArgumentError on a label mismatch and ConsistencyError when the
  /// ratios fail to count a subgroup (identity ratio 1, sum |C| ratio = |H|).
  void check_against(const GroupData& group) const;

  /// Ratio 1 on the identity class, 0 elsewhere.
  static ClassRatioVector trivial_subgroup(const GroupData& group);
  /// All ratios 1.
  static ClassRatioVector whole_group(const GroupData& group);

 private:
  Integer subgroup_order_;
  std::vector<std::string> labels_;
  std::vector<Rational> ratios_;
};

template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  /// Row vector times matrix.
  std::vector<T> left_multiply(std::span<const T> row) const {
    std::vector<T> out(n_, T(0));
    for (std::size_t i = 0; i < n_; ++i) {
      if (row[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out[j] += row[i] * (*this)(i, j);
    }
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

/// Eigen-data of the chain. The eigenfunction for class C is
/// psi_C(rho) = sqrt(|C|) * chi^rho(C) / dim(rho); the square root is kept
/// apart so that exact identities stay rational.
struct ChainSpectrum {
  std::vector<Rational> eigenvalues;                    ///< per class: |C n H| / |C|
  std::vector<Integer> class_sizes;                     ///< per class
  std::vector<std::vector<Rational>> character_ratios;  ///< [class][irreducible]: chi^rho(C) / dim(rho)

  double eigenfunction(std::size_t cls, std::size_t irreducible) const;
};

struct SpectralBound {
  Rational beta;                             ///< max ratio over non-identity classes
  std::vector<std::size_t> witness_classes;  ///< every non-identity class attaining beta
  unsigned steps = 0;
  double bound = 0.0;                        ///< sqrt(|G|) * beta^steps

  /// Exact test of l1 <= sqrt(|G|) beta^r, by comparing squares.
  bool dominates(const Rational& l1, const Integer& group_order) const;
};

/// J(rho, sigma) = (dim sigma / dim rho) * sum_C (|C|/|G|) ratio(C) chi^rho(C) chi^sigma(C).
/// Throws ConsistencyError on a negative entry.
template <class T>
SquareMatrix<T> transition_matrix(const GroupData& group, const ClassRatioVector& ratios);

/// Same formula with arbitrary per-class eigenvalues (used for mixtures of chains).
template <class T>
SquareMatrix<T> transition_matrix(const GroupData& group, std::span<const Rational> eigenvalues);

ChainSpectrum spectrum(const GroupData& group, const ClassRatioVector& ratios);

/// Distribution after r steps from the trivial representation:
/// dim(rho) * sum_C eigenvalue(C)^r |C| chi^rho(C) / |G|.
template <class T>
Distribution<std::string, T> r_step_from_trivial(const GroupData& group, const ClassRatioVector& ratios,
                                                 unsigned r);

template <class T>
Distribution<std::string, T> r_step_from_trivial(const GroupData& group, std::span<const Rational> eigenvalues,
                                                 unsigned r);

/// Same quantity by r applications of the transition matrix to the trivial row.
template <class T>
Distribution<std::string, T> r_step_by_matrix(const GroupData& group, const SquareMatrix<T>& matrix, unsigned r);

/// <chi^rho, (Ind_H^G 1)^r> = (|G|/|H|)^r J_1^r(rho) / dim(rho). Exact only;
/// throws ConsistencyError if the value is not a nonnegative integer.
Integer tensor_power_multiplicity(const GroupData& group, const ClassRatioVector& ratios,
                                  std::size_t irreducible, unsigned r);

/// Requires |G| > 1.
SpectralBound spectral_bound(const GroupData& group, const ClassRatioVector& ratios, unsigned r);

/// sum_rho |dist(rho) - pi(rho)|.
template <class T>
T l1_to_plancherel(const Distribution<std::string, T>& dist, const GroupData& group);

/// Relabels an S_n distribution (labels are partition strings) by partitions.
template <class T>
PartitionDistribution<T> as_partition_distribution(const Distribution<std::string, T>& dist);

#define CARDREP_CHAIN_EXTERN(T)                                                                                  \
  extern template std::vector<T> GroupData::plancherel<T>() const;                                               \
  extern template SquareMatrix<T> transition_matrix<T>(const GroupData&, const ClassRatioVector&);               \
  extern template SquareMatrix<T> transition_matrix<T>(const GroupData&, std::span<const Rational>);             \
  extern template Distribution<std::string, T> r_step_from_trivial<T>(const GroupData&, const ClassRatioVector&, \
                                                                      unsigned);                                 \
  extern template Distribution<std::string, T> r_step_from_trivial<T>(const GroupData&,                         \
                                                                      std::span<const Rational>, unsigned);      \
  extern template Distribution<std::string, T> r_step_by_matrix<T>(const GroupData&, const SquareMatrix<T>&,     \
                                                                   unsigned);                                    \
  extern template T l1_to_plancherel<T>(const Distribution<std::string, T>&, const GroupData&);                  \
  extern template PartitionDistribution<T> as_partition_distribution<T>(const Distribution<std::string, T>&);

CARDREP_CHAIN_EXTERN(Rational)
CARDREP_CHAIN_EXTERN(double)
#undef CARDREP_CHAIN_EXTERN

}  // namespace cardrep
