#include "cardrep/plancherel_chain.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cardrep/errors.hpp"

namespace cardrep {

namespace {

template <class T>
T raise(const T& base, unsigned exponent) {
  if constexpr (std::is_same_v<T, double>) {
    return std::pow(base, static_cast<double>(exponent));
  } else {
    return power(base, exponent);
  }
}

template <class T>
bool is_negative(const T& value) {
  if constexpr (std::is_same_v<T, double>) {
    return value < -1e-12;
  } else {
    return sgn(value) < 0;
  }
}

}  // namespace

GroupData::GroupData(Integer group_order, std::vector<std::string> class_labels, std::vector<Integer> class_sizes,
                     std::vector<Integer> dimensions, std::vector<std::vector<std::int64_t>> characters,
                     std::vector<std::string> irreducible_labels)
    : order_(std::move(group_order)),
      class_labels_(std::move(class_labels)),
      class_sizes_(std::move(class_sizes)),
      irreducible_labels_(std::move(irreducible_labels)),
      dimensions_(std::move(dimensions)),
      characters_(std::move(characters)) {
  const std::size_t classes = class_labels_.size();
  if (classes == 0) throw ArgumentError("group data: no classes");
  if (class_sizes_.size() != classes) throw ArgumentError("group data: one size per class required");
  if (characters_.size() != classes || dimensions_.size() != classes)
    throw ArgumentError("group data: the number of irreducibles must equal the number of classes");
  for (const auto& row : characters_)
    if (row.size() != classes) throw ArgumentError("group data: character row has the wrong length");
  if (irreducible_labels_.empty()) {
    for (std::size_t i = 0; i < classes; ++i) irreducible_labels_.push_back("rho" + std::to_string(i));
  }
  if (irreducible_labels_.size() != classes) throw ArgumentError("group data: one label per irreducible required");
  if (std::set<std::string>(class_labels_.begin(), class_labels_.end()).size() != classes)
    throw ArgumentError("group data: duplicate class label");
  if (std::set<std::string>(irreducible_labels_.begin(), irreducible_labels_.end()).size() != classes)
    throw ArgumentError("group data: duplicate irreducible label");

  Integer size_total = 0;
  for (const auto& s : class_sizes_) {
    if (s <= 0) throw ArgumentError("group data: class sizes must be positive");
    size_total += s;
  }
  if (size_total != order_) throw ConsistencyError("group data: class sizes do not sum to the group order");

  Integer dim_squares = 0;
  for (const auto& d : dimensions_) {
    if (d <= 0) throw ArgumentError("group data: dimensions must be positive");
    dim_squares += d * d;
  }
  if (dim_squares != order_) throw ConsistencyError("group data: squared dimensions do not sum to the group order");

  bool found_identity = false;
  for (std::size_t c = 0; c < classes && !found_identity; ++c) {
    if (class_sizes_[c] != 1) continue;
    bool all_dims = true;
    for (std::size_t i = 0; i < classes; ++i)
      if (Integer(characters_[i][c]) != dimensions_[i]) all_dims = false;
    if (all_dims) {
      identity_class_ = c;
      found_identity = true;
    }
  }
  if (!found_identity) throw ConsistencyError("group data: no identity class (size 1, values = dimensions)");

  bool found_trivial = false;
  for (std::size_t i = 0; i < classes && !found_trivial; ++i) {
    if (std::all_of(characters_[i].begin(), characters_[i].end(), [](std::int64_t v) { return v == 1; })) {
      trivial_irreducible_ = i;
      found_trivial = true;
    }
  }
  if (!found_trivial) throw ConsistencyError("group data: no trivial character");

  for (std::size_t i = 0; i < classes; ++i) {
    for (std::size_t j = i; j < classes; ++j) {
      Integer inner = 0;
      for (std::size_t c = 0; c < classes; ++c) inner += class_sizes_[c] * characters_[i][c] * characters_[j][c];
      if (inner != (i == j ? order_ : Integer(0)))
        throw ConsistencyError("group data: character rows " + std::to_string(i) + " and " + std::to_string(j) +
                               " violate orthogonality");
    }
  }
}

GroupData GroupData::symmetric(const CharacterTable& table) {
  std::vector<std::string> labels;
  std::vector<Integer> dims;
  std::vector<std::vector<std::int64_t>> rows;
  const std::size_t identity = table.size() - 1;  // (1^n) is last in canonical order
  for (std::size_t i = 0; i < table.size(); ++i) {
    labels.push_back(table.partitions()[i].to_string());
    dims.emplace_back(table.value(i, identity));
    rows.push_back(table.row(i));
  }
  return GroupData(table.group_order(), labels, table.class_sizes(), std::move(dims), std::move(rows), labels);
}

std::size_t GroupData::class_index(const std::string& label) const {
  auto it = std::find(class_labels_.begin(), class_labels_.end(), label);
  if (it == class_labels_.end()) throw ArgumentError("unknown class label '" + label + "'");
  return static_cast<std::size_t>(it - class_labels_.begin());
}

std::size_t GroupData::irreducible_index(const std::string& label) const {
  auto it = std::find(irreducible_labels_.begin(), irreducible_labels_.end(), label);
  if (it == irreducible_labels_.end()) throw ArgumentError("unknown irreducible label '" + label + "'");
  return static_cast<std::size_t>(it - irreducible_labels_.begin());
}

template <class T>
std::vector<T> GroupData::plancherel() const {
  std::vector<T> out;
  out.reserve(dimensions_.size());
  for (const auto& d : dimensions_) out.push_back(from_rational<T>(ratio(d * d, order_)));
  return out;
}

ClassRatioVector::ClassRatioVector(Integer subgroup_order, std::vector<std::string> class_labels,
                                   std::vector<Rational> ratios)
    : subgroup_order_(std::move(subgroup_order)), labels_(std::move(class_labels)), ratios_(std::move(ratios)) {
  if (subgroup_order_ <= 0) throw ArgumentError("class ratios: subgroup order must be positive");
  if (labels_.size() != ratios_.size()) throw ArgumentError("class ratios: one ratio per class required");
  for (const auto& q : ratios_)
    if (q < 0 || q > 1) throw ArgumentError("class ratios: every ratio must lie in [0, 1]");
}

void ClassRatioVector::check_against(const GroupData& group) const {
  if (labels_ != group.class_labels()) throw ArgumentError("class ratios: class labels do not match the group");
  if (ratios_[group.identity_class()] != 1) throw ConsistencyError("class ratios: identity class must have ratio 1");
  Rational count = 0;
  for (std::size_t c = 0; c < ratios_.size(); ++c) count += Rational(group.class_sizes()[c]) * ratios_[c];
  if (count != Rational(subgroup_order_))
    throw ConsistencyError("class ratios: sum of |C| * ratio(C) differs from the subgroup order");
  if (group.group_order() % subgroup_order_ != 0)
    throw ConsistencyError("class ratios: subgroup order does not divide the group order");
}

ClassRatioVector ClassRatioVector::trivial_subgroup(const GroupData& group) {
  std::vector<Rational> ratios(group.class_count(), Rational(0));
  ratios[group.identity_class()] = 1;
  return ClassRatioVector(Integer(1), group.class_labels(), std::move(ratios));
}

ClassRatioVector ClassRatioVector::whole_group(const GroupData& group) {
  return ClassRatioVector(group.group_order(), group.class_labels(),
                          std::vector<Rational>(group.class_count(), Rational(1)));
}

double ChainSpectrum::eigenfunction(std::size_t cls, std::size_t irreducible) const {
  return std::sqrt(class_sizes[cls].get_d()) * character_ratios[cls][irreducible].get_d();
}

bool SpectralBound::dominates(const Rational& l1, const Integer& group_order) const {
  if (l1 < 0) return false;
  Rational rhs = Rational(group_order) * power(beta, 2 * steps);
  return l1 * l1 <= rhs;
}

template <class T>
SquareMatrix<T> transition_matrix(const GroupData& group, std::span<const Rational> eigenvalues) {
  const std::size_t k = group.irreducible_count();
  if (eigenvalues.size() != group.class_count()) throw ArgumentError("transition matrix: one eigenvalue per class");
  // Class weights |C| * eigenvalue(C) / |G|, shared by every entry.
  std::vector<T> weight;
  for (std::size_t c = 0; c < group.class_count(); ++c)
    weight.push_back(from_rational<T>(ratio(group.class_sizes()[c], group.group_order()) * eigenvalues[c]));

  SquareMatrix<T> matrix(k);
  for (std::size_t rho = 0; rho < k; ++rho) {
    for (std::size_t sigma = 0; sigma < k; ++sigma) {
      T sum(0);
      for (std::size_t c = 0; c < group.class_count(); ++c) {
        const std::int64_t product = group.character(rho, c) * group.character(sigma, c);
        if (product == 0) continue;
        sum += weight[c] * T(product);
      }
      T entry = sum * from_rational<T>(ratio(group.dimensions()[sigma], group.dimensions()[rho]));
      if (is_negative(entry))
        throw ConsistencyError("transition matrix: negative entry at (" + group.irreducible_labels()[rho] + ", " +
                               group.irreducible_labels()[sigma] + ")");
      matrix(rho, sigma) = entry;
    }
  }
  return matrix;
}

template <class T>
SquareMatrix<T> transition_matrix(const GroupData& group, const ClassRatioVector& ratios) {
  ratios.check_against(group);
  return transition_matrix<T>(group, std::span<const Rational>(ratios.ratios()));
}

ChainSpectrum spectrum(const GroupData& group, const ClassRatioVector& ratios) {
  ratios.check_against(group);
  ChainSpectrum out;
  out.eigenvalues = ratios.ratios();
  out.class_sizes = group.class_sizes();
  for (std::size_t c = 0; c < group.class_count(); ++c) {
    std::vector<Rational> column;
    for (std::size_t rho = 0; rho < group.irreducible_count(); ++rho)
      column.push_back(ratio(Integer(group.character(rho, c)), group.dimensions()[rho]));
    out.character_ratios.push_back(std::move(column));
  }
  return out;
}

template <class T>
Distribution<std::string, T> r_step_from_trivial(const GroupData& group, std::span<const Rational> eigenvalues,
                                                 unsigned r) {
  if (eigenvalues.size() != group.class_count()) throw ArgumentError("r-step: one eigenvalue per class");
  std::vector<T> class_term;
  for (std::size_t c = 0; c < group.class_count(); ++c) {
    T term = raise(from_rational<T>(eigenvalues[c]), r);
    term *= from_rational<T>(ratio(group.class_sizes()[c], group.group_order()));
    class_term.push_back(term);
  }
  std::vector<T> masses;
  for (std::size_t rho = 0; rho < group.irreducible_count(); ++rho) {
    T sum(0);
    for (std::size_t c = 0; c < group.class_count(); ++c) {
      const std::int64_t chi = group.character(rho, c);
      if (chi != 0) sum += class_term[c] * T(chi);
    }
    sum *= from_rational<T>(Rational(group.dimensions()[rho]));
    masses.push_back(sum);
  }
  return Distribution<std::string, T>(group.irreducible_labels(), std::move(masses));
}

template <class T>
Distribution<std::string, T> r_step_from_trivial(const GroupData& group, const ClassRatioVector& ratios,
                                                 unsigned r) {
  ratios.check_against(group);
  return r_step_from_trivial<T>(group, std::span<const Rational>(ratios.ratios()), r);
}

template <class T>
Distribution<std::string, T> r_step_by_matrix(const GroupData& group, const SquareMatrix<T>& matrix, unsigned r) {
  if (matrix.size() != group.irreducible_count()) throw ArgumentError("r-step: matrix size mismatch");
  std::vector<T> row(group.irreducible_count(), T(0));
  row[group.trivial_irreducible()] = T(1);
  for (unsigned step = 0; step < r; ++step) row = matrix.left_multiply(row);
  return Distribution<std::string, T>(group.irreducible_labels(), std::move(row));
}

Integer tensor_power_multiplicity(const GroupData& group, const ClassRatioVector& ratios, std::size_t irreducible,
                                  unsigned r) {
  if (irreducible >= group.irreducible_count()) throw ArgumentError("tensor multiplicity: irreducible out of range");
  auto dist = r_step_from_trivial<Rational>(group, ratios, r);
  Rational index = ratio(group.group_order(), ratios.subgroup_order());
  Rational value = power(index, r) * dist[irreducible] / Rational(group.dimensions()[irreducible]);
  if (value.get_den() != 1 || value < 0)
    throw ConsistencyError("tensor multiplicity: non-integral value " + to_string(value));
  return value.get_num();
}

SpectralBound spectral_bound(const GroupData& group, const ClassRatioVector& ratios, unsigned r) {
  ratios.check_against(group);
  if (group.group_order() <= 1) throw ArgumentError("spectral bound: the group must be nontrivial");
  SpectralBound out;
  out.steps = r;
  bool first = true;
  for (std::size_t c = 0; c < group.class_count(); ++c) {
    if (c == group.identity_class()) continue;
    const Rational& q = ratios.ratios()[c];
    if (first || q > out.beta) {
      out.beta = q;
      out.witness_classes.clear();
      first = false;
    }
    if (q == out.beta) out.witness_classes.push_back(c);
  }
  out.bound = std::sqrt(group.group_order().get_d()) * std::pow(out.beta.get_d(), static_cast<double>(r));
  return out;
}

template <class T>
T l1_to_plancherel(const Distribution<std::string, T>& dist, const GroupData& group) {
  if (dist.labels() != group.irreducible_labels()) throw ArgumentError("l1: distribution labels do not match");
  const auto pi = group.plancherel<T>();
  T sum(0);
  for (std::size_t i = 0; i < pi.size(); ++i) sum += abs_value(T(dist[i] - pi[i]));
  return sum;
}

template <class T>
PartitionDistribution<T> as_partition_distribution(const Distribution<std::string, T>& dist) {
  std::vector<Partition> labels;
  labels.reserve(dist.size());
  for (const auto& label : dist.labels()) labels.push_back(Partition::parse(label));
  return PartitionDistribution<T>(std::move(labels), dist.masses());
}

#define CARDREP_CHAIN_INSTANTIATE(T)                                                                      \
  template std::vector<T> GroupData::plancherel<T>() const;                                               \
  template SquareMatrix<T> transition_matrix<T>(const GroupData&, const ClassRatioVector&);               \
  template SquareMatrix<T> transition_matrix<T>(const GroupData&, std::span<const Rational>);             \
  template Distribution<std::string, T> r_step_from_trivial<T>(const GroupData&, const ClassRatioVector&, \
                                                               unsigned);                                 \
  template Distribution<std::string, T> r_step_from_trivial<T>(const GroupData&,                         \
                                                               std::span<const Rational>, unsigned);      \
  template Distribution<std::string, T> r_step_by_matrix<T>(const GroupData&, const SquareMatrix<T>&,     \
                                                            unsigned);                                    \
  template T l1_to_plancherel<T>(const Distribution<std::string, T>&, const GroupData&);                  \
  template PartitionDistribution<T> as_partition_distribution<T>(const Distribution<std::string, T>&);

CARDREP_CHAIN_INSTANTIATE(Rational)
CARDREP_CHAIN_INSTANTIATE(double)

}  // namespace cardrep
