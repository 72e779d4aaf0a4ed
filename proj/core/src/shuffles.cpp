#include "cardrep/shuffles.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cardrep/errors.hpp"

namespace cardrep {

ShuffleSpec::ShuffleSpec(int n, std::map<RootSubset, Rational> weights) : n_(n), weights_(std::move(weights)) {
  if (n < 1) throw ArgumentError("shuffle spec: n must be positive");
  Rational total = 0;
  for (auto it = weights_.begin(); it != weights_.end();) {
    if (it->first.degree() != n) throw ArgumentError("shuffle spec: root subset of the wrong degree");
    if (it->second < 0) throw ArgumentError("shuffle spec: negative weight for L = " + it->first.to_string());
    total += it->second;
    if (it->second == 0) {
      it = weights_.erase(it);
    } else {
      ++it;
    }
  }
  if (total != 1) throw ArgumentError("shuffle spec: weights sum to " + cardrep::to_string(total) + ", not 1");
}

ShuffleSpec ShuffleSpec::single(const RootSubset& roots) {
  return ShuffleSpec(roots.degree(), {{roots, Rational(1)}});
}

ShuffleSpec ShuffleSpec::top_to_random(int n) { return top_k_to_random(n, 1); }

ShuffleSpec ShuffleSpec::top_k_to_random(int n, int k) {
  return single(RootSubset::from_composition(top_k_stabilizer(n, k)));
}

ShuffleSpec ShuffleSpec::riffle_k_cut(int n, int k) {
  return single(RootSubset::from_composition(k_set_stabilizer(n, k)));
}

ShuffleSpec ShuffleSpec::mixture(const std::vector<std::pair<Rational, ShuffleSpec>>& parts) {
  if (parts.empty()) throw ArgumentError("shuffle mixture: no components");
  const int n = parts.front().second.degree();
  std::map<RootSubset, Rational> weights;
  for (const auto& [w, spec] : parts) {
    if (spec.degree() != n) throw ArgumentError("shuffle mixture: components of different degree");
    for (const auto& [roots, p] : spec.weights()) weights[roots] += w * p;
  }
  return ShuffleSpec(n, std::move(weights));
}

template <class T>
GroupAlgebraMeasure<T>::GroupAlgebraMeasure(int n, int max_degree) : n_(n), max_degree_(max_degree) {
  if (n < 1) throw ArgumentError("measure: n must be positive");
  if (n > max_degree)
    throw CapacityError("exact work over S_n is limited to n <= " + std::to_string(max_degree) + " (n = " +
                        std::to_string(n) + ")");
  masses_.assign(static_cast<std::size_t>(factorial_u64(n)), T(0));
}

template <class T>
GroupAlgebraMeasure<T> GroupAlgebraMeasure<T>::point_mass(const Permutation& g, int max_degree) {
  GroupAlgebraMeasure m(g.degree(), max_degree);
  m.masses_[rank(g)] = T(1);
  return m;
}

template <class T>
GroupAlgebraMeasure<T> GroupAlgebraMeasure<T>::uniform(int n, int max_degree) {
  GroupAlgebraMeasure m(n, max_degree);
  const T each = from_rational<T>(ratio(Integer(1), factorial(n)));
  std::fill(m.masses_.begin(), m.masses_.end(), each);
  return m;
}

template <class T>
std::size_t GroupAlgebraMeasure<T>::support_size() const {
  return static_cast<std::size_t>(std::count_if(masses_.begin(), masses_.end(), [](const T& v) { return v != 0; }));
}

template <class T>
std::vector<std::uint64_t> GroupAlgebraMeasure<T>::support() const {
  std::vector<std::uint64_t> out;
  for (std::size_t r = 0; r < masses_.size(); ++r)
    if (masses_[r] != 0) out.push_back(r);
  return out;
}

template <class T>
T GroupAlgebraMeasure<T>::total() const {
  T sum(0);
  for (const auto& v : masses_) sum += v;
  return sum;
}

std::vector<Permutation> x_l_support(const RootSubset& roots, int max_degree) {
  const int n = roots.degree();
  if (n > max_degree)
    throw CapacityError("X_L enumeration is limited to n <= " + std::to_string(max_degree));
  std::vector<Permutation> out;
  for (auto& g : all_permutations(n))
    if ((descent_mask(g) & roots.mask()) == 0) out.push_back(std::move(g));
  return out;
}

template <class T>
GroupAlgebraMeasure<T> measure_of(const ShuffleSpec& spec, int max_degree) {
  const int n = spec.degree();
  GroupAlgebraMeasure<T> m(n, max_degree);
  const Integer order = factorial(n);
  std::vector<std::pair<std::uint64_t, T>> terms;
  for (const auto& [roots, p] : spec.weights())
    terms.emplace_back(roots.mask(), from_rational<T>(p * ratio(young_subgroup_order(composition_of(roots)), order)));
  for (std::uint64_t r = 0; r < m.group_size(); ++r) {
    const std::uint64_t descents = descent_mask(unrank(n, r));
    for (const auto& [mask, mass] : terms)
      if ((descents & mask) == 0) m.add(r, mass);
  }
  return m;
}

template <class T>
GroupAlgebraMeasure<T> convolve(const GroupAlgebraMeasure<T>& a, const GroupAlgebraMeasure<T>& b) {
  if (a.degree() != b.degree()) throw ArgumentError("convolve: degrees differ");
  const int n = a.degree();
  GroupAlgebraMeasure<T> out(n, std::max(a.max_degree(), b.max_degree()));
  std::vector<std::pair<Permutation, const T*>> right;
  for (auto r : b.support()) right.emplace_back(unrank(n, r), &b.mass_at_rank(r));
  for (auto r : a.support()) {
    const Permutation g = unrank(n, r);
    const T& ga = a.mass_at_rank(r);
    for (const auto& [h, hb] : right) out.add(rank(g * h), ga * *hb);
  }
  return out;
}

template <class T>
GroupAlgebraMeasure<T> convolution_power(const ShuffleSpec& spec, unsigned r, int max_degree) {
  auto result = GroupAlgebraMeasure<T>::point_mass(Permutation::identity(spec.degree()), max_degree);
  if (r == 0) return result;
  const auto step = measure_of<T>(spec, max_degree);
  for (unsigned i = 0; i < r; ++i) result = convolve(result, step);
  return result;
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

ShuffleSampler::ShuffleSampler(const ShuffleSpec& spec) : n_(spec.degree()) {
  std::vector<double> probabilities;
  for (const auto& [roots, p] : spec.weights()) {
    const auto mu = composition_of(roots);
    std::vector<int> word;
    std::vector<int> starts;
    int position = 0;
    for (int k = 0; k < mu.length(); ++k) {
      starts.push_back(position);
      position += mu.parts()[static_cast<std::size_t>(k)];
      word.insert(word.end(), static_cast<std::size_t>(mu.parts()[static_cast<std::size_t>(k)]), k);
    }
    words_.push_back(std::move(word));
    block_starts_.push_back(std::move(starts));
    probabilities.push_back(p.get_d());
  }
  choose_ = std::discrete_distribution<std::size_t>(probabilities.begin(), probabilities.end());
}

void ShuffleSampler::draw(Rng& rng, std::vector<int>& one_line) {
  const std::size_t which = words_.size() == 1 ? 0 : choose_(rng.engine());
  word_ = words_[which];
  std::shuffle(word_.begin(), word_.end(), rng.engine());
  cursor_ = block_starts_[which];
  one_line.resize(static_cast<std::size_t>(n_));
  // Reading values 1..n in order, value j goes to the next free position of block word[j].
  for (int j = 0; j < n_; ++j) {
    const int block = word_[static_cast<std::size_t>(j)];
    one_line[static_cast<std::size_t>(cursor_[static_cast<std::size_t>(block)]++)] = j + 1;
  }
}

Permutation ShuffleSampler::operator()(Rng& rng) {
  std::vector<int> one_line;
  draw(rng, one_line);
  return Permutation(std::move(one_line));
}

Permutation sample(const ShuffleSpec& spec, Rng& rng) {
  ShuffleSampler sampler(spec);
  return sampler(rng);
}

Rational bhr_eigenvalue(const Composition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) throw ArgumentError("bhr_eigenvalue: sum(mu) != |nu|");
  const int n = nu.size();
  std::vector<int> lengths;
  for (int i = 1; i <= n; ++i)
    if (nu.multiplicity(i) > 0) lengths.push_back(i);

  // Outer loop over cycle lengths i, inner loop over blocks: the n_i cycles of
  // length i are shared among blocks with enough room left; each sharing
  // contributes the multinomial n_i! / prod_k a_i^(k)!.
  std::vector<int> room(mu.parts().begin(), mu.parts().end());
  Integer total = 0;
  std::function<void(std::size_t, std::size_t, int, const Integer&)> share =
      [&](std::size_t li, std::size_t block, int left, const Integer& weight) {
        if (li == lengths.size()) {
          if (std::all_of(room.begin(), room.end(), [](int r) { return r == 0; })) total += weight;
          return;
        }
        const int len = lengths[li];
        if (block + 1 == room.size()) {
          if (left * len > room[block]) return;
          room[block] -= left * len;
          share(li + 1, 0, li + 1 < lengths.size() ? nu.multiplicity(lengths[li + 1]) : 0, weight / factorial(left));
          room[block] += left * len;
          return;
        }
        for (int a = 0; a <= left && a * len <= room[block]; ++a) {
          room[block] -= a * len;
          share(li, block + 1, left - a, weight / factorial(a));
          room[block] += a * len;
        }
      };
  if (!lengths.empty()) {
    // Seed each length's weight with n_i! by folding it into the running product.
    Integer numerator = 1;
    for (int len : lengths) numerator *= factorial(nu.multiplicity(len));
    share(0, 0, nu.multiplicity(lengths.front()), numerator);
  }
  return ratio(young_subgroup_order(mu) * total, factorial(n));
}

IsospectralReport isospectral_check(const ShuffleSpec& spec, int max_degree) {
  const int n = spec.degree();
  if (n > max_degree)
    throw CapacityError("isospectral check is limited to n <= " + std::to_string(max_degree));
  std::vector<std::pair<Composition, Rational>> parts;
  for (const auto& [roots, p] : spec.weights()) parts.emplace_back(composition_of(roots), p);

  IsospectralReport report;
  for (const auto& nu : enumerate_partitions(n)) {
    Rational value = 0;
    for (const auto& [mu, p] : parts) value += p * class_ratio(mu, nu);
    ++report.chain_side[value];
  }

  std::map<Partition, Rational> by_type;
  for (const auto& g : all_permutations(n)) {
    const Partition type = g.cycle_type();
    auto it = by_type.find(type);
    if (it == by_type.end()) {
      Rational value = 0;
      for (const auto& [mu, p] : parts) value += p * bhr_eigenvalue(mu, type);
      it = by_type.emplace(type, value).first;
    }
    ++report.shuffle_side[it->second];
  }

  std::set<Rational> a;
  std::set<Rational> b;
  for (const auto& [v, count] : report.chain_side) a.insert(v);
  for (const auto& [v, count] : report.shuffle_side) b.insert(v);
  report.equal = (a == b);
  return report;
}

#define CARDREP_SHUFFLE_INSTANTIATE(T)                                                                          \
  template class GroupAlgebraMeasure<T>;                                                                        \
  template GroupAlgebraMeasure<T> measure_of<T>(const ShuffleSpec&, int);                                       \
  template GroupAlgebraMeasure<T> convolve<T>(const GroupAlgebraMeasure<T>&, const GroupAlgebraMeasure<T>&);    \
  template GroupAlgebraMeasure<T> convolution_power<T>(const ShuffleSpec&, unsigned, int);

CARDREP_SHUFFLE_INSTANTIATE(Rational)
CARDREP_SHUFFLE_INSTANTIATE(double)

}  // namespace cardrep
