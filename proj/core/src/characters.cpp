#include "cardrep/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "cardrep/errors.hpp"

namespace cardrep {

Integer class_size(const Partition& mu) {
  Integer centralizer = 1;
  for (int i = 1; i <= mu.size(); ++i) {
    const int m = mu.multiplicity(i);
    if (m == 0) continue;
    centralizer *= power(Integer(i), static_cast<unsigned>(m));
    centralizer *= factorial(m);
  }
  Integer result = factorial(mu.size());
  result /= centralizer;
  return result;
}

int sign(const Partition& cycle_type) {
  return ((cycle_type.size() - cycle_type.length()) % 2 == 0) ? 1 : -1;
}

namespace {

struct StripRemoval {
  std::vector<int> shape;
  int sign;
};

// Every way to remove a border strip of the given length, via beta-numbers:
// removing a strip moves one bead down by `length` onto a free position; the
// height parity is the number of beads jumped over.
std::vector<StripRemoval> remove_border_strips(const std::vector<int>& shape, int length) {
  const int rows = static_cast<int>(shape.size());
  std::vector<int> beads(shape.size());
  for (int i = 0; i < rows; ++i) beads[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (rows - 1 - i);

  std::vector<StripRemoval> out;
  for (int i = 0; i < rows; ++i) {
    const int from = beads[static_cast<std::size_t>(i)];
    const int to = from - length;
    if (to < 0) continue;
    if (std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
    int jumped = 0;
    for (int b : beads)
      if (b > to && b < from) ++jumped;
    std::vector<int> moved = beads;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> result;
    for (int r = 0; r < rows; ++r) {
      const int part = moved[static_cast<std::size_t>(r)] - (rows - 1 - r);
      if (part > 0) result.push_back(part);
    }
    out.push_back({std::move(result), (jumped % 2 == 0) ? 1 : -1});
  }
  return out;
}

// Memoized on (shape, remaining cycle lengths). Cycles are consumed largest first.
class MurnaghanNakayama {
 public:
  std::int64_t evaluate(const std::vector<int>& shape, const std::vector<int>& cycles) {
    return recurse(shape, cycles, 0);
  }

 private:
  std::int64_t recurse(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t next) {
    if (next == cycles.size()) return shape.empty() ? 1 : 0;
    std::vector<int> suffix(cycles.begin() + static_cast<std::ptrdiff_t>(next), cycles.end());
    auto key = std::make_pair(shape, std::move(suffix));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::int64_t total = 0;
    for (const auto& removal : remove_border_strips(shape, cycles[next]))
      total += removal.sign * recurse(removal.shape, cycles, next + 1);
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo_;
};

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw ArgumentError("character: |lambda| != |mu|");
  MurnaghanNakayama mn;
  return mn.evaluate(lambda.parts(), mu.parts());
}

CharacterTable CharacterTable::build(int n, int max_degree) {
  if (n < 1) throw ArgumentError("character table: n must be positive");
  if (n > max_degree)
    throw CapacityError("character table: n = " + std::to_string(n) + " exceeds the maximum degree " +
                        std::to_string(max_degree));
  CharacterTable table;
  table.n_ = n;
  table.partitions_ = enumerate_partitions(n);
  MurnaghanNakayama mn;
  for (const auto& lambda : table.partitions_) {
    std::vector<std::int64_t> row;
    row.reserve(table.partitions_.size());
    for (const auto& mu : table.partitions_) row.push_back(mn.evaluate(lambda.parts(), mu.parts()));
    table.values_.push_back(std::move(row));
  }
  for (const auto& mu : table.partitions_) table.class_sizes_.push_back(cardrep::class_size(mu));
  return table;
}

std::size_t CharacterTable::index_of(const Partition& lambda) const {
  // Canonical order is descending.
  auto it = std::lower_bound(partitions_.begin(), partitions_.end(), lambda, std::greater<>());
  if (it == partitions_.end() || *it != lambda)
    throw ArgumentError("partition " + lambda.to_string() + " is not a partition of " + std::to_string(n_));
  return static_cast<std::size_t>(it - partitions_.begin());
}

Integer restriction_multiplicity(const Partition& lambda, const Composition& mu,
                                 std::span<const Partition> tau) {
  if (lambda.size() != mu.size()) throw ArgumentError("restriction_multiplicity: |lambda| != sum(mu)");
  if (tau.size() != static_cast<std::size_t>(mu.length()))
    throw ArgumentError("restriction_multiplicity: tau needs one partition per block");
  for (std::size_t k = 0; k < tau.size(); ++k) {
    if (tau[k].size() != mu.parts()[k])
      throw ArgumentError("restriction_multiplicity: |tau_k| != mu_k");
  }

  // Per block: the classes of S_{mu_k}, their sizes and the values of chi^{tau_k}.
  struct BlockClass {
    Partition cycle_type;
    Integer size;
    std::int64_t tau_value;
  };
  std::vector<std::vector<BlockClass>> blocks;
  for (std::size_t k = 0; k < tau.size(); ++k) {
    std::vector<BlockClass> classes;
    for (auto& nu : enumerate_partitions(mu.parts()[k]))
      classes.push_back({nu, class_size(nu), character(tau[k], nu)});
    blocks.push_back(std::move(classes));
  }

  MurnaghanNakayama mn;
  Integer sum = 0;
  std::vector<int> cycles;
  std::function<void(std::size_t, Integer, std::int64_t)> visit = [&](std::size_t k, Integer weight,
                                                                      std::int64_t tau_product) {
    if (k == blocks.size()) {
      std::vector<int> merged = cycles;
      std::sort(merged.begin(), merged.end(), std::greater<>());
      sum += weight * tau_product * mn.evaluate(lambda.parts(), merged);
      return;
    }
    for (const auto& cls : blocks[k]) {
      const auto mark = cycles.size();
      cycles.insert(cycles.end(), cls.cycle_type.parts().begin(), cls.cycle_type.parts().end());
      visit(k + 1, weight * cls.size, tau_product * cls.tau_value);
      cycles.resize(mark);
    }
  };
  visit(0, Integer(1), 1);

  Integer order = 1;
  for (int part : mu.parts()) order *= factorial(part);
  if (sum % order != 0) throw ConsistencyError("restriction_multiplicity: non-integral inner product");
  Integer result = sum / order;
  if (result < 0) throw ConsistencyError("restriction_multiplicity: negative multiplicity");
  return result;
}

}  // namespace cardrep
