#include "cardrep/parabolic.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "cardrep/characters.hpp"
#include "cardrep/errors.hpp"

namespace cardrep {

RootSubset::RootSubset(int n, std::vector<int> indices) : n_(n) {
  if (n < 1 || n > 64) throw ArgumentError("root subset: degree must be in 1..64");
  for (int i : indices) {
    if (i < 1 || i > n - 1)
      throw ArgumentError("root subset: index " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));
    mask_ |= std::uint64_t{1} << (i - 1);
  }
  for (int i = 1; i < n; ++i)
    if (mask_ & (std::uint64_t{1} << (i - 1))) indices_.push_back(i);
}

RootSubset RootSubset::from_composition(const Composition& mu) {
  std::vector<int> indices;
  int position = 0;
  for (int part : mu.parts()) {
    for (int j = 1; j < part; ++j) indices.push_back(position + j);
    position += part;
  }
  return RootSubset(mu.size(), std::move(indices));
}

RootSubset RootSubset::all(int n) {
  std::vector<int> indices;
  for (int i = 1; i < n; ++i) indices.push_back(i);
  return RootSubset(n, std::move(indices));
}

RootSubset RootSubset::none(int n) { return RootSubset(n, {}); }

RootSubset RootSubset::parse(int n, std::string_view text) {
  if (text == "empty" || text.empty()) return none(n);
  std::vector<int> indices;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("malformed root subset '" + std::string(text) + "'");
    indices.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return RootSubset(n, std::move(indices));
}

bool RootSubset::contains(int index) const noexcept {
  return index >= 1 && index < n_ && (mask_ & (std::uint64_t{1} << (index - 1))) != 0;
}

std::string RootSubset::to_string() const {
  if (indices_.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(indices_[i]);
  }
  return out;
}

Composition composition_of(const RootSubset& roots) {
  std::vector<int> parts;
  int run = 1;
  for (int i = 1; i < roots.degree(); ++i) {
    if (roots.contains(i)) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

Integer young_subgroup_order(const Composition& mu) {
  Integer order = 1;
  for (int part : mu.parts()) order *= factorial(part);
  return order;
}

Rational class_ratio(const Composition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) throw ArgumentError("class_ratio: sum(mu) != |nu|");

  std::vector<int> lengths;
  std::vector<int> remaining;
  for (int i = nu.size(); i >= 1; --i) {
    if (int m = nu.multiplicity(i); m > 0) {
      lengths.push_back(i);
      remaining.push_back(m);
    }
  }

  // Depth-first over blocks; within a block, over cycle lengths. The summand
  // for one sharing is prod_k |class of S_{mu_k} with a^(k) i-cycles|.
  const auto& blocks = mu.parts();
  Integer total = 0;
  std::function<void(std::size_t, std::size_t, int, const Integer&, const Integer&)> visit =
      [&](std::size_t block, std::size_t li, int room, const Integer& done, const Integer& centralizer) {
        if (li == lengths.size()) {
          if (room != 0) return;
          Integer size = factorial(blocks[block]);
          size /= centralizer;
          Integer product = done * size;
          // Cycle lengths balance block sizes, so the last block takes exactly what is left.
          if (block + 1 == blocks.size()) {
            total += product;
          } else {
            visit(block + 1, 0, blocks[block + 1], product, Integer(1));
          }
          return;
        }
        const int len = lengths[li];
        const int most = std::min(remaining[li], room / len);
        for (int a = 0; a <= most; ++a) {
          remaining[li] -= a;
          Integer c = centralizer * power(Integer(len), static_cast<unsigned>(a)) * factorial(a);
          visit(block, li + 1, room - a * len, done, c);
          remaining[li] += a;
        }
      };
  if (!blocks.empty()) visit(0, 0, blocks[0], Integer(1), Integer(1));

  Integer centralizer = 1;
  for (std::size_t li = 0; li < lengths.size(); ++li) {
    const int m = nu.multiplicity(lengths[li]);
    centralizer *= power(Integer(lengths[li]), static_cast<unsigned>(m)) * factorial(m);
  }
  return ratio(centralizer * total, factorial(nu.size()));
}

BetaResult beta_parabolic(const Composition& mu) {
  BetaResult out;
  out.beta = 0;
  const int n = mu.size();
  if (n < 2) return out;
  bool first = true;
  for (const auto& nu : enumerate_partitions(n)) {
    if (nu == Partition::column(n)) continue;
    Rational q = class_ratio(mu, nu);
    if (first || q > out.beta) {
      out.beta = q;
      out.witnesses.clear();
      first = false;
    }
    if (q == out.beta) out.witnesses.push_back(nu);
  }
  return out;
}

ClassRatioVector ratio_vector_for(const Composition& mu, int max_degree) {
  const int n = mu.size();
  if (n < 1) throw ArgumentError("ratio vector: empty composition");
  if (n > max_degree)
    throw CapacityError("ratio vector: n = " + std::to_string(n) + " exceeds the maximum degree " +
                        std::to_string(max_degree));
  std::vector<std::string> labels;
  std::vector<Rational> ratios;
  for (const auto& nu : enumerate_partitions(n)) {
    labels.push_back(nu.to_string());
    ratios.push_back(class_ratio(mu, nu));
  }
  return ClassRatioVector(young_subgroup_order(mu), std::move(labels), std::move(ratios));
}

namespace {

void require_range(int n, int k, const char* what) {
  if (n < 2 || k < 1 || k > n - 1)
    throw ArgumentError(std::string(what) + ": need n >= 2 and 1 <= k <= n-1 (n = " + std::to_string(n) +
                        ", k = " + std::to_string(k) + ")");
}

}  // namespace

Composition point_stabilizer(int n) { return top_k_stabilizer(n, 1); }

Composition top_k_stabilizer(int n, int k) {
  require_range(n, k, "top-k stabilizer");
  std::vector<int> parts(static_cast<std::size_t>(k), 1);
  parts.push_back(n - k);
  return Composition(std::move(parts));
}

Composition k_set_stabilizer(int n, int k) {
  require_range(n, k, "k-set stabilizer");
  return Composition({k, n - k});
}

Rational beta_point_stabilizer(int n) {
  require_range(n, 1, "beta (point stabilizer)");
  return Rational(1) - ratio(Integer(2), Integer(n));
}

Rational beta_top_k_stabilizer(int n, int k) {
  require_range(n, k, "beta (top-k stabilizer)");
  return ratio(Integer((n - k) * (n - k - 1)), Integer(n * (n - 1)));
}

Rational beta_k_set_stabilizer(int n, int k) {
  require_range(n, k, "beta (k-set stabilizer)");
  return ratio(binomial(n - 2, k) + binomial(n - 2, k - 2), binomial(n, k));
}

}  // namespace cardrep
