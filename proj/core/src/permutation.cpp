#include "cardrep/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "cardrep/errors.hpp"

namespace cardrep {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)])
      throw ArgumentError("permutation: one-line notation must list 1..n exactly once");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::reversal(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("malformed permutation '" + std::string(text) + "'");
    values.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv), Unchecked{});
}

Partition Permutation::cycle_type() const {
  std::vector<bool> visited(values_.size(), false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < values_.size(); ++start) {
    if (visited[start]) continue;
    int length = 0;
    for (std::size_t i = start; !visited[i]; i = static_cast<std::size_t>(values_[i] - 1)) {
      visited[i] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  return Partition::from_unordered(std::move(lengths));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw ArgumentError("permutation product: degrees differ");
  std::vector<int> out(h.values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g.values_[static_cast<std::size_t>(h.values_[i] - 1)];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw CapacityError("n! does not fit in 64 bits for n = " + std::to_string(n));
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank(const Permutation& g) {
  const int n = g.degree();
  if (n > 20) throw CapacityError("rank: n exceeds 20");
  std::uint64_t r = 0;
  std::uint32_t used = 0;  // bit v-1 set once value v has appeared
  for (int i = 1; i <= n; ++i) {
    const int v = g(i);
    const std::uint32_t below = used & ((1U << (v - 1)) - 1U);
    const int smaller_unused = (v - 1) - __builtin_popcount(below);
    r = r * static_cast<std::uint64_t>(n - i + 1) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1U << (v - 1);
  }
  return r;
}

Permutation unrank(int n, std::uint64_t r) {
  if (n > 20) throw CapacityError("unrank: n exceeds 20");
  if (r >= factorial_u64(n)) throw ArgumentError("unrank: rank out of range");
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    digits[static_cast<std::size_t>(i - 1)] = static_cast<int>(r % static_cast<std::uint64_t>(n - i + 1));
    r /= static_cast<std::uint64_t>(n - i + 1);
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int d : digits) {
    values.push_back(pool[static_cast<std::size_t>(d)]);
    pool.erase(pool.begin() + d);
  }
  return Permutation(std::move(values), Permutation::Unchecked{});
}

std::vector<int> descent_set(const Permutation& g) {
  std::vector<int> out;
  for (int i = 1; i < g.degree(); ++i)
    if (g(i) > g(i + 1)) out.push_back(i);
  return out;
}

std::uint64_t descent_mask(const Permutation& g) {
  std::uint64_t mask = 0;
  for (int i = 1; i < g.degree(); ++i)
    if (g(i) > g(i + 1)) mask |= std::uint64_t{1} << (i - 1);
  return mask;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial_u64(n)));
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace cardrep
