#include "cardrep/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <functional>
#include <numeric>

namespace cardrep {

namespace {

std::vector<int> parse_parts(std::string_view text, const char* what) {
  std::vector<int> parts;
  if (text.empty()) return parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError(std::string("malformed ") + what + " '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return parts;
}

std::string join_parts(const std::vector<int>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ArgumentError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ArgumentError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unordered(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text, "partition")); }

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition({n}); }

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Partition::multiplicity(int part) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const { return join_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw ArgumentError("composition parts must be positive");
    size_ += p;
  }
}

Composition Composition::parse(std::string_view text) {
  return Composition(parse_parts(text, "composition"));
}

Partition Composition::sorted() const { return Partition::from_unordered(parts_); }

std::string Composition::to_string() const { return join_parts(parts_); }

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw ArgumentError("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest available part first, so output is reverse-lexicographic.
  std::function<void(int, int)> extend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(n, n);
  return out;
}

std::vector<Composition> enumerate_compositions(int n) {
  if (n < 1) throw ArgumentError("enumerate_compositions: n must be positive");
  std::vector<Composition> out;
  const std::uint32_t count = 1U << (n - 1);
  out.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    // Bit i-1 set: positions i and i+1 share a block.
    std::vector<int> parts;
    int run = 1;
    for (int i = 1; i < n; ++i) {
      if (mask & (1U << (i - 1))) {
        ++run;
      } else {
        parts.push_back(run);
        run = 1;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int j = 1; j <= lambda[0]; ++j) {
    int count = 0;
    for (int p : lambda.parts())
      if (p >= j) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

Integer dimension(const Partition& lambda) {
  const Partition transpose = conjugate(lambda);
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      int arm = lambda[static_cast<std::size_t>(i)] - j - 1;
      int leg = transpose[static_cast<std::size_t>(j)] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  Integer result = factorial(lambda.size());
  result /= hooks;
  return result;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return false;
  int a = 0;
  int b = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 0; i < len; ++i) {
    a += lambda[static_cast<std::size_t>(i)];
    b += mu[static_cast<std::size_t>(i)];
    if (a < b) return false;
  }
  return true;
}

namespace {

// Row-major cell filling. Each cell takes a letter at least its left
// neighbour and strictly greater than the cell above, while letters remain.
class SemistandardCounter {
 public:
  SemistandardCounter(const Partition& shape, const std::vector<int>& content)
      : shape_(shape), remaining_(content), letters_(static_cast<int>(content.size())) {
    for (int len : shape.parts()) grid_.emplace_back(static_cast<std::size_t>(len), 0);
  }

  Integer count() {
    total_ = 0;
    if (shape_.size() > 0) fill(0, 0);
    else total_ = 1;
    return total_;
  }

 private:
  void fill(std::size_t row, std::size_t col) {
    if (row == grid_.size()) {
      total_ += 1;
      return;
    }
    std::size_t next_row = row;
    std::size_t next_col = col + 1;
    if (next_col == grid_[row].size()) {
      ++next_row;
      next_col = 0;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, grid_[row][col - 1]);
    if (row > 0) lo = std::max(lo, grid_[row - 1][col] + 1);
    for (int letter = lo; letter <= letters_; ++letter) {
      auto& left = remaining_[static_cast<std::size_t>(letter - 1)];
      if (left == 0) continue;
      --left;
      grid_[row][col] = letter;
      fill(next_row, next_col);
      ++left;
    }
    grid_[row][col] = 0;
  }

  const Partition& shape_;
  std::vector<int> remaining_;
  int letters_;
  std::vector<std::vector<int>> grid_;
  Integer total_;
};

}  // namespace

Integer kostka(const Partition& lambda, const Composition& mu) {
  if (lambda.size() != mu.size()) throw ArgumentError("kostka: |lambda| != |mu|");
  return SemistandardCounter(lambda, mu.parts()).count();
}

Integer kostka(const Partition& lambda, const Partition& mu) {
  return kostka(lambda, Composition(mu.parts()));
}

template <class T>
PartitionDistribution<T> plancherel(int n) {
  if (n < 1) throw ArgumentError("plancherel: n must be positive");
  auto shapes = enumerate_partitions(n);
  const Integer order = factorial(n);
  std::vector<T> masses;
  masses.reserve(shapes.size());
  for (const auto& lambda : shapes) {
    Integer d = dimension(lambda);
    masses.push_back(from_rational<T>(ratio(d * d, order)));
  }
  return PartitionDistribution<T>(std::move(shapes), std::move(masses));
}

template PartitionDistribution<Rational> plancherel<Rational>(int);
template PartitionDistribution<double> plancherel<double>(int);

}  // namespace cardrep
