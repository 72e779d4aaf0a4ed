#include "cardrep/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "cardrep/characters.hpp"
#include "cardrep/errors.hpp"
#include "cardrep/rsk.hpp"

namespace cardrep {

std::vector<Rational> mixed_chain_eigenvalues(const ShuffleSpec& spec) {
  const int n = spec.degree();
  const auto classes = enumerate_partitions(n);
  std::vector<Rational> out(classes.size(), Rational(0));
  for (const auto& [roots, p] : spec.weights()) {
    const Composition mu = composition_of(roots);
    for (std::size_t c = 0; c < classes.size(); ++c) out[c] += p * class_ratio(mu, classes[c]);
  }
  return out;
}

namespace {

Rational max_gap(const PartitionDistribution<Rational>& a, const PartitionDistribution<Rational>& b) {
  if (a.labels() != b.labels()) throw ConsistencyError("distributions over different shapes");
  Rational worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, Rational(abs_value(a[i] - b[i])));
  return worst;
}

ShapeLawReport report_for(const ShuffleSpec& spec, const GroupData& group, const std::vector<Rational>& eigenvalues,
                          const GroupAlgebraMeasure<Rational>& power, unsigned r) {
  ShapeLawReport report;
  report.n = spec.degree();
  report.r = r;
  report.chain_side =
      as_partition_distribution(r_step_from_trivial<Rational>(group, std::span<const Rational>(eigenvalues), r));
  report.shuffle_side = pushforward(power);
  report.max_discrepancy = max_gap(report.chain_side, report.shuffle_side);
  return report;
}

}  // namespace

std::vector<ShapeLawReport> verify_shape_law_series(const ShuffleSpec& spec, unsigned r_max, int max_degree) {
  const int n = spec.degree();
  if (n > max_degree)
    throw CapacityError("exact comparison is limited to n <= " + std::to_string(max_degree) + " (n = " +
                        std::to_string(n) + ")");
  const GroupData group = GroupData::symmetric(CharacterTable::build(n, std::max(max_degree, n)));
  const auto eigenvalues = mixed_chain_eigenvalues(spec);
  const auto step = measure_of<Rational>(spec, max_degree);
  auto power = GroupAlgebraMeasure<Rational>::point_mass(Permutation::identity(n), max_degree);

  std::vector<ShapeLawReport> out;
  for (unsigned r = 0; r <= r_max; ++r) {
    if (r > 0) power = convolve(power, step);
    out.push_back(report_for(spec, group, eigenvalues, power, r));
  }
  return out;
}

ShapeLawReport verify_shape_law(const ShuffleSpec& spec, unsigned r, int max_degree) {
  const int n = spec.degree();
  if (n > max_degree)
    throw CapacityError("exact comparison is limited to n <= " + std::to_string(max_degree) + " (n = " +
                        std::to_string(n) + ")");
  const GroupData group = GroupData::symmetric(CharacterTable::build(n, std::max(max_degree, n)));
  return report_for(spec, group, mixed_chain_eigenvalues(spec), convolution_power<Rational>(spec, r, max_degree), r);
}

template <class T>
T tv(const PartitionDistribution<T>& a, const PartitionDistribution<T>& b) {
  if (a.labels() != b.labels()) throw ArgumentError("tv: distributions over different shapes");
  T sum(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    T d = a[i] - b[i];
    sum += d < 0 ? T(-d) : d;
  }
  return T(sum / 2);
}

template <class T>
T tv(const GroupAlgebraMeasure<T>& a, const GroupAlgebraMeasure<T>& b) {
  if (a.degree() != b.degree()) throw ArgumentError("tv: measures on different groups");
  T sum(0);
  for (std::size_t i = 0; i < a.group_size(); ++i) {
    T d = a.mass_at_rank(i) - b.mass_at_rank(i);
    sum += d < 0 ? T(-d) : d;
  }
  return T(sum / 2);
}

template Rational tv<Rational>(const PartitionDistribution<Rational>&, const PartitionDistribution<Rational>&);
template double tv<double>(const PartitionDistribution<double>&, const PartitionDistribution<double>&);
template Rational tv<Rational>(const GroupAlgebraMeasure<Rational>&, const GroupAlgebraMeasure<Rational>&);
template double tv<double>(const GroupAlgebraMeasure<double>&, const GroupAlgebraMeasure<double>&);

namespace {

ShapeTvCheck totvar_of(const GroupAlgebraMeasure<Rational>& power, const PartitionDistribution<Rational>& pi,
                      const GroupAlgebraMeasure<Rational>& uniform, unsigned r) {
  ShapeTvCheck check;
  check.r = r;
  check.shape_tv = tv(pushforward(power), pi);
  check.permutation_tv = tv(power, uniform);
  check.holds = check.shape_tv <= check.permutation_tv;
  return check;
}

}  // namespace

std::vector<ShapeTvCheck> shape_tv_series(const ShuffleSpec& spec, unsigned r_max, int max_degree) {
  const int n = spec.degree();
  const auto step = measure_of<Rational>(spec, max_degree);
  const auto uniform = GroupAlgebraMeasure<Rational>::uniform(n, max_degree);
  const auto pi = plancherel<Rational>(n);
  auto power = GroupAlgebraMeasure<Rational>::point_mass(Permutation::identity(n), max_degree);
  std::vector<ShapeTvCheck> out;
  for (unsigned r = 0; r <= r_max; ++r) {
    if (r > 0) power = convolve(power, step);
    out.push_back(totvar_of(power, pi, uniform, r));
  }
  return out;
}

ShapeTvCheck shape_tv_check(const ShuffleSpec& spec, unsigned r, int max_degree) {
  const int n = spec.degree();
  return totvar_of(convolution_power<Rational>(spec, r, max_degree), plancherel<Rational>(n),
                   GroupAlgebraMeasure<Rational>::uniform(n, max_degree), r);
}

namespace {

std::vector<unsigned> grid_of(const TvCurveOptions& options) {
  if (options.r_step == 0) throw ArgumentError("tv curve: step must be positive");
  std::set<unsigned> points;
  for (unsigned r = 0; r <= options.r_max; r += options.r_step) points.insert(r);
  points.insert(options.r_max);
  for (unsigned r : options.extra_points) {
    if (r > options.r_max) throw ArgumentError("tv curve: grid point " + std::to_string(r) + " exceeds r_max");
    points.insert(r);
  }
  return {points.begin(), points.end()};
}

TvCurve exact_curve(const ShuffleSpec& spec, const TvCurveOptions& options, const std::vector<unsigned>& grid) {
  const auto series = shape_tv_series(spec, options.r_max, options.max_degree);
  TvCurve curve;
  for (unsigned r : grid) {
    TvPoint point;
    point.r = r;
    point.exact_shape_tv = series[r].shape_tv;
    point.shape_tv = to_double(series[r].shape_tv);
    point.permutation_tv = to_double(series[r].permutation_tv);
    curve.points.push_back(point);
  }
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    if (*curve.points[i].exact_shape_tv > *curve.points[i - 1].exact_shape_tv) {
      ++curve.increases;
      curve.weakly_decreasing = false;
    }
  }
  return curve;
}

constexpr std::size_t kChunks = 64;
constexpr std::uint64_t kBootstrapStreamBase = 1u << 20;

double tv_against(const std::vector<double>& freq, const std::vector<double>& pi) {
  double sum = 0.0;
  for (std::size_t i = 0; i < pi.size(); ++i) sum += std::abs(freq[i] - pi[i]);
  return sum / 2.0;
}

/// Standard deviation of the plug-in TV over multinomial resamples of `counts`.
double bootstrap_se(const std::vector<std::uint64_t>& counts, const std::vector<double>& pi, unsigned resamples,
                    Rng rng) {
  if (resamples < 2) return 0.0;
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  std::vector<double> values;
  values.reserve(resamples);
  std::vector<double> freq(counts.size());
  for (unsigned b = 0; b < resamples; ++b) {
    std::uint64_t left = total;
    double mass_left = 1.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const double p = static_cast<double>(counts[i]) / static_cast<double>(total);
      std::uint64_t x = 0;
      if (left > 0 && p > 0) {
        if (i + 1 == counts.size() || p >= mass_left) {
          x = left;
        } else {
          std::binomial_distribution<std::uint64_t> draw(left, std::clamp(p / mass_left, 0.0, 1.0));
          x = draw(rng.engine());
        }
      }
      freq[i] = static_cast<double>(x) / static_cast<double>(total);
      left -= x;
      mass_left -= p;
    }
    values.push_back(tv_against(freq, pi));
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(values.size() - 1);
  return std::sqrt(var);
}

TvCurve monte_carlo_curve(const ShuffleSpec& spec, const TvCurveOptions& options, const std::vector<unsigned>& grid) {
  if (options.samples < 1000) throw ArgumentError("tv curve: Monte Carlo needs at least 1000 samples");
  const int n = spec.degree();
  const auto shapes = enumerate_partitions(n);
  const auto pi_dist = plancherel<double>(n);
  const std::vector<double>& pi = pi_dist.masses();
  const std::size_t g = grid.size();

  // Chunk k runs trajectories [begin_k, end_k) on stream k + 1.
  std::vector<std::vector<ShapeTally>> tallies(kChunks, std::vector<ShapeTally>(g));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    ShuffleSampler sampler(spec);
    std::vector<int> step;
    std::vector<int> current(static_cast<std::size_t>(n));
    std::vector<int> scratch(static_cast<std::size_t>(n));
    for (std::size_t k; (k = next.fetch_add(1)) < kChunks;) {
      const std::size_t begin = options.samples * k / kChunks;
      const std::size_t end = options.samples * (k + 1) / kChunks;
      Rng rng(options.seed, k + 1);
      auto& mine = tallies[k];
      for (std::size_t t = begin; t < end; ++t) {
        for (int i = 0; i < n; ++i) current[static_cast<std::size_t>(i)] = i + 1;
        std::size_t gi = 0;
        if (grid[0] == 0) mine[gi++].add(Partition::row(n));
        for (unsigned r = 1; gi < g; ++r) {
          sampler.draw(rng, step);
          // (current * step)(i) = current(step(i))
          for (int i = 0; i < n; ++i)
            scratch[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(step[static_cast<std::size_t>(i)] - 1)];
          current.swap(scratch);
          if (grid[gi] == r) mine[gi++].add(rsk_shape(std::span<const int>(current)));
        }
      }
    }
  };
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, kChunks);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  TvCurve curve;
  curve.monte_carlo = true;
  curve.seed = options.seed;
  curve.samples = options.samples;
  for (std::size_t j = 0; j < g; ++j) {
    ShapeTally merged;
    for (std::size_t k = 0; k < kChunks; ++k) merged.merge(tallies[k][j]);
    std::vector<std::uint64_t> counts(shapes.size(), 0);
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      auto it = merged.counts().find(shapes[i]);
      if (it != merged.counts().end()) counts[i] = it->second;
    }
    TvPoint point;
    point.r = grid[j];
    point.shape_tv = tv_against(merged.frequencies(n).masses(), pi);
    point.std_error = bootstrap_se(counts, pi, options.bootstrap_resamples, Rng(options.seed, kBootstrapStreamBase + j));
    curve.points.push_back(point);
  }
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    const auto& a = curve.points[i - 1];
    const auto& b = curve.points[i];
    if (b.shape_tv > a.shape_tv) {
      ++curve.increases;
      const double se = std::sqrt(*a.std_error * *a.std_error + *b.std_error * *b.std_error);
      if (b.shape_tv - a.shape_tv > 3.0 * se) curve.weakly_decreasing = false;
    }
  }
  return curve;
}

}  // namespace

TvCurve tv_curve(const ShuffleSpec& spec, const TvCurveOptions& options) {
  const auto grid = grid_of(options);
  if (options.mode == TvCurveOptions::Mode::exact) return exact_curve(spec, options, grid);
  return monte_carlo_curve(spec, options, grid);
}

}  // namespace cardrep
