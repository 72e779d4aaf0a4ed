#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cardrep/partitions.hpp"
#include "cardrep/plancherel_chain.hpp"
#include "cardrep/rational.hpp"
#include "cardrep/shuffles.hpp"

namespace cardrep {

/// Eigenvalue of the mixed chain sum_L p_L J[L] on each class of S_n (canonical
/// order): sum_L p_L |C n S_L| / |C|. The chains J[L] share one eigenbasis.
std::vector<Rational> mixed_chain_eigenvalues(const ShuffleSpec& spec);

/// One cell of the chain-versus-shuffle comparison.
struct ShapeLawReport {
  int n = 0;
  unsigned r = 0;
  PartitionDistribution<Rational> chain_side;    ///< r steps of the mixed chain from the trivial representation
  PartitionDistribution<Rational> shuffle_side;  ///< RSK pushforward of the r-th convolution power
  Rational max_discrepancy;

  bool holds() const { return max_discrepancy == 0; }
};

ShapeLawReport verify_shape_law(const ShuffleSpec& spec, unsigned r, int max_degree = kDefaultMaxExactDegree);

/// Reports for r = 0, ..., r_max, reusing each convolution power for the next.
std::vector<ShapeLawReport> verify_shape_law_series(const ShuffleSpec& spec, unsigned r_max,
                                                   int max_degree = kDefaultMaxExactDegree);

/// Half the L1 distance. Equals the largest gap in probability over events.
/// Throws ArgumentError when the two index sets differ.
template <class T>
T tv(const PartitionDistribution<T>& a, const PartitionDistribution<T>& b);

template <class T>
T tv(const GroupAlgebraMeasure<T>& a, const GroupAlgebraMeasure<T>& b);

struct ShapeTvCheck {
  unsigned r = 0;
  bool holds = false;
  Rational shape_tv;        ///< TV(pushforward(m_r), Plancherel)
  Rational permutation_tv;  ///< TV(m_r, uniform)
};

/// Shape-level distance never exceeds permutation-level distance.
ShapeTvCheck shape_tv_check(const ShuffleSpec& spec, unsigned r, int max_degree = kDefaultMaxExactDegree);

std::vector<ShapeTvCheck> shape_tv_series(const ShuffleSpec& spec, unsigned r_max,
                                                 int max_degree = kDefaultMaxExactDegree);

struct TvCurveOptions {
  enum class Mode { exact, monte_carlo };
  Mode mode = Mode::exact;
  unsigned r_max = 10;
  unsigned r_step = 1;               ///< grid is 0, step, 2 step, ..., plus r_max itself
  std::vector<unsigned> extra_points;
  std::size_t samples = 100000;      ///< Monte Carlo trajectories; at least 1000
  std::uint64_t seed = 1;
  unsigned bootstrap_resamples = 200;
  unsigned workers = 0;              ///< 0: hardware concurrency
  int max_degree = kDefaultMaxExactDegree;
};

struct TvPoint {
  unsigned r = 0;
  double shape_tv = 0.0;
  std::optional<Rational> exact_shape_tv;
  std::optional<double> permutation_tv;
  std::optional<double> std_error;  ///< bootstrap standard error (Monte Carlo only)
};

struct TvCurve {
  bool monte_carlo = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<TvPoint> points;
  /// Exact: no increase between consecutive points. Monte Carlo: no increase
  /// larger than three combined standard errors.
  bool weakly_decreasing = true;
  std::size_t increases = 0;  ///< number of consecutive pairs that go up at all
};

/// Shape-level (and, in exact mode, permutation-level) distance to
/// stationarity along a grid of step counts.
///
/// The Monte Carlo estimator is the plug-in total variation between sampled
/// shape frequencies and the exact Plancherel measure; it is biased upwards.
/// Standard errors come from a multinomial bootstrap of the shape tally.
/// Trajectories are split into fixed chunks with their own random streams,
/// so results do not depend on the number of worker threads.
TvCurve tv_curve(const ShuffleSpec& spec, const TvCurveOptions& options);

extern template Rational tv<Rational>(const PartitionDistribution<Rational>&, const PartitionDistribution<Rational>&);
extern template double tv<double>(const PartitionDistribution<double>&, const PartitionDistribution<double>&);
extern template Rational tv<Rational>(const GroupAlgebraMeasure<Rational>&, const GroupAlgebraMeasure<Rational>&);
extern template double tv<double>(const GroupAlgebraMeasure<double>&, const GroupAlgebraMeasure<double>&);

}  // namespace cardrep
