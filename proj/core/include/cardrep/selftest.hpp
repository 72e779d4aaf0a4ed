#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cardrep/partitions.hpp"
#include "cardrep/rational.hpp"
#include "cardrep/shuffles.hpp"

namespace cardrep::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  std::size_t mc_samples = 100000;
  std::uint64_t mc_seed = 20260101;
  unsigned workers = 0;
};

/// The fixed rational mixture used on the verification grid:
/// 1/2 top-to-random + 1/3 riffle with a cut at floor(n/2) + 1/6 top-2-to-random.
ShuffleSpec fixed_mixture(int n);

/// top, top-2, riffle at floor(n/2), and the fixed mixture.
std::vector<std::pair<std::string, ShuffleSpec>> spec_grid(int n);

CriterionResult chain_equals_shuffle();        // 1
CriterionResult spectral_bound();              // 2
CriterionResult beta_closed_forms();           // 3
CriterionResult isospectrality();              // 4
CriterionResult chain_well_formed();           // 5
CriterionResult trivial_subgroup_one_step();   // 6
CriterionResult tensor_multiplicities();       // 7
CriterionResult rsk_suite();                   // 8
CriterionResult general_linear_beta();         // 9
CriterionResult monte_carlo_trend(const Options& options);  // 10

/// Runs all criteria in order; `on_result` sees each as it finishes.
std::vector<CriterionResult> run_all(const Options& options = {},
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [1] name (1.2 s): detail"
std::string format(const CriterionResult& result);

// Independent oracles, exposed for the unit tests.

/// |{g of cycle type nu fixing every block of mu}| / |class of nu|, by enumerating S_n.
Rational brute_force_class_ratio(const Composition& mu, const Partition& nu);

/// Ind_{S_mu}^{S_n}(1) at a permutation of cycle type nu: the number of words
/// of content mu that are constant on the cycles of that permutation.
Integer induced_character_direct(const Composition& mu, const Partition& nu);

/// <chi^lambda, Ind(1)^r> from induced_character_direct.
Integer tensor_multiplicity_direct(const Partition& lambda, const Composition& mu, unsigned r);

/// J(rho, sigma) from the definition via restriction multiplicities:
/// (|H|/|G|) (dim sigma / dim rho) sum_tau kappa(tau, rho) kappa(tau, sigma).
Rational transition_by_definition(const Partition& rho, const Partition& sigma, const Composition& mu);

}  // namespace cardrep::selftest
