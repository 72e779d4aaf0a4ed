#include "cardrep/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cardrep/characters.hpp"
#include "cardrep/errors.hpp"
#include "cardrep/gl_beta.hpp"
#include "cardrep/parabolic.hpp"
#include "cardrep/plancherel_chain.hpp"
#include "cardrep/rsk.hpp"
#include "cardrep/verify.hpp"

namespace cardrep::selftest {

ShuffleSpec fixed_mixture(int n) {
  return ShuffleSpec::mixture({{ratio(1, 2), ShuffleSpec::top_to_random(n)},
                               {ratio(1, 3), ShuffleSpec::riffle_k_cut(n, n / 2)},
                               {ratio(1, 6), ShuffleSpec::top_k_to_random(n, 2)}});
}

std::vector<std::pair<std::string, ShuffleSpec>> spec_grid(int n) {
  return {{"top", ShuffleSpec::top_to_random(n)},
          {"topk:2", ShuffleSpec::top_k_to_random(n, 2)},
          {"riffle:" + std::to_string(n / 2), ShuffleSpec::riffle_k_cut(n, n / 2)},
          {"mixture", fixed_mixture(n)}};
}

Rational brute_force_class_ratio(const Composition& mu, const Partition& nu) {
  const int n = mu.size();
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1);
  int position = 1;
  for (std::size_t k = 0; k < mu.parts().size(); ++k)
    for (int j = 0; j < mu.parts()[k]; ++j) block_of[static_cast<std::size_t>(position++)] = static_cast<int>(k);
  std::uint64_t inside = 0;
  std::uint64_t in_class = 0;
  for (const auto& g : all_permutations(n)) {
    if (g.cycle_type() != nu) continue;
    ++in_class;
    bool keeps = true;
    for (int i = 1; i <= n && keeps; ++i) keeps = block_of[static_cast<std::size_t>(i)] == block_of[static_cast<std::size_t>(g(i))];
    inside += keeps;
  }
  return ratio(Integer(static_cast<unsigned long>(inside)), Integer(static_cast<unsigned long>(in_class)));
}

Integer induced_character_direct(const Composition& mu, const Partition& nu) {
  // A representative of nu: consecutive cycles on 1..n.
  const int n = nu.size();
  std::vector<int> next(static_cast<std::size_t>(n));
  int start = 0;
  for (int len : nu.parts()) {
    for (int j = 0; j < len; ++j) next[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
    start += len;
  }
  std::vector<int> word;
  for (std::size_t k = 0; k < mu.parts().size(); ++k) word.insert(word.end(), static_cast<std::size_t>(mu.parts()[k]), static_cast<int>(k));
  Integer fixed = 0;
  do {
    bool constant = true;
    for (int i = 0; i < n && constant; ++i) constant = word[static_cast<std::size_t>(i)] == word[static_cast<std::size_t>(next[static_cast<std::size_t>(i)])];
    if (constant) ++fixed;
  } while (std::next_permutation(word.begin(), word.end()));
  return fixed;
}

Integer tensor_multiplicity_direct(const Partition& lambda, const Composition& mu, unsigned r) {
  const int n = lambda.size();
  Integer sum = 0;
  for (const auto& nu : enumerate_partitions(n))
    sum += class_size(nu) * Integer(static_cast<long>(character(lambda, nu))) * power(induced_character_direct(mu, nu), r);
  const Integer order = factorial(n);
  if (sum % order != 0) throw ConsistencyError("inner product is not an integer");
  return sum / order;
}

namespace {

/// Every tuple (tau_1, ..., tau_k) with tau_j a partition of mu_j.
std::vector<std::vector<Partition>> block_tuples(const Composition& mu) {
  std::vector<std::vector<Partition>> out{{}};
  for (int part : mu.parts()) {
    std::vector<std::vector<Partition>> grown;
    for (const auto& prefix : out)
      for (const auto& tau : enumerate_partitions(part)) {
        auto t = prefix;
        t.push_back(tau);
        grown.push_back(std::move(t));
      }
    out = std::move(grown);
  }
  return out;
}

using Clock = std::chrono::steady_clock;

template <class Body>
CriterionResult run(int id, std::string name, Body body) {
  CriterionResult result;
  result.id = id;
  result.name = std::move(name);
  const auto start = Clock::now();
  try {
    std::ostringstream detail;
    result.passed = body(detail);
    result.detail = detail.str();
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace

Rational transition_by_definition(const Partition& rho, const Partition& sigma, const Composition& mu) {
  const int n = mu.size();
  Integer sum = 0;
  for (const auto& tau : block_tuples(mu))
    sum += restriction_multiplicity(rho, mu, tau) * restriction_multiplicity(sigma, mu, tau);
  Rational out = Rational(young_subgroup_order(mu) * dimension(sigma) * sum) /
                 Rational(factorial(n) * dimension(rho));
  out.canonicalize();
  return out;
}

CriterionResult chain_equals_shuffle() {
  return run(1, "chain r-step equals RSK shape law of the shuffle power", [](std::ostream& d) {
    std::size_t cells = 0;
    std::size_t bad = 0;
    for (int n = 3; n <= 7; ++n)
      for (const auto& [label, spec] : spec_grid(n))
        for (const auto& report : verify_shape_law_series(spec, 10)) {
          ++cells;
          if (!report.holds()) {
            ++bad;
            d << "n=" << n << ' ' << label << " r=" << report.r << " discrepancy " << to_string(report.max_discrepancy)
              << "; ";
          }
        }
    d << cells << " cells (n=3..7, 4 shuffles, r=0..10), " << bad << " nonzero discrepancies";
    return bad == 0;
  });
}

CriterionResult spectral_bound() {
  return run(2, "L1 distance to Plancherel below sqrt(|G|) beta^r", [](std::ostream& d) {
    std::size_t checks = 0;
    std::size_t bad = 0;
    for (int n = 2; n <= 7; ++n) {
      const GroupData group = GroupData::symmetric(CharacterTable::build(n));
      for (const auto& mu : enumerate_compositions(n)) {
        const ClassRatioVector crv = ratio_vector_for(mu);
        for (unsigned r = 0; r <= 30; ++r) {
          const Rational l1 = l1_to_plancherel(r_step_from_trivial<Rational>(group, crv, r), group);
          const SpectralBound bound = spectral_bound(group, crv, r);
          ++checks;
          if (!bound.dominates(l1, group.group_order())) {
            ++bad;
            d << "n=" << n << " mu=" << mu.to_string() << " r=" << r << " fails; ";
          }
        }
      }
    }
    d << checks << " exact comparisons (n=2..7, all compositions, r=0..30), " << bad << " violations";
    return bad == 0;
  });
}

CriterionResult beta_closed_forms() {
  return run(3, "beta closed forms for the three shuffle families", [](std::ostream& d) {
    std::size_t checks = 0;
    std::size_t bad = 0;
    for (int n = 2; n <= 10; ++n) {
      ++checks;
      if (beta_parabolic(point_stabilizer(n)).beta != beta_point_stabilizer(n)) {
        ++bad;
        d << "top n=" << n << "; ";
      }
      for (int k = 1; k <= n - 1; ++k) {
        ++checks;
        if (beta_parabolic(top_k_stabilizer(n, k)).beta != beta_top_k_stabilizer(n, k)) {
          ++bad;
          d << "top-k n=" << n << " k=" << k << "; ";
        }
      }
    }
    for (int n = 5; n <= 10; ++n) {
      std::vector<int> parts{2};
      parts.insert(parts.end(), static_cast<std::size_t>(n - 2), 1);
      const Partition transposition(parts);
      for (int k = 1; k <= n / 2; ++k) {
        ++checks;
        const BetaResult b = beta_parabolic(k_set_stabilizer(n, k));
        const bool witnessed = std::find(b.witnesses.begin(), b.witnesses.end(), transposition) != b.witnesses.end();
        if (b.beta != beta_k_set_stabilizer(n, k) || !witnessed) {
          ++bad;
          d << "riffle n=" << n << " k=" << k << " brute " << to_string(b.beta) << "; ";
        }
      }
    }
    d << checks << " maxima over classes matched, " << bad << " mismatches";
    return bad == 0;
  });
}

CriterionResult isospectrality() {
  return run(4, "eigenvalue sets of mixed chain and shuffle element agree", [](std::ostream& d) {
    std::size_t specs = 0;
    std::size_t bad = 0;
    for (int n = 3; n <= 6; ++n)
      for (const auto& [label, spec] : spec_grid(n)) {
        ++specs;
        if (!isospectral_check(spec).equal) {
          ++bad;
          d << "n=" << n << ' ' << label << " sets differ; ";
        }
      }
    std::size_t pairs = 0;
    for (int n = 1; n <= 8; ++n)
      for (const auto& mu : enumerate_compositions(n))
        for (const auto& nu : enumerate_partitions(n)) {
          ++pairs;
          if (bhr_eigenvalue(mu, nu) != class_ratio(mu, nu)) {
            ++bad;
            d << "mu=" << mu.to_string() << " nu=" << nu.to_string() << " differ; ";
          }
        }
    d << specs << " spec sets (n=3..6) and " << pairs << " (mu, nu) pairs (n<=8), " << bad << " mismatches";
    return bad == 0;
  });
}

CriterionResult chain_well_formed() {
  return run(5, "stochastic rows, detailed balance, agreement with the restriction definition", [](std::ostream& d) {
    std::size_t matrices = 0;
    std::size_t bad = 0;
    for (int n = 1; n <= 8; ++n) {
      const GroupData group = GroupData::symmetric(CharacterTable::build(n));
      const auto pi = group.plancherel<Rational>();
      const auto irreducibles = enumerate_partitions(n);
      for (const auto& mu : enumerate_compositions(n)) {
        ++matrices;
        const auto J = transition_matrix<Rational>(group, ratio_vector_for(mu));
        bool ok = true;
        for (std::size_t i = 0; i < J.size(); ++i) {
          Rational row = 0;
          for (std::size_t j = 0; j < J.size(); ++j) {
            row += J(i, j);
            if (J(i, j) < 0 || pi[i] * J(i, j) != pi[j] * J(j, i)) ok = false;
          }
          if (row != 1) ok = false;
        }
        if (n <= 5)
          for (std::size_t i = 0; i < J.size(); ++i)
            for (std::size_t j = 0; j < J.size(); ++j)
              if (J(i, j) != transition_by_definition(irreducibles[i], irreducibles[j], mu)) ok = false;
        if (!ok) {
          ++bad;
          d << "n=" << n << " mu=" << mu.to_string() << " fails; ";
        }
      }
    }
    d << matrices << " matrices (n<=8; restriction cross-check n<=5), " << bad << " failures";
    return bad == 0;
  });
}

CriterionResult trivial_subgroup_one_step() {
  return run(6, "trivial subgroup reaches Plancherel in one step", [](std::ostream& d) {
    std::size_t bad = 0;
    std::size_t rows = 0;
    for (int n = 1; n <= 7; ++n) {
      const GroupData group = GroupData::symmetric(CharacterTable::build(n));
      const auto pi = group.plancherel<Rational>();
      const auto J = transition_matrix<Rational>(group, ClassRatioVector::trivial_subgroup(group));
      for (std::size_t i = 0; i < J.size(); ++i) {
        ++rows;
        for (std::size_t j = 0; j < J.size(); ++j)
          if (J(i, j) != pi[j]) {
            ++bad;
            d << "n=" << n << " row " << group.irreducible_labels()[i] << "; ";
            break;
          }
      }
    }
    d << rows << " starting representations (n<=7), " << bad << " rows off Plancherel";
    return bad == 0;
  });
}

CriterionResult tensor_multiplicities() {
  return run(7, "tensor power multiplicities match direct inner products", [](std::ostream& d) {
    std::size_t checks = 0;
    std::size_t bad = 0;
    for (int n = 1; n <= 6; ++n) {
      const GroupData group = GroupData::symmetric(CharacterTable::build(n));
      const auto irreducibles = enumerate_partitions(n);
      for (const auto& mu : enumerate_compositions(n)) {
        const ClassRatioVector crv = ratio_vector_for(mu);
        for (unsigned r = 1; r <= 4; ++r)
          for (std::size_t i = 0; i < irreducibles.size(); ++i) {
            ++checks;
            if (tensor_power_multiplicity(group, crv, i, r) != tensor_multiplicity_direct(irreducibles[i], mu, r)) {
              ++bad;
              d << "n=" << n << " mu=" << mu.to_string() << " r=" << r << " lambda=" << irreducibles[i].to_string()
                << "; ";
            }
          }
      }
    }
    const GroupData s3 = GroupData::symmetric(CharacterTable::build(3));
    const ClassRatioVector s2 = ratio_vector_for(Composition({1, 2}));
    std::vector<Integer> got;
    for (std::size_t i = 0; i < 3; ++i) got.push_back(tensor_power_multiplicity(s3, s2, i, 2));
    const bool example = got == std::vector<Integer>{2, 3, 1};
    d << checks << " multiplicities (n<=6, r<=4), " << bad << " mismatches; S3/S2 r=2 gives (" << to_string(got[0])
      << ',' << to_string(got[1]) << ',' << to_string(got[2]) << ')';
    return bad == 0 && example;
  });
}

CriterionResult rsk_suite() {
  return run(8, "RSK: Plancherel pushforward, inversion, Kostka counts, LIS", [](std::ostream& d) {
    std::size_t bad = 0;
    for (int n = 1; n <= 7; ++n) {
      if (pushforward(GroupAlgebraMeasure<Rational>::uniform(n)) != plancherel<Rational>(n)) {
        ++bad;
        d << "pushforward n=" << n << "; ";
      }
      for (const auto& g : all_permutations(n))
        if (rsk_shape(g) != rsk_shape(g.inverse())) {
          ++bad;
          d << "inverse " << g.to_string() << "; ";
          break;
        }
    }
    std::size_t subsets = 0;
    for (int n = 1; n <= 6; ++n)
      for (const auto& mu : enumerate_compositions(n)) {
        ++subsets;
        std::map<Partition, Integer> counts;
        for (const auto& g : x_l_support(RootSubset::from_composition(mu))) ++counts[rsk_shape(g)];
        for (const auto& lambda : enumerate_partitions(n)) {
          const Integer expected = dimension(lambda) * kostka(lambda, mu);
          const Integer seen = counts.count(lambda) ? counts[lambda] : Integer(0);
          if (seen != expected) {
            ++bad;
            d << "X_L n=" << n << " mu=" << mu.to_string() << " lambda=" << lambda.to_string() << "; ";
          }
        }
      }
    std::size_t perms = 0;
    for (int n = 1; n <= 8; ++n)
      for (const auto& g : all_permutations(n)) {
        ++perms;
        if (lis_length(g) != rsk_shape(g)[0]) {
          ++bad;
          d << "lis " << g.to_string() << "; ";
        }
      }
    d << "pushforward and inversion n<=7, " << subsets << " descent classes n<=6, " << perms << " LIS checks n<=8, "
      << bad << " failures";
    return bad == 0;
  });
}

CriterionResult general_linear_beta() {
  return run(9, "GL(n,q) beta: closed form, brute force, direct enumeration", [](std::ostream& d) {
    std::size_t bad = 0;
    std::size_t grid = 0;
    for (int n = 2; n <= 6; ++n)
      for (int q : {2, 3, 4, 5}) {
        ++grid;
        const Rational closed = gl_beta_closed_form(n, q);
        const Rational brute = gl_beta_brute_force(n, q).beta;
        if (closed != brute) {
          ++bad;
          d << "n=" << n << " q=" << q << " closed " << to_string(closed) << " brute " << to_string(brute) << "; ";
        }
      }
    const Rational d2 = gl2_direct_beta(2);
    const Rational d3 = gl2_direct_beta(3);
    const bool direct = d2 == 0 && d3 == ratio(1, 12) && d2 == gl_beta_closed_form(2, 2) &&
                        d3 == gl_beta_closed_form(2, 3);
    d << grid << " (n, q) pairs, " << bad << " mismatches; direct GL(2,2) " << to_string(d2) << ", GL(2,3) "
      << to_string(d3);
    return bad == 0 && direct;
  });
}

CriterionResult monte_carlo_trend(const Options& options) {
  return run(10, "Monte Carlo shape distance decreases for top-to-random, n = 20", [&](std::ostream& d) {
    const int n = 20;
    const unsigned early = n;
    const unsigned late = static_cast<unsigned>(std::ceil(n * std::log(static_cast<double>(n)))) + 2 * n;
    TvCurveOptions o;
    o.mode = TvCurveOptions::Mode::monte_carlo;
    o.r_max = late;
    o.r_step = 10;
    o.extra_points = {early, late};
    o.samples = options.mc_samples;
    o.seed = options.mc_seed;
    o.workers = options.workers;
    const TvCurve curve = tv_curve(ShuffleSpec::top_to_random(n), o);
    const auto at = [&](unsigned r) {
      return *std::find_if(curve.points.begin(), curve.points.end(), [&](const TvPoint& p) { return p.r == r; });
    };
    const TvPoint a = at(early);
    const TvPoint b = at(late);
    const double se = std::sqrt(*a.std_error * *a.std_error + *b.std_error * *b.std_error);
    const bool drop = a.shape_tv - b.shape_tv > 3.0 * se;
    char buffer[256];
    std::snprintf(buffer, sizeof buffer,
                  "seed %llu, %zu samples: TV(r=%u) = %.4f, TV(r=%u) = %.4f, combined SE %.4f; %zu grid points, "
                  "%s within error bars",
                  static_cast<unsigned long long>(options.mc_seed), options.mc_samples, early, a.shape_tv, late,
                  b.shape_tv, se, curve.points.size(), curve.weakly_decreasing ? "decreasing" : "NOT decreasing");
    d << buffer;
    return drop && curve.weakly_decreasing;
  });
}

std::vector<CriterionResult> run_all(const Options& options,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<std::function<CriterionResult()>> criteria{
      chain_equals_shuffle, spectral_bound,      beta_closed_forms,   isospectrality,
      chain_well_formed,    trivial_subgroup_one_step, tensor_multiplicities, rsk_suite,
      general_linear_beta,  [&] { return monte_carlo_trend(options); }};
  std::vector<CriterionResult> out;
  for (const auto& c : criteria) {
    out.push_back(c());
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format(const CriterionResult& result) {
  char head[64];
  std::snprintf(head, sizeof head, "%s [%d] ", result.passed ? "PASS" : "FAIL", result.id);
  char tail[32];
  std::snprintf(tail, sizeof tail, " (%.1f s): ", result.seconds);
  return head + result.name + tail + result.detail;
}

}  // namespace cardrep::selftest
