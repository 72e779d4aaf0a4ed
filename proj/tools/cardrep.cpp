// Command-line front end. Output is CSV with a '#' metadata header and a
// '#'-prefixed verdict block.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cardrep/characters.hpp"
#include "cardrep/errors.hpp"
#include "cardrep/gl_beta.hpp"
#include "cardrep/io.hpp"
#include "cardrep/parabolic.hpp"
#include "cardrep/plancherel_chain.hpp"
#include "cardrep/selftest.hpp"
#include "cardrep/shuffles.hpp"
#include "cardrep/verify.hpp"
#include "cardrep/version.hpp"

using namespace cardrep;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kCapacity = 3 };

struct Common {
  std::string command_line;
  std::string out_path;
};

/// Everything goes to a buffer first so a failed command never leaves a half-written file.
class Output {
 public:
  explicit Output(const Common& common) : common_(common) {}

  std::ostream& stream() { return buffer_; }

  void header(const std::string& command, Arithmetic mode, std::optional<std::uint64_t> seed = std::nullopt) {
    buffer_ << "# cardrep " << kVersion << '\n';
    buffer_ << "# command: " << common_.command_line << '\n';
    buffer_ << "# subcommand: " << command << '\n';
    buffer_ << "# arithmetic: " << to_string(mode) << '\n';
    buffer_ << "# seed: " << (seed ? std::to_string(*seed) : std::string("none")) << '\n';
  }

  void verdict(const std::vector<std::string>& lines) {
    for (const auto& line : lines) buffer_ << "# " << line << '\n';
  }

  void flush() {
    if (common_.out_path.empty()) {
      std::cout << buffer_.str();
      std::cout.flush();
      return;
    }
    std::ofstream file(common_.out_path, std::ios::binary);
    if (!file) throw ArgumentError("cannot write '" + common_.out_path + "'");
    file << buffer_.str();
  }

 private:
  const Common& common_;
  std::ostringstream buffer_;
};

int parse_k(const std::string& text, const std::string& prefix) {
  const std::string rest = text.substr(prefix.size());
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(rest, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != rest.size()) throw ParseError("malformed '" + text + "'");
  return k;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

/// "top", "topk:K", "riffle:K" or a composition such as "1,2".
Composition subgroup_of(const std::string& text, int n) {
  Composition mu;
  if (text == "top") {
    mu = point_stabilizer(n);
  } else if (starts_with(text, "topk:")) {
    mu = top_k_stabilizer(n, parse_k(text, "topk:"));
  } else if (starts_with(text, "riffle:")) {
    mu = k_set_stabilizer(n, parse_k(text, "riffle:"));
  } else {
    mu = Composition::parse(text);
  }
  if (mu.size() != n)
    throw ArgumentError("--mu " + text + " has size " + std::to_string(mu.size()) + ", expected " + std::to_string(n));
  return mu;
}

ShuffleSpec shuffle_of(const std::string& text, int n) {
  if (text == "top") return ShuffleSpec::top_to_random(n);
  if (starts_with(text, "topk:")) return ShuffleSpec::top_k_to_random(n, parse_k(text, "topk:"));
  if (starts_with(text, "riffle:")) return ShuffleSpec::riffle_k_cut(n, parse_k(text, "riffle:"));
  if (starts_with(text, "file:")) return read_shuffle_spec_file(text.substr(5), n);
  throw ParseError("unknown shuffle '" + text + "' (use top, topk:K, riffle:K or file:PATH)");
}

/// Group and subgroup from either --n/--mu or --group-file/--ratios-file.
struct ChainInput {
  GroupData group;
  ClassRatioVector ratios;
  std::string description;
};

struct ChainArgs {
  int n = 0;
  std::string mu;
  std::string group_file;
  std::string ratios_file;
  int max_degree = kDefaultMaxCharacterDegree;
};

void add_chain_args(CLI::App* cmd, ChainArgs& a) {
  cmd->add_option("--n", a.n, "degree of the symmetric group");
  cmd->add_option("--mu", a.mu, "Young subgroup: composition like 1,2 or top | topk:K | riffle:K");
  cmd->add_option("--group-file", a.group_file, "character data of a general group");
  cmd->add_option("--ratios-file", a.ratios_file, "class ratios of a subgroup of that group");
  cmd->add_option("--max-degree", a.max_degree, "largest n for character tables")->capture_default_str();
}

ChainInput chain_input(const ChainArgs& a) {
  if (!a.group_file.empty() || !a.ratios_file.empty()) {
    if (a.group_file.empty() || a.ratios_file.empty())
      throw ArgumentError("--group-file and --ratios-file go together");
    GroupData group = read_group_data_file(a.group_file);
    ClassRatioVector ratios = read_class_ratios_file(a.ratios_file);
    ratios.check_against(group);
    return {std::move(group), std::move(ratios), "file " + a.group_file + " / " + a.ratios_file};
  }
  if (a.n < 1) throw ArgumentError("--n is required (positive)");
  if (a.mu.empty()) throw ArgumentError("--mu is required");
  const Composition mu = subgroup_of(a.mu, a.n);
  GroupData group = GroupData::symmetric(CharacterTable::build(a.n, a.max_degree));
  return {std::move(group), ratio_vector_for(mu, a.max_degree), "S_" + std::to_string(a.n) + " / S_(" + mu.to_string() + ")"};
}

std::string witnesses_of(const GroupData& group, const std::vector<std::size_t>& classes) {
  std::string out;
  for (std::size_t c : classes) out += (out.empty() ? "" : " ") + std::string("[") + group.class_labels()[c] + "]";
  return out.empty() ? "none" : out;
}

int run_spectrum(const Common& common, const ChainArgs& a) {
  const ChainInput in = chain_input(a);
  const ChainSpectrum sp = spectrum(in.group, in.ratios);
  const SpectralBound b = in.group.group_order() > 1 ? spectral_bound(in.group, in.ratios, 1) : SpectralBound{};
  Output out(common);
  out.header("spectrum", Arithmetic::exact);
  auto& s = out.stream();
  s << "class,class_size,eigenvalue,is_witness\n";
  for (std::size_t c = 0; c < in.group.class_count(); ++c) {
    const bool witness = std::find(b.witness_classes.begin(), b.witness_classes.end(), c) != b.witness_classes.end();
    s << csv_field(in.group.class_labels()[c]) << ',' << to_string(sp.class_sizes[c]) << ','
      << to_string(sp.eigenvalues[c]) << ',' << (witness ? 1 : 0) << '\n';
  }
  out.verdict({"group: " + in.description, "beta: " + to_string(b.beta),
               "witness classes: " + witnesses_of(in.group, b.witness_classes)});
  out.flush();
  return kOk;
}

int run_evolve(const Common& common, const ChainArgs& a, unsigned r, bool exact) {
  const ChainInput in = chain_input(a);
  Output out(common);
  out.header("evolve", exact ? Arithmetic::exact : Arithmetic::floating);
  auto& s = out.stream();
  std::vector<std::string> verdict{"group: " + in.description, "steps: " + std::to_string(r)};
  if (exact) {
    const auto dist = r_step_from_trivial<Rational>(in.group, in.ratios, r);
    const auto pi = in.group.plancherel<Rational>();
    s << "irreducible,probability,plancherel" << (r >= 1 ? ",multiplicity" : "") << '\n';
    for (std::size_t i = 0; i < dist.size(); ++i) {
      s << csv_field(dist.labels()[i]) << ',' << to_string(dist[i]) << ',' << to_string(pi[i]);
      if (r >= 1) s << ',' << to_string(tensor_power_multiplicity(in.group, in.ratios, i, r));
      s << '\n';
    }
    const Rational l1 = l1_to_plancherel(dist, in.group);
    verdict.push_back("l1_to_plancherel: " + to_string(l1) + " (" + format_value(to_double(l1)) + ")");
    if (in.group.group_order() > 1) {
      const SpectralBound b = spectral_bound(in.group, in.ratios, r);
      verdict.push_back("beta: " + to_string(b.beta) + "; witnesses " + witnesses_of(in.group, b.witness_classes));
      verdict.push_back("bound sqrt(|G|) beta^r: " + format_value(b.bound));
      verdict.push_back(std::string("bound holds: ") + (b.dominates(l1, in.group.group_order()) ? "yes" : "NO"));
    }
  } else {
    const auto dist = r_step_from_trivial<double>(in.group, in.ratios, r);
    const auto pi = in.group.plancherel<double>();
    s << "irreducible,probability,plancherel\n";
    for (std::size_t i = 0; i < dist.size(); ++i)
      s << csv_field(dist.labels()[i]) << ',' << format_value(dist[i]) << ',' << format_value(pi[i]) << '\n';
    verdict.push_back("l1_to_plancherel: " + format_value(l1_to_plancherel(dist, in.group)));
    if (in.group.group_order() > 1) {
      const SpectralBound b = spectral_bound(in.group, in.ratios, r);
      verdict.push_back("beta: " + to_string(b.beta) + "; witnesses " + witnesses_of(in.group, b.witness_classes));
      verdict.push_back("bound sqrt(|G|) beta^r: " + format_value(b.bound));
    }
  }
  out.verdict(verdict);
  out.flush();
  return kOk;
}

int run_verify_shape_law(const Common& common, int n, const std::string& shuffle, unsigned r, int max_degree) {
  const ShuffleSpec spec = shuffle_of(shuffle, n);
  const ShapeLawReport report = verify_shape_law(spec, r, max_degree);
  Output out(common);
  out.header("verify-shape-law", Arithmetic::exact);
  auto& s = out.stream();
  s << "lambda,chain_side,shuffle_side,difference\n";
  for (std::size_t i = 0; i < report.chain_side.size(); ++i)
    s << csv_field(report.chain_side.labels()[i].to_string()) << ',' << to_string(report.chain_side[i]) << ','
      << to_string(report.shuffle_side[i]) << ',' << to_string(Rational(report.chain_side[i] - report.shuffle_side[i]))
      << '\n';
  out.verdict({"n: " + std::to_string(n) + ", shuffle: " + shuffle + ", r: " + std::to_string(r),
               "max discrepancy: " + to_string(report.max_discrepancy),
               std::string("verdict: ") + (report.holds() ? "PASS" : "FAIL")});
  out.flush();
  return report.holds() ? kOk : kFailed;
}

int run_isospectral(const Common& common, int n, const std::string& shuffle, int max_degree) {
  const ShuffleSpec spec = shuffle_of(shuffle, n);
  const IsospectralReport report = isospectral_check(spec, max_degree);
  Output out(common);
  out.header("verify-isospectral", Arithmetic::exact);
  auto& s = out.stream();
  s << "side,eigenvalue,multiplicity\n";
  for (const auto& [v, count] : report.chain_side) s << "chain," << to_string(v) << ',' << count << '\n';
  for (const auto& [v, count] : report.shuffle_side) s << "shuffle," << to_string(v) << ',' << count << '\n';
  out.verdict({"n: " + std::to_string(n) + ", shuffle: " + shuffle,
               "chain multiplicities count classes; shuffle multiplicities count permutations",
               "distinct eigenvalues: chain " + std::to_string(report.chain_side.size()) + ", shuffle " +
                   std::to_string(report.shuffle_side.size()),
               std::string("verdict: ") + (report.equal ? "PASS (same set)" : "FAIL (sets differ)")});
  out.flush();
  return report.equal ? kOk : kFailed;
}

struct TvArgs {
  int n = 0;
  std::string shuffle;
  unsigned r_max = 0;
  unsigned step = 1;
  bool mc = false;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  unsigned bootstrap = 200;
  int max_degree = kDefaultMaxExactDegree;
};

int run_tv_curve(const Common& common, const TvArgs& a) {
  const ShuffleSpec spec = shuffle_of(a.shuffle, a.n);
  TvCurveOptions o;
  o.mode = a.mc ? TvCurveOptions::Mode::monte_carlo : TvCurveOptions::Mode::exact;
  o.r_max = a.r_max;
  o.r_step = a.step;
  o.samples = a.samples;
  o.seed = a.seed;
  o.workers = a.workers;
  o.bootstrap_resamples = a.bootstrap;
  o.max_degree = a.max_degree;
  const TvCurve curve = tv_curve(spec, o);
  Output out(common);
  out.header("tv-curve", a.mc ? Arithmetic::floating : Arithmetic::exact, a.mc ? std::optional(a.seed) : std::nullopt);
  auto& s = out.stream();
  if (a.mc) {
    s << "r,shape_tv,std_error\n";
    for (const auto& p : curve.points) s << p.r << ',' << format_value(p.shape_tv) << ',' << format_value(*p.std_error) << '\n';
  } else {
    s << "r,shape_tv,shape_tv_exact,permutation_tv\n";
    for (const auto& p : curve.points)
      s << p.r << ',' << format_value(p.shape_tv) << ',' << to_string(*p.exact_shape_tv) << ','
        << format_value(*p.permutation_tv) << '\n';
  }
  std::vector<std::string> verdict{"n: " + std::to_string(a.n) + ", shuffle: " + a.shuffle};
  if (a.mc) {
    verdict.push_back("samples: " + std::to_string(curve.samples) + ", bootstrap resamples: " + std::to_string(a.bootstrap));
    verdict.push_back("estimator: plug-in shape frequencies against exact Plancherel (biased upwards)");
  } else {
    bool below = true;
    for (const auto& p : curve.points) below = below && p.shape_tv <= *p.permutation_tv;
    verdict.push_back(std::string("shape distance <= permutation distance at every r: ") + (below ? "yes" : "NO"));
  }
  verdict.push_back("increases between consecutive points: " + std::to_string(curve.increases));
  verdict.push_back(std::string("weakly decreasing") + (a.mc ? " within 3 standard errors: " : ": ") +
                    (curve.weakly_decreasing ? "yes" : "no"));
  out.verdict(verdict);
  out.flush();
  return kOk;
}

int run_gl_beta(const Common& common, int n, int q, bool brute, bool direct) {
  const Rational closed = gl_beta_closed_form(n, q);
  std::optional<GLBetaResult> b;
  if (brute || direct) b = gl_beta_brute_force(n, q);
  std::optional<Rational> d;
  if (direct) {
    if (n != 2) throw ArgumentError("--direct enumerates GL(2,q) only; use --n 2");
    d = gl2_direct_beta(q);
  }
  Output out(common);
  out.header("gl-beta", Arithmetic::exact);
  auto& s = out.stream();
  s << "n,q,closed_form,brute_force,direct,witness\n";
  std::string witness;
  if (b) {
    for (const auto& w : b->witnesses)
      witness += (witness.empty() ? "" : " ") + std::string("lambda=(") + w.lambda_z1().to_string() +
                 ") residual=" + std::to_string(w.residual_weight());
  }
  s << n << ',' << q << ',' << to_string(closed) << ',' << (b ? to_string(b->beta) : "") << ','
    << (d ? to_string(*d) : "") << ',' << csv_field(witness) << '\n';
  bool agree = (!b || b->beta == closed) && (!d || *d == closed);
  out.verdict({std::string("verdict: ") + (agree ? "PASS (all computed values agree)" : "FAIL (values differ)")});
  out.flush();
  return agree ? kOk : kFailed;
}

int run_selftest(const Common& common, const selftest::Options& options) {
  Output out(common);
  out.header("selftest", Arithmetic::exact, options.mc_seed);
  auto& s = out.stream();
  s << "criterion,name,result,detail\n";
  bool all = true;
  for (const auto& r : selftest::run_all(options)) {
    all = all && r.passed;
    s << r.id << ',' << csv_field(r.name) << ',' << (r.passed ? "PASS" : "FAIL") << ',' << csv_field(r.detail) << '\n';
  }
  out.verdict({std::string("verdict: ") + (all ? "all criteria passed" : "some criteria FAILED")});
  out.flush();
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Common common;
  for (int i = 0; i < argc; ++i) common.command_line += (i ? " " : "") + std::string(i ? argv[i] : "cardrep");

  CLI::App app{"Exact representation-theoretic card shuffling toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.add_option("--out", common.out_path, "write output to this file instead of stdout");

  ChainArgs spectrum_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues |C n H| / |C| of the chain, with beta witnesses");
  add_chain_args(spectrum_cmd, spectrum_args);

  ChainArgs evolve_args;
  unsigned evolve_r = 1;
  bool evolve_exact = false;
  auto* evolve_cmd = app.add_subcommand("evolve", "r-step distribution from the trivial representation");
  add_chain_args(evolve_cmd, evolve_args);
  evolve_cmd->add_option("--r", evolve_r, "number of steps")->required();
  evolve_cmd->add_flag("--exact", evolve_exact, "rational arithmetic, adds tensor power multiplicities");

  int shuffle_n = 0;
  std::string shuffle_text;
  unsigned shape_r = 1;
  int exact_max = kDefaultMaxExactDegree;
  auto* shape_cmd = app.add_subcommand("verify-shape-law", "compare the mixed chain with the RSK shape law of the shuffle");
  shape_cmd->alias("verify-thm2");
  shape_cmd->add_option("--n", shuffle_n, "number of cards")->required();
  shape_cmd->add_option("--shuffle", shuffle_text, "top | topk:K | riffle:K | file:PATH")->required();
  shape_cmd->add_option("--r", shape_r, "number of shuffles")->required();
  shape_cmd->add_option("--max-degree", exact_max, "largest n for exact work over S_n")->capture_default_str();

  auto* iso_cmd = app.add_subcommand("verify-isospectral", "compare the eigenvalue sets of chain and shuffle");
  iso_cmd->add_option("--n", shuffle_n, "number of cards")->required();
  iso_cmd->add_option("--shuffle", shuffle_text, "top | topk:K | riffle:K | file:PATH")->required();
  iso_cmd->add_option("--max-degree", exact_max, "largest n for the permutation enumeration")->capture_default_str();

  TvArgs tv_args;
  auto* tv_cmd = app.add_subcommand("tv-curve", "total variation to stationarity along a grid of shuffle counts");
  tv_cmd->add_option("--n", tv_args.n, "number of cards")->required();
  tv_cmd->add_option("--shuffle", tv_args.shuffle, "top | topk:K | riffle:K | file:PATH")->required();
  tv_cmd->add_option("--rmax", tv_args.r_max, "largest number of shuffles")->required();
  tv_cmd->add_option("--step", tv_args.step, "grid spacing")->capture_default_str();
  tv_cmd->add_flag("--mc", tv_args.mc, "Monte Carlo instead of exact convolution");
  tv_cmd->add_option("--samples", tv_args.samples, "Monte Carlo trajectories")->capture_default_str();
  tv_cmd->add_option("--seed", tv_args.seed, "Monte Carlo seed")->capture_default_str();
  tv_cmd->add_option("--workers", tv_args.workers, "threads (0: all cores); results do not depend on it");
  tv_cmd->add_option("--bootstrap", tv_args.bootstrap, "bootstrap resamples")->capture_default_str();
  tv_cmd->add_option("--max-degree", tv_args.max_degree, "largest n for exact work")->capture_default_str();

  int gl_n = 0;
  int gl_q = 0;
  bool gl_brute = false;
  bool gl_direct = false;
  auto* gl_cmd = app.add_subcommand("gl-beta", "beta for GL(n-1,q) inside GL(n,q)");
  gl_cmd->add_option("--n", gl_n, "matrix size")->required();
  gl_cmd->add_option("--q", gl_q, "field size")->required();
  gl_cmd->add_flag("--brute-force", gl_brute, "maximize over conjugacy data");
  gl_cmd->add_flag("--direct", gl_direct, "enumerate GL(2,q) matrices (q = 2, 3); implies --brute-force");

  selftest::Options st;
  auto* st_cmd = app.add_subcommand("selftest", "run the full acceptance grid");
  st_cmd->add_option("--samples", st.mc_samples, "Monte Carlo trajectories")->capture_default_str();
  st_cmd->add_option("--seed", st.mc_seed, "Monte Carlo seed")->capture_default_str();
  st_cmd->add_option("--workers", st.workers, "threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*spectrum_cmd) return run_spectrum(common, spectrum_args);
    if (*evolve_cmd) return run_evolve(common, evolve_args, evolve_r, evolve_exact);
    if (*shape_cmd) return run_verify_shape_law(common, shuffle_n, shuffle_text, shape_r, exact_max);
    if (*iso_cmd) return run_isospectral(common, shuffle_n, shuffle_text, exact_max);
    if (*tv_cmd) return run_tv_curve(common, tv_args);
    if (*gl_cmd) return run_gl_beta(common, gl_n, gl_q, gl_brute, gl_direct);
    if (*st_cmd) return run_selftest(common, st);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
