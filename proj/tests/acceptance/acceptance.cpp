// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "cardrep/selftest.hpp"

int main(int argc, char** argv) {
  cardrep::selftest::Options options;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--samples") options.mc_samples = std::stoull(argv[i + 1]);
    else if (flag == "--seed") options.mc_seed = std::stoull(argv[i + 1]);
    else if (flag == "--workers") options.workers = static_cast<unsigned>(std::stoul(argv[i + 1]));
  }
  bool all = true;
  cardrep::selftest::run_all(options, [&](const cardrep::selftest::CriterionResult& r) {
    std::printf("%s\n", cardrep::selftest::format(r).c_str());
    std::fflush(stdout);
    all = all && r.passed;
  });
  std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
