#pragma once

#include <cstdint>
#include <string>
#include <vector>

// End-to-end checks over the whole library: exact tile algebra, verified
// patches, dynamics, substitutions, and the subgroup isomorphism. Each
// criterion is self-contained and reports pass/fail with a short summary.
namespace bs::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 20260814;
};

// All ten criteria in order; never throws, failures are reported in-band.
std::vector<CriterionResult> run_all(const Options& opts = {});

}  // namespace bs::acceptance
