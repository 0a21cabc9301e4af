#ifndef DCPATH_SWEEP_HPP
#define DCPATH_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcpath/trees.hpp"

namespace dcpath {

struct SweepReport {
  std::string suite;
  long long cases = 0;
  long long passed = 0;
  long long failed = 0;
  std::vector<std::string> mismatches;  // capped sample of failures
  nlohmann::json meta;                  // suite parameters (seeds, bounds)

  bool ok() const { return failed == 0 && cases > 0; }
  nlohmann::json to_json() const;
  void record(bool pass, const std::string& what);
};

// Exhaustive desk-scale suites. inject_fault deliberately corrupts every
// produced embedding before validation; the report must then show
// mismatches (a self-test of the harness).
SweepReport sweep_nhap(int min_chain, int max_chain, bool inject_fault = false,
                       bool oracle_check = true);
SweepReport sweep_k_cover(int max_chain);
SweepReport sweep_spine_matching(int feasible_samples, std::uint64_t seed);
SweepReport sweep_caterpillars(int max_n, bool inject_fault = false);
SweepReport sweep_star_forests(int max_n, bool inject_fault = false);

// Enumeration helpers used by the suites and tests.
std::vector<Caterpillar> enumerate_caterpillars(int n, bool equitable_only);
std::vector<ColoredGraph> enumerate_star_forests(int n);
std::vector<Coloring> compatible_colorings(int n1, int n2, int blacks);

}  // namespace dcpath

#endif
