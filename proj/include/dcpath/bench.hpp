#ifndef DCPATH_BENCH_HPP
#define DCPATH_BENCH_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "dcpath/chains.hpp"

namespace dcpath {

struct BenchPoint {
  int n = 0;
  double c1_fraction = 0.5;
  double seconds = 0.0;  // best of `reps` construction-only runs
};

struct BenchReport {
  std::vector<BenchPoint> points;
  double seconds_100k = 0.0;
  std::uint64_t seed = 0;
  nlohmann::json to_json() const;

  // Largest time(2n)/time(n) over consecutive ladder entries with the
  // same chain fraction.
  double worst_doubling_ratio() const;
};

Coloring random_equitable_coloring(int n1, int n2, std::uint64_t seed);

BenchReport run_bench(const std::vector<int>& ns,
                      const std::vector<double>& fractions, int reps,
                      std::uint64_t seed);

}  // namespace dcpath

#endif
