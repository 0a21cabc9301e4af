#include "dcpath/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "dcpath/nhap.hpp"

namespace dcpath {

namespace {

// Structural validation cheap enough for the bench sizes: coverage and
// alternation are O(n); the geometric check stays in the test suites.
void check_structure(const DoubleChain& dc, const Coloring& col,
                     const PathEmbedding& pe) {
  const int n = dc.n();
  if (static_cast<int>(pe.order.size()) != n)
    throw InternalError("bench run produced a short path");
  std::vector<bool> seen1(dc.c1.size(), false), seen2(dc.c2.size(), false);
  for (const auto& [chain, pos] : pe.order) {
    auto& seen = chain == 1 ? seen1 : seen2;
    if (pos < 0 || pos >= static_cast<int>(seen.size()) || seen[pos])
      throw InternalError("bench run produced a non-Hamiltonian path");
    seen[pos] = true;
  }
  for (std::size_t i = 0; i + 1 < pe.order.size(); ++i)
    if (col.at(pe.order[i].first, pe.order[i].second) ==
        col.at(pe.order[i + 1].first, pe.order[i + 1].second))
      throw InternalError("bench run produced a non-alternating path");
}

}  // namespace

nlohmann::json BenchReport::to_json() const {
  nlohmann::json pts = nlohmann::json::array();
  for (const BenchPoint& p : points)
    pts.push_back({{"n", p.n}, {"c1_fraction", p.c1_fraction},
                   {"seconds", p.seconds}});
  return {{"points", pts},
          {"seconds_100k", seconds_100k},
          {"seed", seed},
          {"worst_doubling_ratio", worst_doubling_ratio()}};
}

double BenchReport::worst_doubling_ratio() const {
  double worst = 0.0;
  for (const BenchPoint& a : points)
    for (const BenchPoint& b : points)
      if (b.n == 2 * a.n && a.c1_fraction == b.c1_fraction && a.seconds > 0)
        worst = std::max(worst, b.seconds / a.seconds);
  return worst;
}

Coloring random_equitable_coloring(int n1, int n2, std::uint64_t seed) {
  const int n = n1 + n2;
  std::mt19937_64 rng(seed);
  int blacks = n / 2;
  if (n % 2 == 1 && (rng() & 1)) ++blacks;
  std::string all(n, 'W');
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  for (int i = 0; i < blacks; ++i) all[idx[i]] = 'B';
  return {all.substr(0, n1), all.substr(n1)};
}

BenchReport run_bench(const std::vector<int>& ns,
                      const std::vector<double>& fractions, int reps,
                      std::uint64_t seed) {
  using Clock = std::chrono::steady_clock;
  BenchReport report;
  report.seed = seed;
  for (const double frac : fractions) {
    for (const int n : ns) {
      const int n1 = std::max(1, static_cast<int>(std::lround(frac * n)));
      const int n2 = n - n1;
      const DoubleChain dc = generate_double_chain(n1, n2);
      const Coloring col = random_equitable_coloring(n1, n2, seed ^ n);
      double best = 1e300;
      for (int r = 0; r < reps; ++r) {
        const auto t0 = Clock::now();
        const PathEmbedding pe = embed_nhap(dc, col);
        const auto t1 = Clock::now();
        check_structure(dc, col, pe);
        best = std::min(best,
                        std::chrono::duration<double>(t1 - t0).count());
      }
      report.points.push_back({n, frac, best});
    }
  }
  {
    const int n = 100000, n1 = 60000, n2 = n - n1;
    const DoubleChain dc = generate_double_chain(n1, n2);
    const Coloring col = random_equitable_coloring(n1, n2, seed ^ 0x5eedULL);
    double best = 1e300;
    for (int r = 0; r < std::max(1, reps); ++r) {
      const auto t0 = Clock::now();
      const PathEmbedding pe = embed_nhap(dc, col);
      const auto t1 = Clock::now();
      check_structure(dc, col, pe);
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    report.seconds_100k = best;
  }
  return report;
}

}  // namespace dcpath
