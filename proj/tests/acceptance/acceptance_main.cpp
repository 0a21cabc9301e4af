// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any gating criterion fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "dcpath/bench.hpp"
#include "dcpath/nhap.hpp"
#include "dcpath/oracle.hpp"
#include "dcpath/sweep.hpp"

using namespace dcpath;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", idx,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string sweep_detail(const SweepReport& rep) {
  std::string d = std::to_string(rep.passed) + "/" +
                  std::to_string(rep.cases) + " cases";
  if (!rep.mismatches.empty()) d += "; first: " + rep.mismatches.front();
  return d;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// 1. Exhaustive NHAP check with oracle confirmation, chains 2..5.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const SweepReport rep = sweep_nhap(2, 5, false, /*oracle_check=*/true);
  const double secs = seconds_since(t0);
  const bool pass = rep.ok() && secs < 120.0;
  report(1, "exhaustive NHAP desk-scale check", pass,
         sweep_detail(rep) + ", " + std::to_string(secs) + "s (limit 120)");
}

// 2. Linear-time scaling: doubling ratio <= 3 and n = 1e5 under 1s.
void criterion_2() {
  const BenchReport rep =
      run_bench({10000, 20000, 40000, 80000}, {0.2, 0.5, 0.8}, 3, 20240601);
  const double ratio = rep.worst_doubling_ratio();
  const bool pass = ratio <= 3.0 && rep.seconds_100k < 1.0;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "worst time(2n)/time(n) = %.2f (limit 3), t(1e5) = %.3fs "
                "(limit 1)",
                ratio, rep.seconds_100k);
  report(2, "linear-time construction", pass, detail);
}

// 3. Count identity over random feasible covers; realization fails
//    exactly on infeasible ones.
void criterion_3() {
  const SweepReport rep = sweep_spine_matching(1000, 20240601);
  report(3, "hedgehog count identity and feasibility iff", rep.ok(),
         sweep_detail(rep));
}

// 4. k-hedgehog covers for every coloring of chains up to 10 points and
//    every admissible k.
void criterion_4() {
  const SweepReport rep = sweep_k_cover(10);
  report(4, "cover by exactly k hedgehogs", rep.ok(), sweep_detail(rep));
}

// 5. Periodic coloring bit-exactness plus deterministic oracle runs on
//    the one-point-C2 family; the 56-point attempt is recorded either
//    way and does not gate.
void criterion_5() {
  bool pass = periodic_coloring_16(16) == "BBWWWWBBBBBBWWWW" &&
              periodic_coloring_16(32) ==
                  "BBWWWWBBBBBBWWWWBBWWWWBBBBBBWWWW";
  std::string detail = "pattern ok";
  auto family_coloring = [](int n1) {
    Coloring col;
    col.c1 = periodic_coloring_16(n1);
    const int b = count_color(col.c1, Color::Black);
    col.c2 = b <= n1 - b ? "B" : "W";
    return col;
  };
  for (int n1 : {16, 24, 32}) {
    const DoubleChain dc = generate_double_chain(n1, 1);
    const Coloring col = family_coloring(n1);
    const auto [pts, cols] = flatten_instance(dc, col);
    const SearchBudget budget{2'000'000, 1e9};
    const auto a = brute_force_nhap(pts, cols, budget);
    const auto b = brute_force_nhap(pts, cols, budget);
    const bool deterministic =
        a.status == b.status && a.nodes == b.nodes && a.order == b.order;
    pass = pass && deterministic;
    detail += "; n1=" + std::to_string(n1) + ": " + to_string(a.status) +
              (deterministic ? "" : " NONDETERMINISTIC");
  }
  {
    // Stretch attempt, recorded but non-gating.
    const DoubleChain dc = generate_double_chain(56, 1);
    const Coloring col = family_coloring(56);
    const auto [pts, cols] = flatten_instance(dc, col);
    const auto r = brute_force_nhap(pts, cols, {5'000'000, 1e9});
    detail += "; stretch n1=56: " + std::string(to_string(r.status)) +
              " (non-gating)";
  }
  report(5, "periodic-16 construction and oracle family", pass, detail);
}

// 6. Exhaustive caterpillar embedding sweep at n <= 8.
void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  const SweepReport rep = sweep_caterpillars(8);
  const double secs = seconds_since(t0);
  const bool pass = rep.ok() && secs < 300.0;
  report(6, "caterpillar embeddings", pass,
         sweep_detail(rep) + ", " + std::to_string(secs) + "s (limit 300)");
}

// 7. Exhaustive star-forest sweep at n <= 8 (includes the census
//    identity and the central-path bound).
void criterion_7() {
  const SweepReport rep = sweep_star_forests(8);
  report(7, "star forest embeddings", rep.ok(), sweep_detail(rep));
}

// 8. Necessity: C4 and the subdivided 3-star have no embedding on
//    monochromatic chains, with explicit witnesses.
void criterion_8() {
  bool pass = true;
  std::string detail;
  {
    const ColoredGraph c4{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, "BWBW"};
    ForbiddenWitness w;
    pass = pass && !is_forest_of_caterpillars(c4, &w) && w.cycle.size() >= 3;
    const DoubleChain dc = generate_double_chain(2, 2);
    const Coloring col{"BB", "WW"};
    const auto [pts, cols] = flatten_instance(dc, col);
    const auto res = brute_force_embed(c4, pts, cols, {});
    pass = pass && res.status == SearchStatus::None;
    detail += "C4: " + std::string(to_string(res.status));
  }
  {
    const ColoredGraph k13{7,
                           {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}},
                           "WBBBWWW"};
    ForbiddenWitness w;
    pass = pass && !is_forest_of_caterpillars(k13, &w) && w.k13.size() == 7;
    const DoubleChain dc = generate_double_chain(4, 3);
    const Coloring col{"WWWW", "BBB"};
    const auto [pts, cols] = flatten_instance(dc, col);
    const auto res = brute_force_embed(k13, pts, cols, {});
    pass = pass && res.status == SearchStatus::None;
    detail += "; K+13: " + std::string(to_string(res.status));
  }
  report(8, "forest-of-caterpillars necessity", pass, detail);
}

// 9. Blocking coloring for the cube graph on a triangular-hull set.
void criterion_9() {
  const ColoredGraph q3{8,
                        {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
                         {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}},
                        "BWWBWBBW"};
  const std::vector<Point> pts{{0, 0},  {60, 2},  {30, 55}, {20, 15},
                               {33, 19}, {27, 31}, {39, 25}, {15, 27}};
  bool pass = is_properly_colored(q3) && convex_hull(pts).size() == 3;
  const auto coloring = blocking_coloring_for_quadrangulation(pts, q3);
  const auto res = brute_force_embed(q3, pts, coloring, {});
  pass = pass && res.status == SearchStatus::None;
  report(9, "quadrangulation blocking coloring", pass,
         std::string("oracle: ") + to_string(res.status));
}

// 10. Oracle soundness: every found witness passes the independent
//     validator (the oracle revalidates internally; this re-checks a
//     broad sample externally).
void criterion_10() {
  long long found = 0;
  bool pass = true;
  for (int n1 = 2; n1 <= 4 && pass; ++n1) {
    for (int n2 = 2; n2 <= 4 && pass; ++n2) {
      const int n = n1 + n2;
      const DoubleChain dc = generate_double_chain(n1, n2);
      for (const std::string& s : enumerate_equitable_colorings(n)) {
        const Coloring col{s.substr(0, n1), s.substr(n1)};
        const auto [pts, cols] = flatten_instance(dc, col);
        const auto res = brute_force_nhap(pts, cols, {});
        if (res.status != SearchStatus::Found) continue;
        ++found;
        PathEmbedding pe;
        for (int i : res.order)
          pe.order.emplace_back(i < n1 ? 1 : 2, i < n1 ? i : i - n1);
        const auto rep = validate_path_embedding(dc, col, pe);
        if (!rep.ok) {
          pass = false;
          break;
        }
      }
    }
  }
  report(10, "oracle soundness", pass && found > 0,
         std::to_string(found) + " witnesses revalidated");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
