#include "dcpath/matching.hpp"

#include <queue>
#include <tuple>

#include "dcpath/errors.hpp"

namespace dcpath {

std::vector<std::pair<int, int>> match_closest_adjacent(
    const std::vector<MatchToken>& tokens) {
  const int n = static_cast<int>(tokens.size());
  int count_a = 0;
  for (int i = 0; i + 1 < n; ++i)
    ensure(tokens[i].pos < tokens[i + 1].pos,
           "match tokens must have strictly increasing positions");
  for (const auto& t : tokens) count_a += t.is_a ? 1 : 0;
  ensure(2 * count_a == n, "match tokens must have equal side counts");

  std::vector<int> prev(n), next(n);
  std::vector<bool> alive(n, true);
  for (int i = 0; i < n; ++i) {
    prev[i] = i - 1;
    next[i] = i + 1 < n ? i + 1 : -1;
  }

  using Cand = std::tuple<std::int64_t, std::int64_t, int>;  // dist, pos, left
  std::priority_queue<Cand, std::vector<Cand>, std::greater<>> heap;
  auto push_if_mixed = [&](int i) {
    const int j = next[i];
    if (i < 0 || j < 0) return;
    if (tokens[i].is_a != tokens[j].is_a)
      heap.emplace(tokens[j].pos - tokens[i].pos, tokens[i].pos, i);
  };
  for (int i = 0; i + 1 < n; ++i) push_if_mixed(i);

  std::vector<std::pair<int, int>> out;
  out.reserve(count_a);
  while (!heap.empty()) {
    const auto [dist, pos, i] = heap.top();
    heap.pop();
    const int j = next[i];
    if (!alive[i] || j < 0 || !alive[j]) continue;  // stale entry
    if (tokens[i].is_a == tokens[j].is_a) continue;
    if (tokens[j].pos - tokens[i].pos != dist) continue;
    const int a = tokens[i].is_a ? i : j;
    const int b = tokens[i].is_a ? j : i;
    out.emplace_back(tokens[a].payload, tokens[b].payload);
    alive[i] = alive[j] = false;
    const int p = prev[i];
    const int q = next[j];
    if (p >= 0) next[p] = q;
    if (q >= 0) prev[q] = p;
    if (p >= 0) push_if_mixed(p);
  }
  ensure(static_cast<int>(out.size()) == count_a,
         "adjacent matching did not complete");
  return out;
}

}  // namespace dcpath
