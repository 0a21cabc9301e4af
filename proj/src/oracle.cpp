#include "dcpath/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace dcpath {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetGuard {
  long long nodes = 0;
  long long limit;
  Clock::time_point deadline;
  bool exhausted = false;

  explicit BudgetGuard(const SearchBudget& b)
      : limit(b.node_limit),
        deadline(Clock::now() +
                 std::chrono::duration_cast<Clock::duration>(
                     std::chrono::duration<double>(b.time_limit_s))) {
    require(b.node_limit > 0 && b.time_limit_s > 0, "budget must be positive");
  }

  // Returns false when the budget is gone.
  bool tick() {
    ++nodes;
    if (nodes > limit) {
      exhausted = true;
      return false;
    }
    if ((nodes & 1023) == 0 && Clock::now() > deadline) {
      exhausted = true;
      return false;
    }
    return true;
  }
};

void assert_general_position(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  require(n <= 300, "oracle accepts at most 300 points");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      require(!(pts[i] == pts[j]), "duplicate points");
      for (int k = j + 1; k < n; ++k)
        require(orientation(pts[i], pts[j], pts[k]) != 0,
                "points are not in general position (collinear triple)");
    }
}

struct NhapSearcher {
  const std::vector<Point>& pts;
  const std::vector<Color>& cols;
  BudgetGuard& guard;
  int n;
  std::vector<int> path;
  std::vector<bool> used;
  int start = 0;

  bool extend() {
    if (static_cast<int>(path.size()) == n)
      return path.back() > start;  // canonical orientation only
    const Color want = opposite(cols[path.back()]);
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || cols[cand] != want) continue;
      if (!guard.tick()) return false;
      const Segment fresh{pts[path.back()], pts[cand]};
      bool crossing = false;
      for (std::size_t e = 0; e + 2 < path.size() && !crossing; ++e)
        crossing = segments_properly_cross(
            fresh, {pts[path[e]], pts[path[e + 1]]});
      if (crossing) continue;
      path.push_back(cand);
      used[cand] = true;
      if (extend()) return true;
      if (guard.exhausted) return false;
      path.pop_back();
      used[cand] = false;
    }
    return false;
  }
};

}  // namespace

NhapSearchResult brute_force_nhap(const std::vector<Point>& points,
                                  const std::vector<Color>& colors,
                                  const SearchBudget& budget) {
  require(points.size() == colors.size(), "points/colors size mismatch");
  require(!points.empty(), "empty point set");
  assert_general_position(points);
  const int n = static_cast<int>(points.size());

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return points[a].x != points[b].x ? points[a].x < points[b].x
                                      : points[a].y < points[b].y;
  });
  std::vector<Point> pts(n);
  std::vector<Color> cols(n);
  for (int i = 0; i < n; ++i) {
    pts[i] = points[perm[i]];
    cols[i] = colors[perm[i]];
  }

  NhapSearchResult res;
  int blacks = 0;
  for (Color c : cols) blacks += c == Color::Black ? 1 : 0;
  const int whites = n - blacks;
  if (std::abs(blacks - whites) > 1) {
    // An alternating Hamiltonian path forces |#B - #W| <= 1; the search
    // space is empty.
    res.status = SearchStatus::None;
    return res;
  }

  BudgetGuard guard(budget);
  NhapSearcher searcher{pts, cols, guard, n, {}, std::vector<bool>(n, false)};
  for (int s = 0; s < n && !guard.exhausted; ++s) {
    // With unequal counts the majority color must start; with equal
    // counts either endpoint color can, and canonicalization by the
    // smaller endpoint keeps each path enumerated exactly once.
    if (blacks > whites && cols[s] != Color::Black) continue;
    if (whites > blacks && cols[s] != Color::White) continue;
    if (!guard.tick()) break;
    searcher.path = {s};
    searcher.used.assign(n, false);
    searcher.used[s] = true;
    searcher.start = s;
    if (searcher.extend()) {
      res.status = SearchStatus::Found;
      res.order.resize(n);
      for (int i = 0; i < n; ++i) res.order[i] = perm[searcher.path[i]];
      res.nodes = guard.nodes;
      // Soundness: every reported witness passes the validator.
      std::vector<Point> in_order(n);
      for (int i = 0; i < n; ++i) in_order[i] = points[res.order[i]];
      ensure(path_is_noncrossing(in_order), "oracle witness has a crossing");
      for (int i = 0; i + 1 < n; ++i)
        ensure(colors[res.order[i]] != colors[res.order[i + 1]],
               "oracle witness does not alternate");
      return res;
    }
  }
  res.nodes = guard.nodes;
  res.status = guard.exhausted ? SearchStatus::Inconclusive : SearchStatus::None;
  return res;
}

namespace {

struct EmbedSearcher {
  const ColoredGraph& g;
  const std::vector<Point>& pts;
  const std::vector<Color>& cols;
  const std::vector<std::vector<int>>& placed_neighbors;  // per order slot
  const std::vector<int>& order;
  BudgetGuard& guard;
  std::vector<int> point_of;  // by vertex, -1 unplaced
  std::vector<bool> used;

  bool place(std::size_t slot) {
    if (slot == order.size()) return true;
    const int v = order[slot];
    const Color want = color_from_char(g.colors[v]);
    const int n = static_cast<int>(pts.size());
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || cols[cand] != want) continue;
      if (!guard.tick()) return false;
      bool ok = true;
      for (int u : placed_neighbors[slot]) {
        // Shared endpoints are handled by the predicate itself; general
        // position rules out collinear overlap.
        const Segment fresh{pts[cand], pts[point_of[u]]};
        for (std::size_t s2 = 0; s2 < slot && ok; ++s2) {
          const int w = order[s2];
          for (int x : placed_neighbors[s2]) {
            if (segments_properly_cross(fresh,
                                        {pts[point_of[w]], pts[point_of[x]]})) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) break;
      }
      if (!ok) continue;
      point_of[v] = cand;
      used[cand] = true;
      if (place(slot + 1)) return true;
      if (guard.exhausted) return false;
      point_of[v] = -1;
      used[cand] = false;
    }
    return false;
  }
};

// Placement order: caterpillar components spine-first with leaves right
// after their spine vertex, BFS otherwise.
std::vector<int> placement_order(const ColoredGraph& g) {
  const auto adj = adjacency_lists(g);
  std::vector<bool> seen(g.n, false);
  std::vector<int> order;
  for (int root = 0; root < g.n; ++root) {
    if (seen[root]) continue;
    std::vector<int> comp{root};
    seen[root] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int u : adj[comp[i]])
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    ColoredGraph sub;
    sub.n = g.n;
    sub.colors = g.colors;
    std::vector<bool> in_comp(g.n, false);
    for (int v : comp) in_comp[v] = true;
    for (const auto& e : g.edges)
      if (in_comp[e.first]) sub.edges.push_back(e);
    bool caterpillar_ordered = false;
    try {
      ColoredGraph comp_graph;
      std::vector<int> back(comp.size());
      std::vector<int> fwd(g.n, -1);
      comp_graph.n = static_cast<int>(comp.size());
      for (std::size_t i = 0; i < comp.size(); ++i) {
        fwd[comp[i]] = static_cast<int>(i);
        back[i] = comp[i];
        comp_graph.colors.push_back(g.colors[comp[i]]);
      }
      for (const auto& e : sub.edges)
        comp_graph.edges.emplace_back(fwd[e.first], fwd[e.second]);
      const Caterpillar cat = caterpillar_from_graph(comp_graph);
      std::vector<bool> spine(comp_graph.n, false);
      for (int v : cat.central_path) spine[v] = true;
      const auto cadj = adjacency_lists(comp_graph);
      if (cat.central_path.empty()) {
        for (std::size_t i = 0; i < comp.size(); ++i) order.push_back(comp[i]);
      } else {
        for (int v : cat.central_path) {
          order.push_back(back[v]);
          for (int u : cadj[v])
            if (!spine[u]) order.push_back(back[u]);
        }
      }
      caterpillar_ordered = true;
    } catch (const PreconditionError&) {
      caterpillar_ordered = false;
    }
    if (!caterpillar_ordered) {
      // BFS from the smallest vertex.
      std::vector<bool> vis(g.n, false);
      std::vector<int> queue{comp[0]};
      vis[comp[0]] = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order.push_back(queue[i]);
        for (int u : adj[queue[i]])
          if (!vis[u]) {
            vis[u] = true;
            queue.push_back(u);
          }
      }
    }
  }
  return order;
}

}  // namespace

EmbedSearchResult brute_force_embed(const ColoredGraph& g,
                                    const std::vector<Point>& points,
                                    const std::vector<Color>& colors,
                                    const SearchBudget& budget) {
  require(points.size() == colors.size(), "points/colors size mismatch");
  require(g.n == static_cast<int>(points.size()),
          "graph and point set sizes differ");
  assert_general_position(points);

  EmbedSearchResult res;
  int pb = 0, gb = 0;
  for (Color c : colors) pb += c == Color::Black ? 1 : 0;
  gb = count_color(g.colors, Color::Black);
  if (pb != gb) {
    res.status = SearchStatus::None;  // incompatible counts
    return res;
  }

  const std::vector<int> order = placement_order(g);
  std::vector<std::vector<int>> placed_neighbors(order.size());
  {
    std::vector<int> slot_of(g.n, -1);
    const auto adj = adjacency_lists(g);
    for (std::size_t i = 0; i < order.size(); ++i) slot_of[order[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int u : adj[order[i]])
        if (slot_of[u] < static_cast<int>(i)) placed_neighbors[i].push_back(u);
  }

  BudgetGuard guard(budget);
  EmbedSearcher searcher{g,     points, colors, placed_neighbors, order,
                         guard, std::vector<int>(g.n, -1),
                         std::vector<bool>(g.n, false)};
  if (searcher.place(0)) {
    res.status = SearchStatus::Found;
    res.point_of_vertex = searcher.point_of;
    res.nodes = guard.nodes;
    std::vector<std::pair<int, int>> edges = g.edges;
    std::vector<Point> mapped(g.n);
    for (int v = 0; v < g.n; ++v) mapped[v] = points[searcher.point_of[v]];
    ensure(edges_noncrossing(mapped, edges), "oracle witness has a crossing");
    for (int v = 0; v < g.n; ++v)
      ensure(colors[searcher.point_of[v]] == color_from_char(g.colors[v]),
             "oracle witness has a color mismatch");
    return res;
  }
  res.nodes = guard.nodes;
  res.status = guard.exhausted ? SearchStatus::Inconclusive : SearchStatus::None;
  return res;
}

std::vector<std::string> enumerate_equitable_colorings(int n) {
  require(n >= 1 && n <= 24, "enumeration supported for 1 <= n <= 24");
  std::vector<std::string> out;
  std::string cur(n, 'B');
  auto rec = [&](auto&& self, int i, int blacks) -> void {
    const int rest = n - i;
    if (blacks > (n + 1) / 2 || blacks + rest < n / 2) return;
    if (i == n) {
      if (std::abs(2 * blacks - n) <= 1) out.push_back(cur);
      return;
    }
    cur[i] = 'B';
    self(self, i + 1, blacks + 1);
    cur[i] = 'W';
    self(self, i + 1, blacks);
  };
  rec(rec, 0, 0);
  return out;
}

std::pair<std::vector<Point>, std::vector<Color>> flatten_instance(
    const DoubleChain& dc, const Coloring& col) {
  require(col.n() == dc.n(), "coloring size mismatch");
  std::vector<Point> pts;
  std::vector<Color> cols;
  for (int i = 0; i < dc.c1.size(); ++i) {
    pts.push_back(dc.c1.points[i]);
    cols.push_back(col.at(1, i));
  }
  for (int i = 0; i < dc.c2.size(); ++i) {
    pts.push_back(dc.c2.points[i]);
    cols.push_back(col.at(2, i));
  }
  return {pts, cols};
}

}  // namespace dcpath
