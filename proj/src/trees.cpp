#include "dcpath/trees.hpp"

#include <algorithm>
#include <numeric>

#include "dcpath/matching.hpp"

namespace dcpath {

namespace {

void validate_graph(const ColoredGraph& g) {
  require(g.n >= 0, "negative vertex count");
  require(static_cast<int>(g.colors.size()) == g.n,
          "graph colors length does not match n");
  for (char c : g.colors) color_from_char(c);
  for (const auto& [u, v] : g.edges) {
    require(u >= 0 && u < g.n && v >= 0 && v < g.n, "edge index out of range");
    require(u != v, "self-loop");
  }
}

Color gcolor(const ColoredGraph& g, int v) { return color_from_char(g.colors[v]); }

}  // namespace

bool is_properly_colored(const ColoredGraph& g) {
  for (const auto& [u, v] : g.edges)
    if (g.colors[u] == g.colors[v]) return false;
  return true;
}

bool is_equitably_colored(const ColoredGraph& g) {
  const int b = count_color(g.colors, Color::Black);
  return std::abs(2 * b - g.n) <= 1;
}

std::vector<std::vector<int>> adjacency_lists(const ColoredGraph& g) {
  validate_graph(g);
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& lst : adj) std::sort(lst.begin(), lst.end());
  return adj;
}

namespace {

// DFS cycle search; fills `cycle` with the vertex sequence when found.
// In an undirected DFS every non-tree edge is a back edge, so walking
// parent pointers from u always reaches v.
bool find_cycle(const std::vector<std::vector<int>>& adj,
                std::vector<int>& cycle) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> parent(n, -2);
  auto dfs = [&](auto&& self, int u, int from) -> bool {
    parent[u] = from;
    for (int v : adj[u]) {
      if (v == from) continue;
      if (parent[v] != -2) {
        cycle.clear();
        for (int x = u; x != v; x = parent[x]) cycle.push_back(x);
        cycle.push_back(v);
        return true;
      }
      if (self(self, v, u)) return true;
    }
    return false;
  };
  for (int root = 0; root < n; ++root)
    if (parent[root] == -2 && dfs(dfs, root, -1)) return true;
  return false;
}

}  // namespace

bool is_forest_of_caterpillars(const ColoredGraph& g, ForbiddenWitness* witness) {
  const auto adj = adjacency_lists(g);
  // Duplicate edges form a 2-cycle.
  {
    auto edges = g.edges;
    for (auto& e : edges)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    const auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
      if (witness) witness->cycle = {dup->first, dup->second};
      return false;
    }
  }
  std::vector<int> cycle;
  if (find_cycle(adj, cycle)) {
    if (witness) witness->cycle = cycle;
    return false;
  }
  // Acyclic: a subdivided 3-star exists iff some vertex has three
  // neighbors of degree >= 2 (their far neighbors are automatically
  // distinct in a forest).
  for (int c = 0; c < g.n; ++c) {
    if (adj[c].size() < 3) continue;
    std::vector<int> mids;
    for (int m : adj[c])
      if (adj[m].size() >= 2) mids.push_back(m);
    if (static_cast<int>(mids.size()) < 3) continue;
    mids.resize(3);
    std::vector<int> leaves;
    for (int m : mids)
      for (int l : adj[m])
        if (l != c) {
          leaves.push_back(l);
          break;
        }
    if (witness) {
      witness->k13 = {c,        mids[0],  mids[1],  mids[2],
                      leaves[0], leaves[1], leaves[2]};
    }
    return false;
  }
  return true;
}

Caterpillar caterpillar_from_graph(const ColoredGraph& g) {
  validate_graph(g);
  const auto adj = adjacency_lists(g);
  require(static_cast<int>(g.edges.size()) == g.n - 1 || g.n <= 1,
          "caterpillar must be a tree");
  // Connectivity.
  if (g.n > 0) {
    std::vector<bool> seen(g.n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          ++cnt;
          stack.push_back(v);
        }
    }
    require(cnt == g.n, "caterpillar must be connected");
  }
  ForbiddenWitness w;
  require(is_forest_of_caterpillars(g, &w), "graph contains a cycle or K+_{1,3}");

  std::vector<int> spine;
  for (int v = 0; v < g.n; ++v)
    if (adj[v].size() >= 2) spine.push_back(v);
  Caterpillar cat;
  cat.graph = g;
  if (spine.empty()) {
    return cat;  // K1 or K2
  }
  // The non-leaf vertices must induce a path; order it endpoint first.
  std::vector<int> spine_deg(g.n, 0);
  std::vector<bool> on_spine(g.n, false);
  for (int v : spine) on_spine[v] = true;
  for (int v : spine)
    for (int u : adj[v])
      if (on_spine[u]) ++spine_deg[v];
  int start = -1;
  for (int v : spine) {
    require(spine_deg[v] <= 2, "non-leaf vertices do not induce a path");
    if (spine_deg[v] <= 1 && start == -1) start = v;
  }
  require(start != -1 || spine.size() == 1, "non-leaf set has no path endpoint");
  if (start == -1) start = spine[0];
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int nxt = -1;
    for (int u : adj[cur])
      if (on_spine[u] && u != prev) {
        nxt = u;
        break;
      }
    if (nxt == -1) break;
    order.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  require(order.size() == spine.size(), "non-leaf vertices do not induce a path");
  cat.central_path = order;
  return cat;
}

ValidationReport validate_embedding(const DoubleChain& dc, const Coloring& col,
                                    const ColoredGraph& g, const Embedding& emb) {
  auto fail = [](std::string m) { return ValidationReport{false, std::move(m)}; };
  if (static_cast<int>(emb.map.size()) != g.n)
    return fail("embedding size differs from vertex count");
  if (col.n() != dc.n() || g.n != dc.n()) return fail("size mismatch");
  std::vector<bool> used1(dc.c1.size(), false), used2(dc.c2.size(), false);
  for (int v = 0; v < g.n; ++v) {
    const auto [chain, pos] = emb.map[v];
    if (chain != 1 && chain != 2) return fail("bad chain id");
    auto& used = chain == 1 ? used1 : used2;
    if (pos < 0 || pos >= static_cast<int>(used.size()))
      return fail("position out of range");
    if (used[pos]) return fail("embedding is not injective");
    used[pos] = true;
    if (col.at(chain, pos) != gcolor(g, v))
      return fail("vertex color differs from point color");
  }
  std::vector<Point> pts(g.n);
  for (int v = 0; v < g.n; ++v) {
    const auto [chain, pos] = emb.map[v];
    pts[v] = (chain == 1 ? dc.c1.points : dc.c2.points)[pos];
  }
  if (!edges_noncrossing(pts, g.edges)) return fail("edges cross");
  return {};
}

Embedding embed_caterpillar(const DoubleChain& dc, const Caterpillar& cat,
                            const Coloring& col, const TreeEmbedOptions& opts) {
  const ColoredGraph& g = cat.graph;
  validate_graph(g);
  require(is_balanced(dc), "double chain is not balanced");
  require(g.n == dc.n(), "graph and point set sizes differ");
  require(col.n() == dc.n(), "coloring size mismatch");
  require(is_properly_colored(g), "graph coloring is not proper");
  require(is_compatible(col, g.colors), "point coloring incompatible with graph");
  {
    const Caterpillar derived = caterpillar_from_graph(g);
    std::vector<int> reversed(cat.central_path.rbegin(),
                              cat.central_path.rend());
    require(cat.central_path == derived.central_path ||
                reversed == derived.central_path,
            "central path does not match the graph");
  }
  require(2 * static_cast<int>(cat.central_path.size()) <= g.n,
          "central path longer than floor(n/2)");

  Embedding emb;
  emb.map.assign(g.n, {0, -1});

  if (cat.central_path.empty()) {
    // K1 cannot arise (dc has >= 2 points); K2 places one vertex per color.
    ensure(g.n == 2, "empty central path implies two vertices");
    for (int v = 0; v < 2; ++v) {
      bool placed = false;
      for (int chain = 1; chain <= 2 && !placed; ++chain) {
        const std::string& cs = chain == 1 ? col.c1 : col.c2;
        for (int p = 0; p < static_cast<int>(cs.size()) && !placed; ++p) {
          if (color_from_char(cs[p]) != gcolor(g, v)) continue;
          if ((v == 1) && emb.map[0] == std::make_pair(chain, p)) continue;
          emb.map[v] = {chain, p};
          placed = true;
        }
      }
      require(placed, "no point of the vertex color");
    }
    if (opts.certify) {
      const auto rep = validate_embedding(dc, col, g, emb);
      ensure(rep.ok, "caterpillar embedding failed certification: " + rep.violation);
    }
    return emb;
  }

  const ChainStats st = compute_stats(dc, col);
  const auto adj = adjacency_lists(g);
  // View-space colors: black major on view chain 1.
  auto vcol = [&](int v) {
    const Color c = gcolor(g, v);
    return st.swapped_colors ? opposite(c) : c;
  };
  auto original_chain = [&](int view_chain) {
    return st.swapped_chains ? 3 - view_chain : view_chain;
  };
  const std::string view_c1 = view_chain_colors(col, st, 1);
  const std::string view_c2 = view_chain_colors(col, st, 2);

  std::vector<bool> on_spine(g.n, false);
  for (int v : cat.central_path) on_spine[v] = true;

  // Remove b2 black and w1 white leaves, taking them from the spine end
  // visited last, rightmost leaves first.
  std::vector<int> removable_black, removable_white;
  for (auto it = cat.central_path.rbegin(); it != cat.central_path.rend(); ++it) {
    std::vector<int> leaves;
    for (int u : adj[*it])
      if (!on_spine[u]) leaves.push_back(u);
    std::sort(leaves.rbegin(), leaves.rend());
    for (int u : leaves)
      (vcol(u) == Color::Black ? removable_black : removable_white).push_back(u);
  }
  require(static_cast<int>(removable_black.size()) >= st.b2,
          "not enough black leaves for the minor points of C2");
  require(static_cast<int>(removable_white.size()) >= st.w1,
          "not enough white leaves for the minor points of C1");
  std::vector<bool> removed(g.n, false);
  for (int i = 0; i < st.b2; ++i) removed[removable_black[i]] = true;
  for (int i = 0; i < st.w1; ++i) removed[removable_white[i]] = true;

  // Phase 1: walk the central path over the leftmost unused major
  // points; each vertex's surviving leaves go to the other chain.
  std::vector<int> majors1, majors2, minors1, minors2;
  for (int p = 0; p < static_cast<int>(view_c1.size()); ++p)
    (view_c1[p] == 'B' ? majors1 : minors1).push_back(p);
  for (int p = 0; p < static_cast<int>(view_c2.size()); ++p)
    (view_c2[p] == 'W' ? majors2 : minors2).push_back(p);
  std::size_t f1 = 0, f2 = 0;

  std::vector<std::pair<int, int>> view_place(g.n, {0, -1});
  auto place_major = [&](int v) {
    if (vcol(v) == Color::Black) {
      ensure(f1 < majors1.size(), "ran out of major points on C1");
      view_place[v] = {1, majors1[f1++]};
    } else {
      ensure(f2 < majors2.size(), "ran out of major points on C2");
      view_place[v] = {2, majors2[f2++]};
    }
  };
  for (int v : cat.central_path) {
    place_major(v);
    for (int u : adj[v])
      if (!on_spine[u] && !removed[u]) place_major(u);
  }
  ensure(f1 == majors1.size() && f2 == majors2.size(),
         "major points left unused after phase 1");

  // Phase 2: removed leaves re-attach to minor points, closest
  // combinatorial pair first. All phase-2 edges are chords of one
  // chain, so they cannot cross the inter-chain edges of phase 1.
  for (int view_chain = 1; view_chain <= 2; ++view_chain) {
    const auto& minors = view_chain == 1 ? minors1 : minors2;
    const Color spine_color = view_chain == 1 ? Color::Black : Color::White;
    std::vector<std::vector<int>> pending(g.n);
    for (int v : cat.central_path) {
      if (vcol(v) != spine_color) continue;
      for (int u : adj[v])
        if (!on_spine[u] && removed[u]) pending[v].push_back(u);
    }
    std::vector<MatchToken> tokens;
    const std::int64_t scale = g.n + 1;
    std::vector<std::pair<std::int64_t, int>> marks;  // (token pos, vertex)
    for (int v : cat.central_path) {
      if (pending[v].empty()) continue;
      std::sort(pending[v].begin(), pending[v].end());
      const std::int64_t base = view_place[v].second * scale;
      for (std::size_t j = 0; j < pending[v].size(); ++j)
        marks.push_back({base + 1 + static_cast<std::int64_t>(j), v});
    }
    for (int p : minors) marks.push_back({p * scale, -1});
    std::sort(marks.begin(), marks.end());
    for (const auto& [pos, v] : marks)
      tokens.push_back({pos, v == -1, v});
    // is_a marks minors; payload for needs is the spine vertex. Minor
    // payload: recover the position from pos.
    for (auto& t : tokens)
      if (t.is_a) t.payload = static_cast<int>(t.pos / scale);
    const auto pairs = match_closest_adjacent(tokens);
    std::vector<std::size_t> next_leaf(g.n, 0);
    std::vector<std::pair<int, int>> assigns;  // (minor pos, spine vertex)
    for (const auto& [minor_pos, v] : pairs) assigns.push_back({minor_pos, v});
    std::sort(assigns.begin(), assigns.end());
    for (const auto& [minor_pos, v] : assigns) {
      ensure(next_leaf[v] < pending[v].size(), "leaf bookkeeping error");
      const int u = pending[v][next_leaf[v]++];
      view_place[u] = {view_chain, minor_pos};
    }
  }

  for (int v = 0; v < g.n; ++v) {
    ensure(view_place[v].second >= 0, "vertex left unplaced");
    emb.map[v] = {original_chain(view_place[v].first), view_place[v].second};
  }
  if (opts.certify) {
    const auto rep = validate_embedding(dc, col, g, emb);
    ensure(rep.ok, "caterpillar embedding failed certification: " + rep.violation);
  }
  return emb;
}

bool is_star_forest(const ColoredGraph& g) {
  const auto adj = adjacency_lists(g);
  std::vector<int> comp(g.n, -1);
  for (int root = 0; root < g.n; ++root) {
    if (comp[root] != -1) continue;
    std::vector<int> vs{root};
    comp[root] = root;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (int u : adj[vs[i]])
        if (comp[u] == -1) {
          comp[u] = root;
          vs.push_back(u);
        }
    int centers = 0, edges_in = 0;
    for (int v : vs) {
      if (adj[v].size() >= 2) ++centers;
      edges_in += static_cast<int>(adj[v].size());
    }
    edges_in /= 2;
    if (edges_in != static_cast<int>(vs.size()) - 1) return false;  // cycle
    if (centers > 1) return false;  // path of length >= 3 or worse
  }
  return true;
}

StarCensus compute_star_census(const ColoredGraph& g) {
  require(is_star_forest(g), "graph is not a forest of stars");
  const auto adj = adjacency_lists(g);
  StarCensus census;
  std::vector<bool> seen(g.n, false);
  for (int root = 0; root < g.n; ++root) {
    if (seen[root]) continue;
    std::vector<int> vs{root};
    seen[root] = true;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (int u : adj[vs[i]])
        if (!seen[u]) {
          seen[u] = true;
          vs.push_back(u);
        }
    const int sz = static_cast<int>(vs.size());
    if (sz == 1) {
      ++census.n1;
    } else if (sz == 2) {
      ++census.n2;
    } else {
      int center = -1;
      for (int v : vs)
        if (adj[v].size() >= 2) center = v;
      ensure(center >= 0, "star component without center");
      if (gcolor(g, center) == Color::Black)
        ++census.k[sz];
      else
        ++census.h[sz];
    }
  }
  return census;
}

Caterpillar stars_to_caterpillar(const ColoredGraph& g, const StarCensus& census) {
  validate_graph(g);
  require(is_star_forest(g), "graph is not a forest of stars");
  require(is_properly_colored(g), "coloring is not proper");
  require(is_equitably_colored(g), "coloring is not equitable");
  require(g.n >= 1, "empty graph");
  {
    const StarCensus computed = compute_star_census(g);
    require(computed.k == census.k && computed.h == census.h &&
                computed.n1 == census.n1 && computed.n2 == census.n2,
            "census does not match the graph");
    long long total = census.n1 + 2LL * census.n2;
    for (const auto& [i, c] : census.k) total += static_cast<long long>(i) * c;
    for (const auto& [i, c] : census.h) total += static_cast<long long>(i) * c;
    require(total == g.n, "census identity violated");
  }
  const auto adj = adjacency_lists(g);

  ColoredGraph out = g;
  auto add_edge = [&](int u, int v) {
    require(g.colors[u] != g.colors[v], "added edge would be monochromatic");
    out.edges.emplace_back(u, v);
  };

  if (g.edges.empty()) {
    // Isolated vertices only: a double star keeps the spine at two.
    if (g.n == 1) return caterpillar_from_graph(out);
    int b0 = -1, w0 = -1;
    for (int v = 0; v < g.n; ++v) {
      if (gcolor(g, v) == Color::Black && b0 == -1) b0 = v;
      if (gcolor(g, v) == Color::White && w0 == -1) w0 = v;
    }
    require(b0 != -1 && w0 != -1, "equitable edgeless graph needs both colors");
    add_edge(b0, w0);
    for (int v = 0; v < g.n; ++v) {
      if (v == b0 || v == w0) continue;
      add_edge(v, gcolor(g, v) == Color::Black ? w0 : b0);
    }
    return caterpillar_from_graph(out);
  }

  // Component inventory in view colors (swap so that black-centered big
  // stars are at least as many as white-centered ones).
  int big_black = 0, big_white = 0;
  for (const auto& [i, c] : census.k) big_black += c;
  for (const auto& [i, c] : census.h) big_white += c;
  const bool swap_view = big_black < big_white;
  auto vc = [&](int v) {
    const Color c = gcolor(g, v);
    return swap_view ? opposite(c) : c;
  };

  std::vector<int> comp_of(g.n, -1);
  std::vector<std::vector<int>> comps;
  for (int root = 0; root < g.n; ++root) {
    if (comp_of[root] != -1) continue;
    const int id = static_cast<int>(comps.size());
    comps.push_back({root});
    comp_of[root] = id;
    auto& vs = comps.back();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (int u : adj[vs[i]])
        if (comp_of[u] == -1) {
          comp_of[u] = id;
          vs.push_back(u);
        }
  }
  std::vector<int> big_b_centers, big_w_centers;  // view colors
  std::vector<std::pair<int, int>> twos;          // (view-black, view-white)
  std::vector<int> ones;
  for (auto& vs : comps) {
    std::sort(vs.begin(), vs.end());
    if (vs.size() == 1) {
      ones.push_back(vs[0]);
    } else if (vs.size() == 2) {
      const int b = vc(vs[0]) == Color::Black ? vs[0] : vs[1];
      twos.emplace_back(b, b == vs[0] ? vs[1] : vs[0]);
    } else {
      int center = -1;
      for (int v : vs)
        if (adj[v].size() >= 2) center = v;
      (vc(center) == Color::Black ? big_b_centers : big_w_centers)
          .push_back(center);
    }
  }

  // Alternating path of star centers, black first; stars on two
  // vertices stand in for missing centers of either color.
  std::vector<int> path;
  std::size_t ib = 0, iw = 0, it = 0;
  Color need = Color::Black;
  while (true) {
    if (need == Color::Black) {
      if (ib < big_b_centers.size())
        path.push_back(big_b_centers[ib++]);
      else if (it < twos.size())
        path.push_back(twos[it++].first);
      else
        break;
      need = Color::White;
    } else {
      if (iw < big_w_centers.size())
        path.push_back(big_w_centers[iw++]);
      else if (it < twos.size())
        path.push_back(twos[it++].second);
      else
        break;
      need = Color::Black;
    }
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) add_edge(path[i], path[i + 1]);
  ensure(iw == big_w_centers.size() && it == twos.size(),
         "white-centered stars left unconsumed");

  // Remaining black-centered big stars hang from the trailing black
  // vertex through one of their white leaves.
  while (ib < big_b_centers.size()) {
    ensure(!path.empty() && vc(path.back()) == Color::Black,
           "path must end black before appending leftover stars");
    const int center = big_b_centers[ib++];
    int leaf = -1;
    for (int u : adj[center])
      if (vc(u) == Color::White) {
        leaf = u;
        break;
      }
    ensure(leaf >= 0, "big star without an opposite-color leaf");
    add_edge(path.back(), leaf);
    path.push_back(leaf);
    path.push_back(center);
  }

  // 1-vertex components attach to an opposite-colored path vertex.
  if (!ones.empty()) {
    if (path.size() == 1) {
      const int v = path[0];
      int u = -1;
      for (int x : adj[v]) {
        u = x;
        break;
      }
      ensure(u >= 0, "single-path vertex must have a leaf");
      for (int iso : ones) add_edge(iso, gcolor(g, iso) == gcolor(g, v) ? u : v);
    } else {
      for (int iso : ones) {
        int target = -1;
        for (int pv : path)
          if (gcolor(g, pv) != gcolor(g, iso)) {
            target = pv;
            break;
          }
        ensure(target >= 0, "no opposite-color spine vertex for isolate");
        add_edge(iso, target);
      }
    }
  }

  Caterpillar cat = caterpillar_from_graph(out);
  ensure(is_properly_colored(cat.graph), "construction broke properness");
  ensure(2 * static_cast<int>(cat.central_path.size()) <= g.n,
         "central path exceeds floor(n/2)");
  return cat;
}

Embedding embed_star_forest(const DoubleChain& dc, const ColoredGraph& g,
                            const Coloring& col, const TreeEmbedOptions& opts) {
  require(is_properly_colored(g), "coloring is not proper");
  require(is_equitably_colored(g), "coloring is not equitable");
  const StarCensus census = compute_star_census(g);
  const Caterpillar cat = stars_to_caterpillar(g, census);
  Embedding emb = embed_caterpillar(dc, cat, col, opts);
  if (opts.certify) {
    const auto rep = validate_embedding(dc, col, g, emb);
    ensure(rep.ok, "star forest embedding failed certification: " + rep.violation);
  }
  return emb;
}

std::vector<int> convex_hull(const std::vector<Point>& points) {
  const int n = static_cast<int>(points.size());
  require(n >= 1, "empty point set");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return points[a].x != points[b].x ? points[a].x < points[b].x
                                      : points[a].y < points[b].y;
  });
  if (n == 1) return idx;
  std::vector<int> lower, upper;
  for (int i : idx) {
    while (lower.size() >= 2 &&
           orientation(points[lower[lower.size() - 2]],
                       points[lower.back()], points[i]) <= 0)
      lower.pop_back();
    lower.push_back(i);
  }
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    while (upper.size() >= 2 &&
           orientation(points[upper[upper.size() - 2]],
                       points[upper.back()], points[*it]) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

std::vector<Color> blocking_coloring_for_quadrangulation(
    const std::vector<Point>& points, const ColoredGraph& g) {
  validate_graph(g);
  require(g.n == static_cast<int>(points.size()),
          "graph and point set sizes differ");
  require(g.n >= 5, "quadrangulation needs at least five vertices");
  const auto hull = convex_hull(points);
  require(hull.size() >= 3, "hull has fewer than three vertices");
  const int blacks = count_color(g.colors, Color::Black);
  const Color majority = blacks >= g.n - blacks ? Color::Black : Color::White;
  const int majority_count = std::max(blacks, g.n - blacks);
  ensure(majority_count >= 3, "majority class smaller than three");

  std::vector<Color> out(g.n, opposite(majority));
  int placed = 0;
  for (int i = 0; i < 3; ++i) {
    out[hull[i]] = majority;
    ++placed;
  }
  for (int i = 0; i < g.n && placed < majority_count; ++i) {
    if (out[i] == majority) continue;
    out[i] = majority;
    ++placed;
  }
  ensure(placed == majority_count, "color distribution failed");
  return out;
}

}  // namespace dcpath
