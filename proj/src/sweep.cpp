#include "dcpath/sweep.hpp"

#include <algorithm>
#include <random>

#include "dcpath/nhap.hpp"
#include "dcpath/oracle.hpp"

namespace dcpath {

namespace {
constexpr int kMismatchCap = 20;
}

nlohmann::json SweepReport::to_json() const {
  nlohmann::json j{{"suite", suite},
                   {"cases", cases},
                   {"pass", passed},
                   {"fail", failed},
                   {"mismatches", mismatches}};
  if (!meta.is_null()) j["meta"] = meta;
  return j;
}

void SweepReport::record(bool pass, const std::string& what) {
  ++cases;
  if (pass) {
    ++passed;
  } else {
    ++failed;
    if (static_cast<int>(mismatches.size()) < kMismatchCap)
      mismatches.push_back(what);
  }
}

SweepReport sweep_nhap(int min_chain, int max_chain, bool inject_fault,
                       bool oracle_check) {
  SweepReport rep;
  rep.suite = "nhap";
  for (int n1 = min_chain; n1 <= max_chain; ++n1) {
    for (int n2 = min_chain; n2 <= max_chain; ++n2) {
      const int n = n1 + n2;
      if (5 * n1 < n || 5 * n2 < n) continue;
      const DoubleChain dc = generate_double_chain(n1, n2);
      for (const std::string& s : enumerate_equitable_colorings(n)) {
        const Coloring col{s.substr(0, n1), s.substr(n1)};
        const std::string tag = "nhap n1=" + std::to_string(n1) +
                                " n2=" + std::to_string(n2) + " col=" + s;
        try {
          PathEmbedding pe = embed_nhap(dc, col);
          if (inject_fault && pe.order.size() >= 2)
            std::swap(pe.order[0], pe.order[1]);
          const ValidationReport v = validate_path_embedding(dc, col, pe);
          if (!v.ok) {
            rep.record(false, tag + " validator: " + v.violation);
            continue;
          }
          if (oracle_check) {
            const auto [pts, cols] = flatten_instance(dc, col);
            const NhapSearchResult res =
                brute_force_nhap(pts, cols, {50'000'000, 1e9});
            if (res.status != SearchStatus::Found) {
              rep.record(false, tag + " oracle status " +
                                    std::string(to_string(res.status)));
              continue;
            }
          }
          rep.record(true, tag);
        } catch (const std::exception& e) {
          rep.record(false, tag + " threw: " + e.what());
        }
      }
    }
  }
  return rep;
}

SweepReport sweep_k_cover(int max_chain) {
  SweepReport rep;
  rep.suite = "k-cover";
  for (int sz = 1; sz <= max_chain; ++sz) {
    const Chain geom = generate_double_chain(sz, 1).c1;
    for (int mask = 0; mask < (1 << sz); ++mask) {
      std::string colors(sz, 'B');
      for (int i = 0; i < sz; ++i)
        if (mask & (1 << i)) colors[i] = 'W';
      for (const Color major : {Color::Black, Color::White}) {
        const int majors = count_color(colors, major);
        const int surplus = 2 * majors - sz;
        if (surplus < 0) continue;  // not a valid major designation
        const int runs = static_cast<int>(major_runs(colors, major).size());
        for (int k = 1; k <= sz; ++k) {
          if (runs > k || surplus > k) continue;
          const std::string tag = "k-cover colors=" + colors +
                                  " major=" + color_char(major) +
                                  " k=" + std::to_string(k);
          try {
            const auto hogs = cover_with_k_hedgehogs(colors, major, k);
            bool ok = static_cast<int>(hogs.size()) == k;
            std::vector<int> visits(sz, 0);
            for (const auto& h : hogs)
              for (int p : h.path) ++visits[p];
            for (int v : visits) ok = ok && v == 1;
            const auto edges = hedgehog_edges(hogs);
            ok = ok && (edges.empty() ||
                        edges_noncrossing(geom.points, edges));
            rep.record(ok, tag);
          } catch (const std::exception& e) {
            rep.record(false, tag + " threw: " + e.what());
          }
        }
        if (surplus == 0) break;  // tie: both designations identical sweep
      }
    }
  }
  return rep;
}

namespace {

struct RandomCover {
  std::string colors;
  Color major = Color::Black;
  BodyCover cover;
  int surplus = 0;
};

RandomCover random_cover(std::mt19937_64& rng, int max_chain) {
  std::uniform_int_distribution<int> size_dist(2, max_chain);
  const int sz = size_dist(rng);
  std::string colors(sz, 'B');
  for (char& c : colors) c = rng() & 1 ? 'B' : 'W';
  const int blacks = count_color(colors, Color::Black);
  const Color major = 2 * blacks >= sz ? Color::Black : Color::White;
  RandomCover rc;
  rc.colors = colors;
  rc.major = major;
  rc.surplus = 2 * std::max(blacks, sz - blacks) - sz;

  const auto runs = major_runs(colors, major);
  std::vector<bool> minor_used(sz, false);
  std::vector<Body> bodies;
  for (std::size_t ri = 0; ri < runs.size(); ++ri) {
    const auto [lo, hi] = runs[ri];
    // Random partition of the run into 00 pieces.
    std::vector<std::pair<int, int>> pieces;
    int start = lo;
    for (int i = lo; i <= hi; ++i) {
      if (i == hi || (rng() & 1)) {
        pieces.emplace_back(start, i);
        start = i + 1;
      }
    }
    // Optional head on the first piece, tail on the last.
    Body first{pieces.front().first, pieces.front().second, false, false};
    Body last{pieces.back().first, pieces.back().second, false, false};
    const bool single_piece = pieces.size() == 1;
    if (lo - 1 >= 0 && !minor_used[lo - 1] && (rng() & 1)) {
      minor_used[lo - 1] = true;
      first.lo = lo - 1;
      first.head = true;
    }
    if (hi + 1 < sz && !minor_used[hi + 1] && (rng() & 1)) {
      minor_used[hi + 1] = true;
      if (single_piece) {
        first.hi = hi + 1;
        first.tail = true;
      } else {
        last.hi = hi + 1;
        last.tail = true;
      }
    }
    bodies.push_back(first);
    for (std::size_t p = 1; p + 1 < pieces.size(); ++p)
      bodies.push_back({pieces[p].first, pieces[p].second, false, false});
    if (!single_piece) bodies.push_back(last);
  }
  // Leftover minors become single-point 11-bodies at random.
  for (int i = 0; i < sz; ++i) {
    if (colors[i] == color_char(major) || minor_used[i]) continue;
    if (rng() & 1) bodies.push_back({i, i, true, true});
  }
  std::sort(bodies.begin(), bodies.end(),
            [](const Body& a, const Body& b) { return a.lo < b.lo; });
  rc.cover.major = major;
  rc.cover.bodies = bodies;
  return rc;
}

}  // namespace

SweepReport sweep_spine_matching(int feasible_samples, std::uint64_t seed) {
  SweepReport rep;
  rep.suite = "spine-matching";
  rep.meta = {{"seed", seed}, {"feasible_samples", feasible_samples}};
  std::mt19937_64 rng(seed);
  int feasible_seen = 0, infeasible_seen = 0;
  const int infeasible_target = std::max(1, feasible_samples / 5);
  long long draws = 0;
  while ((feasible_seen < feasible_samples ||
          infeasible_seen < infeasible_target) &&
         draws < 200LL * feasible_samples) {
    ++draws;
    RandomCover rc = random_cover(rng, 14);
    const ChainSeq seq = make_seq(rc.colors);
    BodyCover probe = rc.cover;
    try {
      finalize_cover(seq, probe);
    } catch (const std::exception&) {
      continue;  // extremely rare; generator guards validity
    }
    const bool feasible = cover_is_feasible(probe, rc.surplus);
    const std::string tag =
        "spine-matching colors=" + rc.colors + " d00=" + std::to_string(probe.d00) +
        " d11=" + std::to_string(probe.d11);
    if (feasible) {
      if (feasible_seen >= feasible_samples) continue;
      ++feasible_seen;
      try {
        const auto hogs = realize_hedgehogs(seq, probe);
        bool ok = true;
        std::vector<int> visits(seq.size(), 0);
        for (const auto& h : hogs) {
          const int total = static_cast<int>(h.path.size());
          int majors = 0;
          for (int p : h.path) {
            ++visits[p];
            majors += seq.colors[p] == rc.major ? 1 : 0;
          }
          const int alpha = h.body.head ? 1 : 0, beta = h.body.tail ? 1 : 0;
          if (majors == 0)
            ok = ok && total == 1;
          else
            ok = ok && (total - majors) == (majors - 1) + alpha + beta;
        }
        for (int v : visits) ok = ok && v == 1;
        const Chain geom = generate_double_chain(seq.size(), 1).c1;
        const auto edges = hedgehog_edges(hogs);
        ok = ok && (edges.empty() || edges_noncrossing(geom.points, edges));
        rep.record(ok, tag);
      } catch (const std::exception& e) {
        rep.record(false, tag + " feasible cover threw: " + e.what());
      }
    } else {
      if (infeasible_seen >= infeasible_target) continue;
      ++infeasible_seen;
      bool threw = false;
      try {
        realize_hedgehogs(seq, probe);
      } catch (const PreconditionError&) {
        threw = true;
      }
      rep.record(threw, tag + " infeasible cover must fail realization");
    }
  }
  if (feasible_seen < feasible_samples ||
      infeasible_seen < infeasible_target)
    rep.record(false, "spine-matching sampling starved");
  return rep;
}

std::vector<Caterpillar> enumerate_caterpillars(int n, bool equitable_only) {
  std::vector<Caterpillar> out;
  auto build = [&](const std::vector<int>& leaves) {
    const int p = static_cast<int>(leaves.size());
    ColoredGraph g;
    g.n = n;
    int next = p;
    for (int i = 0; i + 1 < p; ++i) g.edges.emplace_back(i, i + 1);
    for (int i = 0; i < p; ++i)
      for (int l = 0; l < leaves[i]; ++l) g.edges.emplace_back(i, next++);
    ensure(next == n, "caterpillar shape does not sum to n");
    for (const Color first : {Color::Black, Color::White}) {
      g.colors.assign(n, 'B');
      for (int i = 0; i < p; ++i)
        g.colors[i] =
            color_char(i % 2 == 0 ? first : opposite(first));
      int idx = p;
      for (int i = 0; i < p; ++i)
        for (int l = 0; l < leaves[i]; ++l)
          g.colors[idx++] =
              color_char(i % 2 == 0 ? opposite(first) : first);
      if (equitable_only && !is_equitably_colored(g)) continue;
      out.push_back(caterpillar_from_graph(g));
    }
  };

  if (n == 2) {
    ColoredGraph g;
    g.n = 2;
    g.edges = {{0, 1}};
    for (const char* colors : {"BW", "WB"}) {
      g.colors = colors;
      if (equitable_only && !is_equitably_colored(g)) continue;
      out.push_back(caterpillar_from_graph(g));
    }
  }
  if (n >= 3) build({n - 1});  // star K_{1,n-1}
  for (int p = 2; 2 * p <= n; ++p) {
    // leaf counts: ends >= 1, total n - p
    std::vector<int> leaves(p, 0);
    auto rec = [&](auto&& self, int i, int rest) -> void {
      if (i == p) {
        if (rest == 0) build(leaves);
        return;
      }
      const int lo = (i == 0 || i == p - 1) ? 1 : 0;
      for (int v = lo; v <= rest; ++v) {
        leaves[i] = v;
        self(self, i + 1, rest - v);
      }
      leaves[i] = 0;
    };
    rec(rec, 0, n - p);
  }
  return out;
}

std::vector<ColoredGraph> enumerate_star_forests(int n) {
  // Component kinds in a fixed order: (size >= 3, center color), edges,
  // isolated black, isolated white.
  struct Kind {
    int size;
    int tag;  // 0 = star B center, 1 = star W center, 2 = edge, 3 = iso B, 4 = iso W
  };
  std::vector<Kind> kinds;
  for (int s = n; s >= 3; --s) {
    kinds.push_back({s, 0});
    kinds.push_back({s, 1});
  }
  kinds.push_back({2, 2});
  kinds.push_back({1, 3});
  kinds.push_back({1, 4});

  std::vector<ColoredGraph> out;
  std::vector<int> counts(kinds.size(), 0);
  auto build = [&] {
    ColoredGraph g;
    g.n = 0;
    for (std::size_t ki = 0; ki < kinds.size(); ++ki) {
      for (int rep = 0; rep < counts[ki]; ++rep) {
        const Kind& k = kinds[ki];
        const int base = g.n;
        if (k.tag == 0 || k.tag == 1) {
          const Color center = k.tag == 0 ? Color::Black : Color::White;
          g.colors.push_back(color_char(center));
          for (int l = 1; l < k.size; ++l) {
            g.colors.push_back(color_char(opposite(center)));
            g.edges.emplace_back(base, base + l);
          }
          g.n += k.size;
        } else if (k.tag == 2) {
          g.colors += "BW";
          g.edges.emplace_back(base, base + 1);
          g.n += 2;
        } else {
          g.colors.push_back(k.tag == 3 ? 'B' : 'W');
          g.n += 1;
        }
      }
    }
    if (is_equitably_colored(g)) out.push_back(g);
  };
  auto rec = [&](auto&& self, std::size_t ki, int rest) -> void {
    if (ki == kinds.size()) {
      if (rest == 0) build();
      return;
    }
    for (int c = 0; c * kinds[ki].size <= rest; ++c) {
      counts[ki] = c;
      self(self, ki + 1, rest - c * kinds[ki].size);
    }
    counts[ki] = 0;
  };
  rec(rec, 0, n);
  return out;
}

std::vector<Coloring> compatible_colorings(int n1, int n2, int blacks) {
  const int n = n1 + n2;
  std::vector<Coloring> out;
  require(n <= 24, "compatible coloring enumeration supported up to n = 24");
  std::string s(n, 'W');
  auto rec = [&](auto&& self, int i, int placed) -> void {
    if (placed + (n - i) < blacks || placed > blacks) return;
    if (i == n) {
      out.push_back({s.substr(0, n1), s.substr(n1)});
      return;
    }
    s[i] = 'B';
    self(self, i + 1, placed + 1);
    s[i] = 'W';
    self(self, i + 1, placed);
  };
  rec(rec, 0, 0);
  return out;
}

namespace {

std::vector<DoubleChain> balanced_chains_for(int n) {
  std::vector<DoubleChain> out;
  const int half = n / 2;
  if (n % 2 == 0) {
    if (half >= 1) out.push_back(generate_double_chain(half, half));
  } else {
    if (half >= 1) {
      out.push_back(generate_double_chain(half + 1, half));
      out.push_back(generate_double_chain(half, half + 1));
    }
  }
  return out;
}

}  // namespace

SweepReport sweep_caterpillars(int max_n, bool inject_fault) {
  SweepReport rep;
  rep.suite = "caterpillar";
  for (int n = 2; n <= max_n; ++n) {
    const auto cats = enumerate_caterpillars(n, /*equitable_only=*/true);
    const auto dcs = balanced_chains_for(n);
    for (const auto& dc : dcs) {
      for (const auto& cat : cats) {
        const int blacks = count_color(cat.graph.colors, Color::Black);
        for (const Coloring& col :
             compatible_colorings(dc.c1.size(), dc.c2.size(), blacks)) {
          const std::string tag = "caterpillar n=" + std::to_string(n) +
                                  " colors=" + cat.graph.colors +
                                  " pts=" + col.c1 + "|" + col.c2;
          try {
            Embedding emb =
                embed_caterpillar(dc, cat, col, {/*certify=*/false});
            if (inject_fault && emb.map.size() >= 2)
              std::swap(emb.map[0], emb.map[1]);
            const auto v = validate_embedding(dc, col, cat.graph, emb);
            rep.record(v.ok, tag + (v.ok ? "" : " " + v.violation));
          } catch (const std::exception& e) {
            rep.record(false, tag + " threw: " + e.what());
          }
        }
      }
    }
  }
  return rep;
}

SweepReport sweep_star_forests(int max_n, bool inject_fault) {
  SweepReport rep;
  rep.suite = "stars";
  for (int n = 2; n <= max_n; ++n) {
    const auto forests = enumerate_star_forests(n);
    const auto dcs = balanced_chains_for(n);
    for (const auto& dc : dcs) {
      for (const auto& g : forests) {
        // Census identity on every generated forest.
        const StarCensus census = compute_star_census(g);
        long long total = census.n1 + 2LL * census.n2;
        for (const auto& [i, c] : census.k) total += 1LL * i * c;
        for (const auto& [i, c] : census.h) total += 1LL * i * c;
        if (total != g.n) {
          rep.record(false, "stars census identity failed");
          continue;
        }
        const Caterpillar cat = stars_to_caterpillar(g, census);
        if (2 * static_cast<int>(cat.central_path.size()) > g.n) {
          rep.record(false, "stars central path exceeds floor(n/2)");
          continue;
        }
        const int blacks = count_color(g.colors, Color::Black);
        for (const Coloring& col :
             compatible_colorings(dc.c1.size(), dc.c2.size(), blacks)) {
          const std::string tag = "stars n=" + std::to_string(n) +
                                  " colors=" + g.colors + " pts=" + col.c1 +
                                  "|" + col.c2;
          try {
            Embedding emb = embed_star_forest(dc, g, col, {/*certify=*/false});
            if (inject_fault && emb.map.size() >= 2)
              std::swap(emb.map[0], emb.map[1]);
            const auto v = validate_embedding(dc, col, g, emb);
            rep.record(v.ok, tag + (v.ok ? "" : " " + v.violation));
          } catch (const std::exception& e) {
            rep.record(false, tag + " threw: " + e.what());
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace dcpath
