#include "dcpath/chains.hpp"

#include <algorithm>
#include <cstdlib>

namespace dcpath {

char color_char(Color c) { return c == Color::Black ? 'B' : 'W'; }

Color color_from_char(char c) {
  if (c == 'B') return Color::Black;
  if (c == 'W') return Color::White;
  throw PreconditionError(std::string("invalid color character '") + c + "'");
}

int count_color(const std::string& colors, Color c) {
  return static_cast<int>(
      std::count(colors.begin(), colors.end(), color_char(c)));
}

Color Coloring::at(int chain, int pos) const {
  const std::string& s = chain == 1 ? c1 : c2;
  require(chain == 1 || chain == 2, "chain id must be 1 or 2");
  require(pos >= 0 && pos < static_cast<int>(s.size()),
          "position out of range");
  return color_from_char(s[pos]);
}

namespace {

// c1 sits on y = x^2 - (n1-1)x + H (strictly convex, dipping toward the
// middle), c2 on its negation. H > 0.75*(N-1)^2 makes every cross-chain
// line condition hold; see validate_double_chain for the certificate.
DoubleChain build_candidate(int n1, int n2, std::int64_t h) {
  DoubleChain dc;
  dc.c1.kind = ChainKind::Convex;
  dc.c2.kind = ChainKind::Concave;
  dc.c1.points.reserve(n1);
  dc.c2.points.reserve(n2);
  for (std::int64_t i = 0; i < n1; ++i)
    dc.c1.points.push_back({i, i * i - (n1 - 1) * i + h});
  for (std::int64_t j = 0; j < n2; ++j)
    dc.c2.points.push_back({j, -(j * j - (n2 - 1) * j) - h});
  return dc;
}

}  // namespace

DoubleChain generate_double_chain(int n1, int n2) {
  require(n1 >= 1 && n2 >= 1, "chain sizes must be at least 1");
  const std::int64_t N = std::max(n1, n2);
  require(N <= (std::int64_t{1} << 30),
          "infeasible size: coordinates would overflow the 2^62 bound");
  std::int64_t h = N * N + N + 1;
  for (;;) {
    require(h <= kCoordLimit / 2, "infeasible size: separation overflow");
    DoubleChain dc = build_candidate(n1, n2, h);
    if (n1 + n2 > 240) return dc;  // closed-form bound; O(n^3) check skipped
    if (validate_double_chain(dc).ok) return dc;
    h *= 2;
  }
}

ValidationReport validate_double_chain(const DoubleChain& dc) {
  auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
  const auto& p1 = dc.c1.points;
  const auto& p2 = dc.c2.points;
  if (p1.empty()) return fail("c1 is empty");
  if (p2.empty()) return fail("c2 is empty");
  if (dc.c1.kind != ChainKind::Convex) return fail("c1 must be convex");
  if (dc.c2.kind != ChainKind::Concave) return fail("c2 must be concave");
  for (const auto& chain : {&dc.c1, &dc.c2}) {
    const char* name = chain == &dc.c1 ? "c1" : "c2";
    const auto& pts = chain->points;
    for (const auto& p : pts)
      if (p.x > kCoordLimit || p.x < -kCoordLimit || p.y > kCoordLimit ||
          p.y < -kCoordLimit)
        return fail(std::string(name) + ": coordinate exceeds 2^62 bound");
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      if (pts[i].x >= pts[i + 1].x)
        return fail(std::string(name) + ": x not strictly increasing at " +
                    std::to_string(i));
    const int want = chain->kind == ChainKind::Convex ? 1 : -1;
    for (std::size_t i = 0; i + 2 < pts.size(); ++i)
      if (orientation(pts[i], pts[i + 1], pts[i + 2]) != want)
        return fail(std::string(name) + ": convexity violated at " +
                    std::to_string(i));
  }
  // Every c2 point strictly below every c1 line (clockwise with the c1
  // pair taken left to right), and symmetrically above for c1.
  for (std::size_t i = 0; i < p1.size(); ++i)
    for (std::size_t j = i + 1; j < p1.size(); ++j)
      for (const auto& q : p2)
        if (orientation(p1[i], p1[j], q) != -1)
          return fail("c2 point not strictly below a c1 line");
  for (std::size_t i = 0; i < p2.size(); ++i)
    for (std::size_t j = i + 1; j < p2.size(); ++j)
      for (const auto& q : p1)
        if (orientation(p2[i], p2[j], q) != 1)
          return fail("c1 point not strictly above a c2 line");
  return {};
}

std::string periodic_coloring_16(int n1) {
  require(n1 >= 1, "n1 must be at least 1");
  static const std::string kPeriod = "BBWWWWBBBBBBWWWW";
  std::string out;
  out.reserve(n1);
  for (int i = 0; i < n1; ++i) out.push_back(kPeriod[i % 16]);
  return out;
}

namespace {

struct ViewCounts {
  int b1, w1, b2, w2;
};

ViewCounts apply_view(int b1, int w1, int b2, int w2, bool sc, bool sw) {
  if (sc) {
    std::swap(b1, b2);
    std::swap(w1, w2);
  }
  if (sw) {
    std::swap(b1, w1);
    std::swap(b2, w2);
  }
  return {b1, w1, b2, w2};
}

}  // namespace

Color view_color(const Coloring& col, const ChainStats& st, int view_chain,
                 int pos) {
  const int source_chain = st.swapped_chains ? 3 - view_chain : view_chain;
  Color c = col.at(source_chain, pos);
  return st.swapped_colors ? opposite(c) : c;
}

std::string view_chain_colors(const Coloring& col, const ChainStats& st,
                              int view_chain) {
  const std::string& src =
      (st.swapped_chains ? 3 - view_chain : view_chain) == 1 ? col.c1 : col.c2;
  if (!st.swapped_colors) return src;
  std::string out = src;
  for (char& ch : out) ch = ch == 'B' ? 'W' : 'B';
  return out;
}

ChainStats compute_stats(int n1, int n2, const Coloring& col) {
  require(static_cast<int>(col.c1.size()) == n1 &&
              static_cast<int>(col.c2.size()) == n2,
          "coloring length does not match chain sizes");
  const int b1 = count_color(col.c1, Color::Black);
  const int w1 = n1 - b1;
  const int b2 = count_color(col.c2, Color::Black);
  const int w2 = n2 - b2;

  ChainStats st;
  int best_score = -1;
  for (const auto& [sc, sw] : {std::pair{false, false},
                               std::pair{false, true},
                               std::pair{true, false},
                               std::pair{true, true}}) {
    const ViewCounts v = apply_view(b1, w1, b2, w2, sc, sw);
    const int score = (v.b1 >= v.w1 ? 1 : 0) + (v.w2 >= v.b2 ? 1 : 0);
    if (score > best_score) {
      best_score = score;
      st.swapped_chains = sc;
      st.swapped_colors = sw;
      st.b1 = v.b1;
      st.w1 = v.w1;
      st.b2 = v.b2;
      st.w2 = v.w2;
    }
    if (best_score == 2) break;
  }
  st.delta = st.w2 - st.b2;
  st.surplus1 = st.b1 - st.w1;
  st.r1 = static_cast<int>(
      major_runs(view_chain_colors(col, st, 1), Color::Black).size());
  st.r2 = static_cast<int>(
      major_runs(view_chain_colors(col, st, 2), Color::White).size());
  return st;
}

ChainStats compute_stats(const DoubleChain& dc, const Coloring& col) {
  return compute_stats(dc.c1.size(), dc.c2.size(), col);
}

bool is_equitable(const Coloring& col) {
  return std::abs(col.black_count() - col.white_count()) <= 1;
}

bool is_compatible(const Coloring& point_col, const std::string& graph_colors) {
  require(point_col.n() == static_cast<int>(graph_colors.size()),
          "point set and graph have different sizes");
  return point_col.black_count() == count_color(graph_colors, Color::Black);
}

std::vector<std::pair<int, int>> major_runs(const std::string& chain_colors,
                                            Color major) {
  std::vector<std::pair<int, int>> runs;
  const char m = color_char(major);
  const int n = static_cast<int>(chain_colors.size());
  for (int i = 0; i < n;) {
    if (chain_colors[i] != m) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < n && chain_colors[j + 1] == m) ++j;
    runs.emplace_back(i, j);
    i = j + 1;
  }
  return runs;
}

bool is_balanced(const DoubleChain& dc) {
  return std::abs(dc.c1.size() - dc.c2.size()) <= 1;
}

}  // namespace dcpath
