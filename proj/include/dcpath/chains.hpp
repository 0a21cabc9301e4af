#ifndef DCPATH_CHAINS_HPP
#define DCPATH_CHAINS_HPP

#include <string>
#include <utility>
#include <vector>

#include "dcpath/geometry.hpp"

namespace dcpath {

enum class Color : std::uint8_t { Black, White };

inline Color opposite(Color c) {
  return c == Color::Black ? Color::White : Color::Black;
}

char color_char(Color c);
Color color_from_char(char c);
int count_color(const std::string& colors, Color c);

enum class ChainKind : std::uint8_t { Convex, Concave };

// Points in strictly increasing x order on the graph of a strictly
// convex (resp. concave) function.
struct Chain {
  std::vector<Point> points;
  ChainKind kind = ChainKind::Convex;
  int size() const { return static_cast<int>(points.size()); }
};

// Convex chain c1 above, concave chain c2 below, mutually invisible:
// every c2 point lies strictly below every line determined by two c1
// points and vice versa.
struct DoubleChain {
  Chain c1;
  Chain c2;
  int n() const { return c1.size() + c2.size(); }
};

// Per-chain color strings over {B, W}; index = position on the chain.
struct Coloring {
  std::string c1;
  std::string c2;
  int n() const { return static_cast<int>(c1.size() + c2.size()); }
  Color at(int chain, int pos) const;
  int black_count() const {
    return count_color(c1, Color::Black) + count_color(c2, Color::Black);
  }
  int white_count() const { return n() - black_count(); }
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::string violation;  // first violated constraint when !ok
};

// Counts after normalization: black is the major color of C1 and white
// the major color of C2 (the recorded swaps map back to the input).
struct ChainStats {
  int b1 = 0, w1 = 0, b2 = 0, w2 = 0;
  int r1 = 0, r2 = 0;  // number of major-color runs per chain
  int delta = 0;       // w2 - b2; equals b1 - w1 when n is even
  int surplus1 = 0;    // b1 - w1
  bool swapped_chains = false;  // normalized C1 is the input's C2
  bool swapped_colors = false;  // normalized black is the input's white
};

// Deterministic double chain with |c1| = n1, |c2| = n2. Certified by
// validate_double_chain at construction for desk-scale sizes; larger
// instances rely on the closed-form separation bound.
DoubleChain generate_double_chain(int n1, int n2);

// ok iff chain-local convexity and the cross-chain line conditions all
// hold, checked with exact orientation tests. O(n^3); intended for
// n <= a few hundred.
ValidationReport validate_double_chain(const DoubleChain& dc);

// Position i gets the color of i mod 16 in B,B,W,W,W,W,B,B,B,B,B,B,W,W,W,W.
std::string periodic_coloring_16(int n1);

ChainStats compute_stats(int n1, int n2, const Coloring& col);
ChainStats compute_stats(const DoubleChain& dc, const Coloring& col);

// |#black - #white| <= 1 over both chains.
bool is_equitable(const Coloring& col);

// Black point count equals black vertex count. Throws on size mismatch.
bool is_compatible(const Coloring& point_col, const std::string& graph_colors);

// Maximal intervals of `major` as [start, end] position pairs.
std::vector<std::pair<int, int>> major_runs(const std::string& chain_colors,
                                            Color major);

// Color of position `pos` of view-chain `view_chain` (1 or 2) under the
// normalization recorded in `st`. Shared by stats and the embedders so
// both always agree on the view.
Color view_color(const Coloring& col, const ChainStats& st, int view_chain,
                 int pos);
std::string view_chain_colors(const Coloring& col, const ChainStats& st,
                              int view_chain);

bool is_balanced(const DoubleChain& dc);

}  // namespace dcpath

#endif
