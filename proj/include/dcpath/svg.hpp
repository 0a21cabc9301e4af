#ifndef DCPATH_SVG_HPP
#define DCPATH_SVG_HPP

#include <string>
#include <utility>
#include <vector>

#include "dcpath/chains.hpp"

namespace dcpath {

// Output is deterministic: identical inputs give identical bytes. The
// coordinate map is a 180-degree rotation plus positive scaling, so it
// preserves orientation and rendered crossings match geometric ones.
struct RenderStyle {
  int point_radius = 4;
  std::string black_fill = "#1b1b1b";
  std::string white_fill = "#ffffff";
  std::string point_stroke = "#1b1b1b";
  std::string edge_stroke = "#3465a4";
  int width = 800;
  int margin = 24;
};

// One circle per point, one line per edge. Edges reference points as
// (chain id, position) pairs.
std::string render_svg(const DoubleChain& dc, const Coloring& col,
                       const std::vector<std::pair<std::pair<int, int>,
                                                   std::pair<int, int>>>& edges,
                       const RenderStyle& style = {});

// The exact affine map used by render_svg; exposed for tests.
std::pair<std::int64_t, std::int64_t> svg_map_point(const DoubleChain& dc,
                                                    Point p,
                                                    const RenderStyle& style);

}  // namespace dcpath

#endif
