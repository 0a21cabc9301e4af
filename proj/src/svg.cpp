#include "dcpath/svg.hpp"

#include <algorithm>

namespace dcpath {

namespace {

struct Frame {
  std::int64_t minx, maxx, miny, maxy;
  std::int64_t span_x, span_y;
  std::int64_t inner_w, inner_h;
  int margin;
};

Frame make_frame(const DoubleChain& dc, const RenderStyle& style) {
  Frame f{};
  bool first = true;
  for (const auto* chain : {&dc.c1, &dc.c2})
    for (const Point& p : chain->points) {
      if (first) {
        f.minx = f.maxx = p.x;
        f.miny = f.maxy = p.y;
        first = false;
      } else {
        f.minx = std::min(f.minx, p.x);
        f.maxx = std::max(f.maxx, p.x);
        f.miny = std::min(f.miny, p.y);
        f.maxy = std::max(f.maxy, p.y);
      }
    }
  require(!first, "cannot render an empty instance");
  f.span_x = std::max<std::int64_t>(1, f.maxx - f.minx);
  f.span_y = std::max<std::int64_t>(1, f.maxy - f.miny);
  f.margin = style.margin;
  f.inner_w = std::max(1, style.width - 2 * style.margin);
  // Height follows the data aspect but stays in a sane band.
  const std::int64_t raw_h = f.span_y * f.inner_w / f.span_x;
  f.inner_h = std::clamp<std::int64_t>(raw_h, f.inner_w / 4, 2 * f.inner_w);
  return f;
}

std::pair<std::int64_t, std::int64_t> map_point(const Frame& f, Point p) {
  // 180-degree rotation: both axes flip, determinant positive.
  using i128 = __int128;
  const std::int64_t x =
      f.margin + static_cast<std::int64_t>(
                     (i128(f.maxx - p.x) * f.inner_w) / f.span_x);
  const std::int64_t y =
      f.margin + static_cast<std::int64_t>(
                     (i128(f.maxy - p.y) * f.inner_h) / f.span_y);
  return {x, y};
}

}  // namespace

std::pair<std::int64_t, std::int64_t> svg_map_point(const DoubleChain& dc,
                                                    Point p,
                                                    const RenderStyle& style) {
  return map_point(make_frame(dc, style), p);
}

std::string render_svg(const DoubleChain& dc, const Coloring& col,
                       const std::vector<std::pair<std::pair<int, int>,
                                                   std::pair<int, int>>>& edges,
                       const RenderStyle& style) {
  require(col.n() == dc.n(), "coloring size mismatch");
  const Frame f = make_frame(dc, style);
  const std::int64_t width = f.inner_w + 2 * f.margin;
  const std::int64_t height = f.inner_h + 2 * f.margin;

  auto point_at = [&](int chain, int pos) {
    const auto& pts = chain == 1 ? dc.c1.points : dc.c2.points;
    require(chain == 1 || chain == 2, "bad chain id");
    require(pos >= 0 && pos < static_cast<int>(pts.size()),
            "position out of range");
    return pts[pos];
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  for (const auto& [a, b] : edges) {
    const auto [x1, y1] = map_point(f, point_at(a.first, a.second));
    const auto [x2, y2] = map_point(f, point_at(b.first, b.second));
    out += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" +
           std::to_string(y1) + "\" x2=\"" + std::to_string(x2) + "\" y2=\"" +
           std::to_string(y2) + "\" stroke=\"" + style.edge_stroke +
           "\" stroke-width=\"2\"/>\n";
  }
  for (int chain = 1; chain <= 2; ++chain) {
    const std::string& colors = chain == 1 ? col.c1 : col.c2;
    for (int pos = 0; pos < static_cast<int>(colors.size()); ++pos) {
      const auto [cx, cy] = map_point(f, point_at(chain, pos));
      const bool black = colors[pos] == 'B';
      out += "<circle cx=\"" + std::to_string(cx) + "\" cy=\"" +
             std::to_string(cy) + "\" r=\"" +
             std::to_string(style.point_radius) + "\" fill=\"" +
             (black ? style.black_fill : style.white_fill) + "\" stroke=\"" +
             style.point_stroke + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace dcpath
