#include "dcpath/geometry.hpp"

#include <algorithm>

namespace dcpath {

namespace {

using i128 = __int128;

void check_bounds(Point p) {
  if (p.x > kCoordLimit || p.x < -kCoordLimit || p.y > kCoordLimit ||
      p.y < -kCoordLimit)
    throw PreconditionError("point coordinate exceeds the 2^62 bound");
}

int sign_of(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

bool lex_less(Point a, Point b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

}  // namespace

int orientation(Point p, Point q, Point r) {
  check_bounds(p);
  check_bounds(q);
  check_bounds(r);
  const i128 det = (i128(q.x) - p.x) * (i128(r.y) - p.y) -
                   (i128(q.y) - p.y) * (i128(r.x) - p.x);
  return sign_of(det);
}

bool segments_properly_cross(const Segment& s, const Segment& t) {
  require(!(s.a == s.b) && !(t.a == t.b), "degenerate segment");
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // Collinear: positive-length overlap counts as a crossing.
    Point slo = s.a, shi = s.b, tlo = t.a, thi = t.b;
    if (lex_less(shi, slo)) std::swap(slo, shi);
    if (lex_less(thi, tlo)) std::swap(tlo, thi);
    const Point lo = lex_less(slo, tlo) ? tlo : slo;
    const Point hi = lex_less(shi, thi) ? shi : thi;
    return lex_less(lo, hi);
  }
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool on_open_segment(Point p, Point a, Point b) {
  if (orientation(a, b, p) != 0) return false;
  Point lo = a, hi = b;
  if (lex_less(hi, lo)) std::swap(lo, hi);
  return lex_less(lo, p) && lex_less(p, hi);
}

bool edges_noncrossing(std::span<const Point> pts,
                       std::span<const std::pair<int, int>> edges) {
  const int m = static_cast<int>(edges.size());
  for (const auto& [u, v] : edges) {
    require(u >= 0 && v >= 0 && u < static_cast<int>(pts.size()) &&
                v < static_cast<int>(pts.size()),
            "edge index out of range");
    require(!(pts[u] == pts[v]), "zero-length edge");
  }
  for (int i = 0; i < m; ++i) {
    const Segment si{pts[edges[i].first], pts[edges[i].second]};
    for (int j = i + 1; j < m; ++j) {
      const Segment sj{pts[edges[j].first], pts[edges[j].second]};
      if (segments_properly_cross(si, sj)) return false;
    }
  }
  for (int k = 0; k < static_cast<int>(pts.size()); ++k) {
    for (int i = 0; i < m; ++i) {
      if (k == edges[i].first || k == edges[i].second) continue;
      if (on_open_segment(pts[k], pts[edges[i].first], pts[edges[i].second]))
        return false;
    }
  }
  return true;
}

bool path_is_noncrossing(std::span<const Point> pts) {
  require(pts.size() >= 2, "polyline needs at least 2 points");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(pts.size() - 1);
  for (int i = 0; i + 1 < static_cast<int>(pts.size()); ++i) {
    require(!(pts[i] == pts[i + 1]), "zero-length polyline edge");
    edges.emplace_back(i, i + 1);
  }
  return edges_noncrossing(pts, edges);
}

}  // namespace dcpath
