#include <doctest.h>

#include <random>

#include "dcpath/geometry.hpp"

using namespace dcpath;

namespace {

// Independent quadratic checker used as the reference; written against
// the raw determinant rather than the library predicates.
long long det_sign(Point p, Point q, Point r) {
  const __int128 d = (__int128(q.x) - p.x) * (__int128(r.y) - p.y) -
                     (__int128(q.y) - p.y) * (__int128(r.x) - p.x);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

bool ref_strictly_between(Point p, Point a, Point b) {
  if (det_sign(a, b, p) != 0) return false;
  const auto lo_x = std::min(a.x, b.x), hi_x = std::max(a.x, b.x);
  const auto lo_y = std::min(a.y, b.y), hi_y = std::max(a.y, b.y);
  if (p.x < lo_x || p.x > hi_x || p.y < lo_y || p.y > hi_y) return false;
  return !(p == a) && !(p == b);
}

bool ref_cross(Point a, Point b, Point c, Point d) {
  const long long o1 = det_sign(a, b, c), o2 = det_sign(a, b, d);
  const long long o3 = det_sign(c, d, a), o4 = det_sign(c, d, b);
  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    if (ref_strictly_between(c, a, b) || ref_strictly_between(d, a, b) ||
        ref_strictly_between(a, c, d) || ref_strictly_between(b, c, d))
      return true;
    return (a == c && b == d) || (a == d && b == c);
  }
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool ref_path_noncrossing(const std::vector<Point>& pts) {
  const int m = static_cast<int>(pts.size()) - 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (ref_cross(pts[i], pts[i + 1], pts[j], pts[j + 1])) return false;
  for (int k = 0; k <= m; ++k)
    for (int i = 0; i < m; ++i)
      if (k != i && k != i + 1 &&
          ref_strictly_between(pts[k], pts[i], pts[i + 1]))
        return false;
  return true;
}

}  // namespace

TEST_CASE("orientation on canonical triples") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orientation rejects out-of-bounds coordinates") {
  const std::int64_t big = kCoordLimit + 1;
  CHECK_THROWS_AS(orientation({big, 0}, {0, 0}, {1, 1}), PreconditionError);
  CHECK_NOTHROW(orientation({kCoordLimit, kCoordLimit},
                            {-kCoordLimit, -kCoordLimit}, {kCoordLimit, 0}));
}

TEST_CASE("orientation antisymmetry under argument swaps") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
  for (int t = 0; t < 500; ++t) {
    const Point p{coord(rng), coord(rng)}, q{coord(rng), coord(rng)},
        r{coord(rng), coord(rng)};
    const int o = orientation(p, q, r);
    CHECK(orientation(q, p, r) == -o);
    CHECK(orientation(p, r, q) == -o);
    CHECK(orientation(r, q, p) == -o);
    CHECK(orientation(q, r, p) == o);
    CHECK(orientation(r, p, q) == o);
  }
}

TEST_CASE("segments_properly_cross examples") {
  CHECK(segments_properly_cross({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
  CHECK_FALSE(segments_properly_cross({{0, 0}, {1, 0}}, {{1, 0}, {2, 1}}));
  CHECK(segments_properly_cross({{0, 0}, {3, 0}}, {{1, 0}, {2, 0}}));
  // An endpoint touching the interior of another segment is not a
  // crossing of open interiors.
  CHECK_FALSE(segments_properly_cross({{0, 0}, {2, 0}}, {{1, 0}, {1, 5}}));
  // Collinear, sharing one endpoint, disjoint otherwise.
  CHECK_FALSE(segments_properly_cross({{0, 0}, {1, 0}}, {{1, 0}, {3, 0}}));
  // Collinear, sharing one endpoint, overlapping.
  CHECK(segments_properly_cross({{0, 0}, {2, 0}}, {{0, 0}, {1, 0}}));
}

TEST_CASE("segments_properly_cross is symmetric") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> coord(-20, 20);
  int crossings = 0;
  for (int t = 0; t < 2000; ++t) {
    const Point a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)},
        c{coord(rng), coord(rng)}, d{coord(rng), coord(rng)};
    if (a == b || c == d) continue;
    const bool x = segments_properly_cross({a, b}, {c, d});
    CHECK(segments_properly_cross({c, d}, {a, b}) == x);
    crossings += x ? 1 : 0;
  }
  CHECK(crossings > 0);  // the sample exercises both outcomes
}

TEST_CASE("path_is_noncrossing examples") {
  const std::vector<Point> simple{{0, 0}, {1, 1}, {2, 0}};
  CHECK(path_is_noncrossing(simple));

  // The three edge pairs of this zig-zag neither cross nor touch, so it
  // is non-crossing; confirmed against the reference checker.
  const std::vector<Point> zig{{0, 0}, {2, 0}, {0, 1}, {2, 1}};
  CHECK(ref_path_noncrossing(zig));
  CHECK(path_is_noncrossing(zig));

  const std::vector<Point> crossed{{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  CHECK_FALSE(path_is_noncrossing(crossed));
}

TEST_CASE("path_is_noncrossing rejects degenerate input") {
  const std::vector<Point> one{{0, 0}};
  CHECK_THROWS_AS(path_is_noncrossing(one), PreconditionError);
  const std::vector<Point> dup{{0, 0}, {0, 0}, {1, 1}};
  CHECK_THROWS_AS(path_is_noncrossing(dup), PreconditionError);
}

TEST_CASE("path_is_noncrossing agrees with the reference on random polylines") {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> coord(0, 9);
  std::uniform_int_distribution<int> len(2, 12);
  int checked = 0, noncrossing = 0;
  while (checked < 1000) {
    const int m = len(rng);
    std::vector<Point> pts;
    for (int i = 0; i < m; ++i) pts.push_back({coord(rng), coord(rng)});
    bool degenerate = false;
    for (int i = 0; i + 1 < m; ++i) degenerate |= pts[i] == pts[i + 1];
    if (degenerate) continue;
    ++checked;
    const bool expected = ref_path_noncrossing(pts);
    CHECK(path_is_noncrossing(pts) == expected);
    noncrossing += expected ? 1 : 0;
  }
  CHECK(noncrossing > 50);
  CHECK(noncrossing < 950);
}

TEST_CASE("edges_noncrossing flags a vertex inside an edge") {
  const std::vector<Point> pts{{0, 0}, {4, 0}, {2, 0}, {1, 5}};
  // vertex 2 = (2,0) lies inside edge (0,0)-(4,0)
  const std::vector<std::pair<int, int>> edges{{0, 1}, {2, 3}};
  CHECK_FALSE(edges_noncrossing(pts, edges));
  // collinear overlapping edges sharing an endpoint
  const std::vector<std::pair<int, int>> overlap{{0, 1}, {0, 2}};
  CHECK_FALSE(edges_noncrossing(pts, overlap));
  // shared endpoint, no overlap
  const std::vector<std::pair<int, int>> fine{{0, 2}, {2, 3}};
  CHECK(edges_noncrossing(pts, fine));
}
