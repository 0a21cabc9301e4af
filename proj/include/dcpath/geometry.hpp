#ifndef DCPATH_GEOMETRY_HPP
#define DCPATH_GEOMETRY_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dcpath/errors.hpp"

namespace dcpath {

// Exact planar predicates on integer points. All determinants are
// evaluated in 128-bit signed arithmetic; no floating point anywhere.

// With |x|,|y| <= 2^62 the 3-point orientation determinant is twice a
// triangle area inside a square of side 2^63, so |det| <= 2^126 and is
// exactly representable in __int128.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 62;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Endpoints must differ.
struct Segment {
  Point a;
  Point b;
};

// +1 iff (p,q,r) is a counterclockwise turn, -1 iff clockwise, 0 iff
// collinear. Throws PreconditionError when a coordinate exceeds the
// 2^62 bound.
int orientation(Point p, Point q, Point r);

// True iff the open interiors of s and t share a point. Segments that
// share an endpoint and are otherwise disjoint give false; collinear
// overlap of positive length gives true.
bool segments_properly_cross(const Segment& s, const Segment& t);

// True iff p lies strictly inside segment (a,b).
bool on_open_segment(Point p, Point a, Point b);

// Generic edge-set check used by every validator: no two edges properly
// cross and no point lies in the open interior of a non-incident edge.
// Edges are index pairs into pts; endpoints of an edge must differ.
bool edges_noncrossing(std::span<const Point> pts,
                       std::span<const std::pair<int, int>> edges);

// True iff no two edges of the polyline properly cross and no vertex
// lies in the open interior of a non-incident edge. O(m^2).
bool path_is_noncrossing(std::span<const Point> pts);

}  // namespace dcpath

#endif
