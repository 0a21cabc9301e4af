#ifndef DCPATH_HEDGEHOG_HPP
#define DCPATH_HEDGEHOG_HPP

#include <string>
#include <utility>
#include <vector>

#include "dcpath/chains.hpp"

namespace dcpath {

// A working view of one chain: colors plus sort positions. Positions
// carry the insertion slots for auxiliary points and the half-integer
// gap midpoints, so they are scaled: real chain position i sits at 64*i.
struct ChainSeq {
  std::vector<Color> colors;
  std::vector<std::int64_t> pos;
  int size() const { return static_cast<int>(colors.size()); }
};

inline constexpr std::int64_t kPosScale = 64;

ChainSeq make_seq(const std::string& chain_colors);

// Interval [lo, hi] of a chain whose inner points are all major.
// head/tail flag minor endpoints; a single minor point is both.
struct Body {
  int lo = 0;
  int hi = 0;
  bool head = false;
  bool tail = false;
};

// Pairwise disjoint bodies covering every major point of one chain.
struct BodyCover {
  int chain = 1;               // 1 or 2 in double-chain contexts
  Color major = Color::Black;  // the chain's major color
  std::vector<Body> bodies;    // left to right
  int d00 = 0, d01 = 0, d10 = 0, d11 = 0;
};

// A non-crossing alternating path on one chain: all body points, no
// outside major points, endpoints at the body's ends. Off-body minors
// are spines, one per adjacent-major gap of the body.
struct Hedgehog {
  Body body;
  std::vector<std::pair<int, int>> spines;  // (minor index, gap index)
  std::vector<int> path;                    // sequence indices
};

// Recomputes the per-type counters and checks structural validity
// (ordering, disjointness, flag/color agreement, major coverage).
// Throws PreconditionError on malformed covers.
void finalize_cover(const ChainSeq& seq, BodyCover& cover);

// Feasibility test: the cover extends to non-crossing hedgehogs covering the
// chain iff delta = d00 - d11, where delta is the chain's major surplus.
bool cover_is_feasible(const BodyCover& cover, int chain_surplus);
bool cover_is_feasible(const BodyCover& cover, const ChainStats& stats);

// Greedy F-M spine matching: F = minors in no body, M = gap midpoints of
// consecutive same-body majors; closest adjacent pairs matched first.
// Throws PreconditionError when the cover is infeasible.
std::vector<Hedgehog> realize_hedgehogs(const ChainSeq& seq,
                                        const BodyCover& cover);
std::vector<Hedgehog> realize_hedgehogs(const std::string& chain_colors,
                                        const BodyCover& cover);

// Joining procedure: start from single-point bodies and merge/attach
// until exactly k bodies remain. Requires |C| >= k >= 1, runs <= k and
// surplus <= k with the designated major at least as frequent as the
// minor color.
BodyCover cover_for_k_hedgehogs(const ChainSeq& seq, Color major, int k);
std::vector<Hedgehog> cover_with_k_hedgehogs(const ChainSeq& seq, Color major,
                                             int k);
std::vector<Hedgehog> cover_with_k_hedgehogs(const std::string& chain_colors,
                                             Color major, int k);

// Test support: hedgehogs of one chain rendered as geometric edges.
std::vector<std::pair<int, int>> hedgehog_edges(
    const std::vector<Hedgehog>& hogs);

}  // namespace dcpath

#endif
