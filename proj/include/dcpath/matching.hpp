#ifndef DCPATH_MATCHING_HPP
#define DCPATH_MATCHING_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace dcpath {

// Building block shared by the spine matcher and the leaf re-attachment
// greedy: tokens of two kinds on a line, matched pairwise.
struct MatchToken {
  std::int64_t pos = 0;  // strictly increasing across the input
  bool is_a = false;     // side A or side B
  int payload = 0;       // caller's identifier, returned in the pairs
};

// Repeatedly matches the closest currently-adjacent A-B pair (leftmost
// on ties) and removes it. Requires equal side counts and strictly
// increasing positions; always completes, and the produced pair
// intervals are pairwise nested or disjoint. Returns (payloadA,
// payloadB) pairs in match order.
std::vector<std::pair<int, int>> match_closest_adjacent(
    const std::vector<MatchToken>& tokens);

}  // namespace dcpath

#endif
