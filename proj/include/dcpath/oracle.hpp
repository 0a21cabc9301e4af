#ifndef DCPATH_ORACLE_HPP
#define DCPATH_ORACLE_HPP

#include <string>
#include <vector>

#include "dcpath/chains.hpp"
#include "dcpath/trees.hpp"

namespace dcpath {

// Exhaustion yields an explicit Inconclusive, distinct from None.
struct SearchBudget {
  long long node_limit = 50'000'000;
  double time_limit_s = 1e9;
};

enum class SearchStatus { Found, None, Inconclusive };

const char* to_string(SearchStatus s);

struct NhapSearchResult {
  SearchStatus status = SearchStatus::None;
  std::vector<int> order;  // point indices, empty unless Found
  long long nodes = 0;
};

struct EmbedSearchResult {
  SearchStatus status = SearchStatus::None;
  std::vector<int> point_of_vertex;  // empty unless Found
  long long nodes = 0;
};

// Complete backtracking over alternating extensions with incremental
// crossing checks. Deterministic: points sorted lexicographically,
// extensions in index order, a path explored only from its
// smaller-indexed endpoint. Requires general position (asserted);
// intended for desk scale.
NhapSearchResult brute_force_nhap(const std::vector<Point>& points,
                                  const std::vector<Color>& colors,
                                  const SearchBudget& budget = {});

// Vertex-ordered backtracking (spine-first for caterpillar components,
// BFS otherwise), placing vertices on color-matching unused points and
// pruning on any crossing. Incompatible counts return None immediately.
EmbedSearchResult brute_force_embed(const ColoredGraph& g,
                                    const std::vector<Point>& points,
                                    const std::vector<Color>& colors,
                                    const SearchBudget& budget = {});

// Every coloring with |#B - #W| <= 1, lexicographic, each exactly once.
std::vector<std::string> enumerate_equitable_colorings(int n);

// Convenience: flattened (points, colors) of an instance, c1 first.
std::pair<std::vector<Point>, std::vector<Color>> flatten_instance(
    const DoubleChain& dc, const Coloring& col);

}  // namespace dcpath

#endif
