#ifndef DCPATH_TREES_HPP
#define DCPATH_TREES_HPP

#include <optional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dcpath/chains.hpp"

namespace dcpath {

struct ColoredGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::string colors;  // 'B'/'W' per vertex
};

bool is_properly_colored(const ColoredGraph& g);
bool is_equitably_colored(const ColoredGraph& g);
std::vector<std::vector<int>> adjacency_lists(const ColoredGraph& g);

// Evidence returned when a graph is not a forest of caterpillars:
// either a cycle (vertex sequence) or the 7 vertices of a subdivided
// 3-star, ordered center, middles, leaves.
struct ForbiddenWitness {
  std::vector<int> cycle;
  std::vector<int> k13;  // {center, m1, m2, m3, l1, l2, l3}
};

// True iff g is acyclic and contains no K+_{1,3} (3-star with each edge
// subdivided once) as a subgraph.
bool is_forest_of_caterpillars(const ColoredGraph& g,
                               ForbiddenWitness* witness = nullptr);

struct Caterpillar {
  ColoredGraph graph;
  std::vector<int> central_path;  // the non-leaf vertices, in path order
};

// Derives and checks the central path; throws when g is not a
// connected caterpillar.
Caterpillar caterpillar_from_graph(const ColoredGraph& g);

// vertex -> (chain id, position)
struct Embedding {
  std::vector<std::pair<int, int>> map;
};

ValidationReport validate_embedding(const DoubleChain& dc, const Coloring& col,
                                    const ColoredGraph& g, const Embedding& emb);

struct TreeEmbedOptions {
  bool certify = true;
};

// Two-phase greedy: the central path walks onto the leftmost unused
// major points, removed leaves re-attach to minor points by the closest
// combinatorial pair. Requires a balanced dc, a properly colored
// caterpillar with |central path| <= floor(n/2) and a compatible point
// coloring.
Embedding embed_caterpillar(const DoubleChain& dc, const Caterpillar& cat,
                            const Coloring& col,
                            const TreeEmbedOptions& opts = {});

// k[i]/h[i]: stars on i >= 3 vertices with black/white centers; n2 and
// n1 count 2- and 1-vertex components.
struct StarCensus {
  std::map<int, int> k;
  std::map<int, int> h;
  int n2 = 0;
  int n1 = 0;
};

bool is_star_forest(const ColoredGraph& g);
StarCensus compute_star_census(const ColoredGraph& g);

// Adds edges connecting star centers into an alternating central path;
// the result is a properly colored caterpillar on the same vertex set
// containing g, with central path at most floor(n/2).
Caterpillar stars_to_caterpillar(const ColoredGraph& g, const StarCensus& census);

Embedding embed_star_forest(const DoubleChain& dc, const ColoredGraph& g,
                            const Coloring& col,
                            const TreeEmbedOptions& opts = {});

// Colors three convex-hull points with g's larger color class and
// distributes the rest compatibly. The non-embeddability of the result
// is checked by the oracle at desk scale.
std::vector<Color> blocking_coloring_for_quadrangulation(
    const std::vector<Point>& points, const ColoredGraph& g);

// Convex hull vertex indices in counterclockwise order, starting from
// the lexicographically smallest point.
std::vector<int> convex_hull(const std::vector<Point>& points);

}  // namespace dcpath

#endif
