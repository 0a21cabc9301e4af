#ifndef DCPATH_NHAP_HPP
#define DCPATH_NHAP_HPP

#include <array>
#include <utility>
#include <vector>

#include "dcpath/chains.hpp"
#include "dcpath/hedgehog.hpp"

namespace dcpath {

// An ordered visit of every point of the double chain exactly once,
// alternating in color and non-crossing when drawn with straight edges.
struct PathEmbedding {
  std::vector<std::pair<int, int>> order;  // (chain id 1|2, position)
};

namespace detail {

enum class Prov : std::uint8_t { Original, Virtual, Merged };

// A point of a working chain. ref is the original position for Original
// nodes and the contraction-record index for Merged nodes; pos is the
// exact sort position (scaled so auxiliary insertions stay integral).
struct WNode {
  Color color = Color::Black;
  Prov prov = Prov::Original;
  int ref = -1;
  std::int64_t pos = 0;
};

}  // namespace detail

// Stack of singleton contractions on the view C1; replaying it in
// reverse reproduces the original chain.
struct ContractionRecord {
  // (left neighbor, singleton, right neighbor) per contraction, oldest
  // first. Entries may reference earlier records (nested contractions).
  std::vector<std::array<detail::WNode, 3>> triples;
  // Node identities of the reduced C1, index = reduced position.
  std::vector<detail::WNode> reduced_c1;
};

struct EmbedOptions {
  bool certify = false;  // run the O(n^2) validator on the result
};

// Full validator: permutation of all points, alternating colors,
// straight-line non-crossing. Used by tests and --certify.
ValidationReport validate_path_embedding(const DoubleChain& dc,
                                         const Coloring& col,
                                         const PathEmbedding& pe);

// Case constructions. All take stats produced by compute_stats for the
// same (dc, col) and require an even number of points.
PathEmbedding embed_delta_large(const DoubleChain& dc, const Coloring& col,
                                const ChainStats& stats,
                                const EmbedOptions& opts = {});
PathEmbedding embed_equal_runs(const DoubleChain& dc, const Coloring& col,
                               const ChainStats& stats,
                               const EmbedOptions& opts = {});
PathEmbedding embed_no_singletons(const DoubleChain& dc, const Coloring& col,
                                  const ChainStats& stats,
                                  const EmbedOptions& opts = {});

// Contracts singletons on C1 of an already-normalized coloring (black
// major on C1, white major on C2), stopping as soon as r1 = r2 or
// r1 = delta or no singleton remains.
std::pair<Coloring, ContractionRecord> contract_singletons(const Coloring& col);

// Expands an NHAP of the contracted instance to the original one.
PathEmbedding expand_path(const PathEmbedding& pe, const ContractionRecord& rec);

// Full construction driver: requires an equitable coloring and
// 5*|Ci| >= |C1|+|C2| for both chains; handles even and odd n.
PathEmbedding embed_nhap(const DoubleChain& dc, const Coloring& col,
                         const EmbedOptions& opts = {});

}  // namespace dcpath

#endif
