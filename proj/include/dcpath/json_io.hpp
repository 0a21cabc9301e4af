#ifndef DCPATH_JSON_IO_HPP
#define DCPATH_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "dcpath/chains.hpp"
#include "dcpath/nhap.hpp"
#include "dcpath/oracle.hpp"
#include "dcpath/trees.hpp"

namespace dcpath {

using json = nlohmann::json;

// Wire formats (normative for the CLI):
//   double chain    {"c1": [[x,y],...], "c2": [[x,y],...]}
//   coloring        {"c1": "BWW...", "c2": "WBB..."}
//   instance        double chain plus "coloring"
//   graph           {"n": 7, "edges": [[0,1],...], "colors": "BWBWBWB"}
//   path embedding  {"order": [["c1",0],["c2",3],...]}
//   embedding       {"map": [["c1",0],...]} indexed by vertex

struct Instance {
  DoubleChain dc;
  Coloring coloring;
};

json to_json(const DoubleChain& dc);
json to_json(const Coloring& col);
json to_json(const Instance& inst);
json to_json(const ColoredGraph& g);
json to_json(const PathEmbedding& pe);
json to_json(const Embedding& emb);

DoubleChain double_chain_from_json(const json& j);
Coloring coloring_from_json(const json& j);
Instance instance_from_json(const json& j);
ColoredGraph graph_from_json(const json& j);
PathEmbedding path_embedding_from_json(const json& j);
Embedding embedding_from_json(const json& j);

json parse_json(const std::string& text);

}  // namespace dcpath

#endif
