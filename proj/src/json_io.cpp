#include "dcpath/json_io.hpp"

namespace dcpath {

namespace {

json points_to_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const Point& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

std::vector<Point> points_from_json(const json& arr, const char* what) {
  require(arr.is_array(), std::string(what) + " must be an array");
  std::vector<Point> pts;
  pts.reserve(arr.size());
  for (const auto& e : arr) {
    require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                e[1].is_number_integer(),
            std::string(what) + " entries must be [x, y] integer pairs");
    pts.push_back({e[0].get<std::int64_t>(), e[1].get<std::int64_t>()});
  }
  return pts;
}

json labeled_pairs_to_json(const std::vector<std::pair<int, int>>& entries) {
  json arr = json::array();
  for (const auto& [chain, pos] : entries)
    arr.push_back({chain == 1 ? "c1" : "c2", pos});
  return arr;
}

std::vector<std::pair<int, int>> labeled_pairs_from_json(const json& arr,
                                                         const char* what) {
  require(arr.is_array(), std::string(what) + " must be an array");
  std::vector<std::pair<int, int>> out;
  for (const auto& e : arr) {
    require(e.is_array() && e.size() == 2 && e[0].is_string() &&
                e[1].is_number_integer(),
            std::string(what) + " entries must be [\"c1\"|\"c2\", pos]");
    const std::string chain = e[0].get<std::string>();
    require(chain == "c1" || chain == "c2",
            std::string(what) + " chain label must be c1 or c2");
    out.emplace_back(chain == "c1" ? 1 : 2, e[1].get<int>());
  }
  return out;
}

void check_color_string(const std::string& s, const char* what) {
  for (char c : s)
    require(c == 'B' || c == 'W',
            std::string(what) + " must use only 'B' and 'W'");
}

}  // namespace

json to_json(const DoubleChain& dc) {
  return {{"c1", points_to_json(dc.c1.points)},
          {"c2", points_to_json(dc.c2.points)}};
}

json to_json(const Coloring& col) {
  return {{"c1", col.c1}, {"c2", col.c2}};
}

json to_json(const Instance& inst) {
  json j = to_json(inst.dc);
  j["coloring"] = to_json(inst.coloring);
  return j;
}

json to_json(const ColoredGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return {{"n", g.n}, {"edges", edges}, {"colors", g.colors}};
}

json to_json(const PathEmbedding& pe) {
  return {{"order", labeled_pairs_to_json(pe.order)}};
}

json to_json(const Embedding& emb) {
  return {{"map", labeled_pairs_to_json(emb.map)}};
}

DoubleChain double_chain_from_json(const json& j) {
  require(j.is_object() && j.contains("c1") && j.contains("c2"),
          "double chain document needs c1 and c2");
  DoubleChain dc;
  dc.c1.points = points_from_json(j.at("c1"), "c1");
  dc.c2.points = points_from_json(j.at("c2"), "c2");
  dc.c1.kind = ChainKind::Convex;
  dc.c2.kind = ChainKind::Concave;
  return dc;
}

Coloring coloring_from_json(const json& j) {
  require(j.is_object() && j.contains("c1") && j.contains("c2") &&
              j.at("c1").is_string() && j.at("c2").is_string(),
          "coloring document needs string fields c1 and c2");
  Coloring col{j.at("c1").get<std::string>(), j.at("c2").get<std::string>()};
  check_color_string(col.c1, "coloring.c1");
  check_color_string(col.c2, "coloring.c2");
  return col;
}

Instance instance_from_json(const json& j) {
  Instance inst;
  inst.dc = double_chain_from_json(j);
  require(j.contains("coloring"), "instance document needs a coloring");
  inst.coloring = coloring_from_json(j.at("coloring"));
  require(static_cast<int>(inst.coloring.c1.size()) == inst.dc.c1.size() &&
              static_cast<int>(inst.coloring.c2.size()) == inst.dc.c2.size(),
          "coloring length does not match chain sizes");
  return inst;
}

ColoredGraph graph_from_json(const json& j) {
  require(j.is_object() && j.contains("n") && j.contains("edges") &&
              j.contains("colors"),
          "graph document needs n, edges and colors");
  ColoredGraph g;
  require(j.at("n").is_number_integer(), "graph n must be an integer");
  g.n = j.at("n").get<int>();
  require(j.at("edges").is_array(), "graph edges must be an array");
  for (const auto& e : j.at("edges")) {
    require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                e[1].is_number_integer(),
            "graph edges must be [u, v] integer pairs");
    g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  require(j.at("colors").is_string(), "graph colors must be a string");
  g.colors = j.at("colors").get<std::string>();
  check_color_string(g.colors, "graph colors");
  require(static_cast<int>(g.colors.size()) == g.n,
          "graph colors length must equal n");
  return g;
}

PathEmbedding path_embedding_from_json(const json& j) {
  require(j.is_object() && j.contains("order"),
          "path embedding document needs order");
  return {labeled_pairs_from_json(j.at("order"), "order")};
}

Embedding embedding_from_json(const json& j) {
  require(j.is_object() && j.contains("map"), "embedding document needs map");
  return {labeled_pairs_from_json(j.at("map"), "map")};
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), "invalid JSON input");
  return j;
}

}  // namespace dcpath
