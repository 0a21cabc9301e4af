#include <doctest.h>

#include <algorithm>

#include "dcpath/nhap.hpp"
#include "dcpath/oracle.hpp"

using namespace dcpath;

TEST_CASE("brute_force_nhap finds the easy instance") {
  const DoubleChain dc = generate_double_chain(2, 2);
  const Coloring col{"BB", "WW"};
  const auto [pts, cols] = flatten_instance(dc, col);
  const auto res = brute_force_nhap(pts, cols, {});
  REQUIRE(res.status == SearchStatus::Found);
  REQUIRE(res.order.size() == 4);
  // found witnesses validate as path embeddings too
  PathEmbedding pe;
  for (int i : res.order)
    pe.order.emplace_back(i < 2 ? 1 : 2, i < 2 ? i : i - 2);
  CHECK(validate_path_embedding(dc, col, pe).ok);
}

TEST_CASE("brute_force_nhap reports none for unbalanced counts") {
  const DoubleChain dc = generate_double_chain(2, 2);
  const Coloring col{"BB", "WB"};
  const auto [pts, cols] = flatten_instance(dc, col);
  const auto res = brute_force_nhap(pts, cols, {});
  CHECK(res.status == SearchStatus::None);
}

TEST_CASE("improperly colored P4 cannot embed on the 2+2 double chain") {
  // Black on the top-left and bottom-right point, path colored B,B,W,W.
  const DoubleChain dc = generate_double_chain(2, 2);
  const Coloring col{"BW", "WB"};
  const ColoredGraph p4{4, {{0, 1}, {1, 2}, {2, 3}}, "BBWW"};
  const auto [pts, cols] = flatten_instance(dc, col);
  const auto res = brute_force_embed(p4, pts, cols, {});
  CHECK(res.status == SearchStatus::None);

  // Stability: relabeling the points cannot change the answer.
  std::vector<int> perm{3, 1, 0, 2};
  std::vector<Point> pts2(4);
  std::vector<Color> cols2(4);
  for (int i = 0; i < 4; ++i) {
    pts2[i] = pts[perm[i]];
    cols2[i] = cols[perm[i]];
  }
  const auto res2 = brute_force_embed(p4, pts2, cols2, {});
  CHECK(res2.status == SearchStatus::None);

  // The properly colored path embeds fine on the same points.
  const ColoredGraph proper{4, {{0, 1}, {1, 2}, {2, 3}}, "BWBW"};
  const auto res3 = brute_force_embed(proper, pts, cols, {});
  CHECK(res3.status == SearchStatus::Found);
}

TEST_CASE("brute_force_embed immediate none on incompatible counts") {
  const DoubleChain dc = generate_double_chain(2, 2);
  const Coloring col{"BB", "BW"};
  const ColoredGraph p4{4, {{0, 1}, {1, 2}, {2, 3}}, "BWBW"};
  const auto [pts, cols] = flatten_instance(dc, col);
  const auto res = brute_force_embed(p4, pts, cols, {});
  CHECK(res.status == SearchStatus::None);
  CHECK(res.nodes == 0);
}

TEST_CASE("budgets produce inconclusive, not none") {
  const DoubleChain dc = generate_double_chain(5, 5);
  const Coloring col{"BWBWB", "WBWBW"};
  const auto [pts, cols] = flatten_instance(dc, col);
  const auto res = brute_force_nhap(pts, cols, {3, 1e9});
  CHECK(res.status == SearchStatus::Inconclusive);
  CHECK_THROWS_AS(brute_force_nhap(pts, cols, {0, 1.0}), PreconditionError);
}

TEST_CASE("oracle requires general position") {
  const std::vector<Point> pts{{0, 0}, {1, 1}, {2, 2}, {5, 0}};
  const std::vector<Color> cols{Color::Black, Color::White, Color::Black,
                                Color::White};
  CHECK_THROWS_AS(brute_force_nhap(pts, cols, {}), PreconditionError);
}

TEST_CASE("oracle agreement with the constructive embedder at n <= 8") {
  for (int n1 = 2; n1 <= 4; ++n1) {
    for (int n2 = 2; n2 <= 4; ++n2) {
      const int n = n1 + n2;
      if (5 * n1 < n || 5 * n2 < n) continue;
      const DoubleChain dc = generate_double_chain(n1, n2);
      for (const std::string& s : enumerate_equitable_colorings(n)) {
        const Coloring col{s.substr(0, n1), s.substr(n1)};
        const auto pe = embed_nhap(dc, col);
        CHECK(validate_path_embedding(dc, col, pe).ok);
        const auto [pts, cols] = flatten_instance(dc, col);
        const auto res = brute_force_nhap(pts, cols, {});
        CHECK(res.status == SearchStatus::Found);
      }
    }
  }
}

TEST_CASE("enumerate_equitable_colorings") {
  CHECK(enumerate_equitable_colorings(2) ==
        std::vector<std::string>{"BW", "WB"});
  CHECK(enumerate_equitable_colorings(4).size() == 6);
  CHECK(enumerate_equitable_colorings(10).size() == 252);
  const auto odd = enumerate_equitable_colorings(3);
  CHECK(odd.size() == 6);  // C(3,1) + C(3,2)
  // lexicographic and duplicate-free
  CHECK(std::is_sorted(odd.begin(), odd.end()));
  CHECK(std::adjacent_find(odd.begin(), odd.end()) == odd.end());
}

TEST_CASE("search is deterministic") {
  const DoubleChain dc = generate_double_chain(4, 4);
  const Coloring col{"BWWB", "WBBW"};
  const auto [pts, cols] = flatten_instance(dc, col);
  const auto a = brute_force_nhap(pts, cols, {100000, 1e9});
  const auto b = brute_force_nhap(pts, cols, {100000, 1e9});
  CHECK(a.status == b.status);
  CHECK(a.nodes == b.nodes);
  CHECK(a.order == b.order);
}
