#include <doctest.h>

#include "dcpath/chains.hpp"

using namespace dcpath;

TEST_CASE("generate_double_chain validates across sizes") {
  for (int n1 : {1, 2, 3, 5, 8, 13}) {
    for (int n2 : {1, 2, 3, 5, 8, 13}) {
      const DoubleChain dc = generate_double_chain(n1, n2);
      CHECK(dc.c1.size() == n1);
      CHECK(dc.c2.size() == n2);
      const ValidationReport rep = validate_double_chain(dc);
      CHECK_MESSAGE(rep.ok, rep.violation);
    }
  }
  // Deterministic output.
  const DoubleChain a = generate_double_chain(7, 4);
  const DoubleChain b = generate_double_chain(7, 4);
  CHECK(a.c1.points == b.c1.points);
  CHECK(a.c2.points == b.c2.points);
}

TEST_CASE("generate_double_chain at the test-scale boundary") {
  const DoubleChain dc = generate_double_chain(200, 40);
  CHECK(validate_double_chain(dc).ok);
  const DoubleChain big = generate_double_chain(200, 200);
  CHECK(validate_double_chain(big).ok);
  const DoubleChain tall = generate_double_chain(50, 10);
  CHECK(validate_double_chain(tall).ok);
  const DoubleChain tiny = generate_double_chain(1, 1);
  REQUIRE(tiny.c1.size() == 1);
  REQUIRE(tiny.c2.size() == 1);
  CHECK(tiny.c1.points[0].y > tiny.c2.points[0].y);
}

TEST_CASE("validate_double_chain reports violations") {
  DoubleChain dc = generate_double_chain(3, 3);
  SUBCASE("collinear points break convexity") {
    dc.c1.points[1].y = (dc.c1.points[0].y + dc.c1.points[2].y) / 2;
    dc.c1.points[1].x = (dc.c1.points[0].x + dc.c1.points[2].x) / 2;
    const auto rep = validate_double_chain(dc);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violation.find("convexity") != std::string::npos);
  }
  SUBCASE("c2 point above a c1 chord") {
    dc.c2.points[1].y = dc.c1.points[1].y;
    const auto rep = validate_double_chain(dc);
    CHECK_FALSE(rep.ok);
  }
  SUBCASE("x order violation") {
    std::swap(dc.c1.points[0], dc.c1.points[1]);
    const auto rep = validate_double_chain(dc);
    CHECK_FALSE(rep.ok);
  }
}

TEST_CASE("periodic_coloring_16") {
  CHECK(periodic_coloring_16(16) == "BBWWWWBBBBBBWWWW");
  CHECK(periodic_coloring_16(3) == "BBW");
  CHECK(periodic_coloring_16(32) == "BBWWWWBBBBBBWWWWBBWWWWBBBBBBWWWW");
  // Each full period holds 8 black and 8 white points.
  for (int n1 : {16, 32, 48, 160}) {
    const std::string s = periodic_coloring_16(n1);
    CHECK(count_color(s, Color::Black) == n1 / 2);
  }
}

TEST_CASE("compute_stats on the worked example") {
  // C1 = B,W,B,B,W and C2 = W,W,B: black already major on C1, white on C2.
  const Coloring col{"BWBBW", "WWB"};
  const ChainStats st = compute_stats(5, 3, col);
  CHECK(st.b1 == 3);
  CHECK(st.w1 == 2);
  CHECK(st.b2 == 1);
  CHECK(st.w2 == 2);
  CHECK(st.delta == 1);
  CHECK(st.surplus1 == 1);
  CHECK(st.r1 == 2);
  CHECK(st.r2 == 1);
  CHECK_FALSE(st.swapped_chains);
  CHECK_FALSE(st.swapped_colors);
}

TEST_CASE("compute_stats normalization cases") {
  SUBCASE("monochromatic chains") {
    const ChainStats st = compute_stats(4, 4, {"BBBB", "WWWW"});
    CHECK(st.r1 == 1);
    CHECK(st.r2 == 1);
    CHECK(st.w1 == 0);
    CHECK(st.delta == 4);
  }
  SUBCASE("alternating majors give one run per black point") {
    const ChainStats st = compute_stats(6, 6, {"BWBWBW", "WBWBWB"});
    CHECK(st.r1 == 3);
    CHECK(st.r2 == 3);
    CHECK(st.delta == 0);
  }
  SUBCASE("color swap normalization") {
    const ChainStats st = compute_stats(3, 3, {"WWB", "BBW"});
    CHECK(st.swapped_colors);
    CHECK_FALSE(st.swapped_chains);
    CHECK(st.b1 == 2);
    CHECK(st.w2 == 2);
  }
  SUBCASE("chain swap normalization") {
    const ChainStats st = compute_stats(3, 3, {"WWB", "BBW"});
    // view chain colors stay consistent with view_color
    const Coloring col{"WWB", "BBW"};
    for (int pos = 0; pos < 3; ++pos) {
      CHECK(view_color(col, st, 1, pos) ==
            color_from_char(view_chain_colors(col, st, 1)[pos]));
      CHECK(view_color(col, st, 2, pos) ==
            color_from_char(view_chain_colors(col, st, 2)[pos]));
    }
  }
  SUBCASE("tie keeps black major on C1") {
    const ChainStats st = compute_stats(2, 2, {"BW", "WB"});
    CHECK_FALSE(st.swapped_chains);
    CHECK_FALSE(st.swapped_colors);
    CHECK(st.b1 == 1);
    CHECK(st.delta == 0);
  }
}

TEST_CASE("even equitable colorings satisfy the surplus identity") {
  for (int n1 = 1; n1 <= 5; ++n1) {
    for (int n2 = 1; n2 <= 5; ++n2) {
      if ((n1 + n2) % 2) continue;
      const int n = n1 + n2;
      for (int mask = 0; mask < (1 << n); ++mask) {
        int blacks = 0;
        std::string s(n, 'W');
        for (int i = 0; i < n; ++i)
          if (mask & (1 << i)) {
            s[i] = 'B';
            ++blacks;
          }
        if (std::abs(2 * blacks - n) > 1) continue;
        const Coloring col{s.substr(0, n1), s.substr(n1)};
        const ChainStats st = compute_stats(n1, n2, col);
        CHECK(st.b1 - st.w1 == st.w2 - st.b2);
        CHECK(st.b1 >= st.w1);
        CHECK(st.w2 >= st.b2);
        // runs are separated by a minor point
        CHECK(st.r1 <= st.w1 + 1);
        CHECK(st.r2 <= st.b2 + 1);
      }
    }
  }
}

TEST_CASE("is_equitable") {
  CHECK(is_equitable({"BBB", "WWW"}));
  CHECK(is_equitable({"BBBW", "WWW"}));
  CHECK_FALSE(is_equitable({"BBBBB", "WWW"}));
}

TEST_CASE("is_compatible") {
  CHECK(is_compatible({"BW", "BW"}, "BWBW"));
  CHECK_FALSE(is_compatible({"BB", "BW"}, "BWBW"));
  CHECK(is_compatible({"BW", "BW"}, "BBWW"));  // counts only, not properness
  CHECK_THROWS_AS(is_compatible({"BW", "B"}, "BWBW"), PreconditionError);
}

TEST_CASE("major_runs") {
  using Runs = std::vector<std::pair<int, int>>;
  CHECK(major_runs("BWBBW", Color::Black) == Runs{{0, 0}, {2, 3}});
  CHECK(major_runs("WWB", Color::White) == Runs{{0, 1}});
  CHECK(major_runs("WWW", Color::Black).empty());
}
