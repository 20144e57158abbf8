#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "knotflow/arcgraph.hpp"

using namespace kf;

static Diagram fx(const std::string& name) { return load_kdt(std::string(FIXTURE_DIR) + "/" + name + ".kdt"); }

static const Laurent t = Laurent::mono(1), ti = Laurent::mono(-1);

static const char* all_fixtures[] = {"unknot0", "unknot5", "unknot6", "trefoil_right", "trefoil_left",
                                     "trefoil4", "fig8", "knot5_2", "knot6_1"};

TEST_CASE("figure-8 weight matrix") {
  Matrix W = full_weight_matrix(fx("fig8"));
  Matrix want = {{0, t, 0, 1 - t}, {1 - ti, 0, ti, 0}, {0, 1 - t, 0, t}, {ti, 0, 1 - ti, 0}};
  REQUIRE(W.size() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(W[i][j].str() == want[i][j].str());
}

TEST_CASE("W_K is the leading block of the full matrix") {
  for (auto name : all_fixtures) {
    Diagram d = fx(name);
    ArcGraph g = build_arc_graph(d);
    CHECK(g.r == std::max(d.N - 1, 0));
    Matrix W = weight_matrix(g), F = full_weight_matrix(d);
    for (int i = 0; i < g.r; ++i)
      for (int j = 0; j < g.r; ++j) CHECK(W[i][j] == F[i][j]);
    // one blue edge out of each vertex but the last, at most one red
    int blue = 0;
    for (auto& e : g.edges) blue += e.blue;
    CHECK(blue == std::max(g.r - 1, 0));
  }
}

TEST_CASE("admissible subgraphs") {
  auto count = [](const ArcGraph& g) {
    long k = 0;
    enumerate_admissible(g, [&](const std::vector<int>&) { ++k; });
    return k;
  };
  CHECK(count(build_arc_graph(fx("fig8"))) == 3);
  CHECK(count(build_arc_graph(fx("unknot0"))) == 1);

  // each admissible subgraph: every vertex has equal in and out degree <= 1
  ArcGraph g = build_arc_graph(fx("knot6_1"));
  enumerate_admissible(g, [&](const std::vector<int>& c) {
    std::vector<int> in(g.r + 2, 0), out(g.r + 2, 0);
    for (int e : c) ++out[g.edges[e].src], ++in[g.edges[e].dst];
    for (int v = 1; v <= g.r; ++v) {
      CHECK(in[v] == out[v]);
      CHECK(in[v] <= 1);
    }
  });
}

TEST_CASE("cabled graphs") {
  auto count = [](const CabledArcGraph& g) {
    long k = 0;
    enumerate_admissible(g, [&](const std::vector<int>&) { ++k; });
    return k;
  };
  ArcGraph f8 = build_arc_graph(fx("fig8")), tr = build_arc_graph(fx("trefoil_right"));
  std::vector<long> want_f8{3, 13, 79}, want_tr{2, 5, 16};
  for (int n = 1; n <= 3; ++n) {
    CHECK(count(cable_graph(f8, n)) == want_f8[n - 1]);
    CHECK(count(cable_graph(tr, n)) == want_tr[n - 1]);
  }
  CabledArcGraph c = cable_graph(f8, 3);
  size_t blue = 0, red = 0;
  for (auto& e : f8.edges) (e.blue ? blue : red) += 1;
  CHECK(c.edges.size() == blue * 3 + red * 9);
  for (int b = 0; b < int(f8.edges.size()); ++b)
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        if (f8.edges[b].blue && i != j) continue;
        const CEdge& e = c.edges[c.index(b, i, j)];
        CHECK(e.base == b);
        CHECK(e.src_sheet == i);
        CHECK(e.dst_sheet == j);
      }
  CHECK_THROWS_AS(cable_graph(f8, 0), InvalidArgs);
}

TEST_CASE("one-sheet cable matches the base graph") {
  for (auto name : all_fixtures) {
    ArcGraph g = build_arc_graph(fx(name));
    CabledArcGraph c = cable_graph(g, 1);
    REQUIRE(c.edges.size() == g.edges.size());
    std::vector<std::vector<int>> base, cab;
    enumerate_admissible(g, [&](const std::vector<int>& s) { base.push_back(s); });
    enumerate_admissible(c, [&](const std::vector<int>& s) { cab.push_back(s); });
    REQUIRE(base.size() == cab.size());
    for (auto& s : base) {
      std::vector<int> lift;
      for (int e : s) lift.push_back(c.index(e, 1, 1));
      std::sort(lift.begin(), lift.end());
      CHECK(subgraph_delta(g, s).delta() == subgraph_delta(c, lift).delta());
      CHECK(edge_product(g, s) == edge_product(c, lift));
    }
  }
}
