#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "knotflow/flows.hpp"

#include <set>

using namespace kf;

static Diagram fx(const std::string& name) { return load_kdt(std::string(FIXTURE_DIR) + "/" + name + ".kdt"); }

TEST_CASE("flows with throughput one are the admissible subgraphs") {
  for (auto name : {"unknot0", "trefoil_right", "trefoil4", "fig8", "knot5_2", "knot6_1", "unknot6"}) {
    ArcGraph g = build_arc_graph(fx(name));
    std::set<std::vector<int>> subs, flows;
    enumerate_admissible(g, [&](const std::vector<int>& c) {
      std::vector<int> f(g.edges.size(), 0);
      for (int e : c) f[e] = 1;
      subs.insert(f);
    });
    enumerate_flows(g, 1, [&](const Flow& f) { flows.insert(f); });
    CHECK(subs == flows);
  }
}

TEST_CASE("enumerated flows are exactly the bounded flows") {
  ArcGraph g = build_arc_graph(fx("fig8"));
  auto fl = all_flows(g, 3);
  std::set<Flow> seen(fl.begin(), fl.end());
  CHECK(seen.size() == fl.size());
  // brute force over all labellings with values <= 3
  long brute = 0;
  Flow f(g.edges.size(), 0);
  while (true) {
    bool ok = is_flow(g, f);
    for (int v = 1; v <= g.r && ok; ++v) ok = throughput(g, f, v) <= 3;
    if (ok) {
      ++brute;
      CHECK(seen.count(f));
    }
    size_t k = 0;
    while (k < f.size() && f[k] == 3) f[k++] = 0;
    if (k == f.size()) break;
    ++f[k];
  }
  CHECK(brute == long(fl.size()));
  CHECK_THROWS_AS(enumerate_flows(g, -1, [](const Flow&) {}), InvalidArgs);
}

TEST_CASE("multiplicities and sortings") {
  for (auto name : {"trefoil_right", "fig8", "knot5_2"}) {
    ArcGraph g = build_arc_graph(fx(name));
    for (auto& f : all_flows(g, 3)) {
      mpz_class m = flow_mult(g, f);
      CHECK(flow_mult_q(g, f).at_one() == m);
      long k = 0;
      enumerate_sortings(g, f, [&](const Sorting& C) {
        ++k;
        for (int i = 1; i <= g.r; ++i) CHECK(std::is_sorted(C[i].begin(), C[i].end()));
      });
      CHECK(k == m);
      auto F = red_copies(g, f);
      long red = 0;
      for (size_t e = 0; e < g.edges.size(); ++e)
        if (!g.edges[e].blue) red += f[e];
      CHECK(long(F.size()) == red);
      for (auto& x : F) CHECK(pset_size(g, f, x) >= 0);
    }
  }
}

TEST_CASE("n-sortings sum to the substituted flow weight") {
  ArcGraph g = build_arc_graph(fx("fig8"));
  for (int n = 1; n <= 2; ++n)
    for (auto& f : all_flows(g, 2)) {
      auto F = red_copies(g, f);
      NSortingData sd{g, f, F, n};
      Laurent tot;
      enumerate_n_sortings(g, f, n, false, [&](const Sorting&, const std::vector<int>& v) {
        tot += nsorting_weight(sd, v);
      });
      CHECK(tot == flow_weight(g, f).subs(n) * Laurent(flow_mult(g, f).get_si()));
    }
}

TEST_CASE("phi lift rejects non-admissible n-sortings") {
  ArcGraph g = build_arc_graph(fx("fig8"));
  CabledArcGraph cg = cable_graph(g, 2);
  long rejected = 0;
  for (auto& f : all_flows(g, 2)) {
    auto F = red_copies(g, f);
    NSortingData sd{g, f, F, 2};
    enumerate_n_sortings(g, f, 2, false, [&](const Sorting& C, const std::vector<int>& v) {
      if (nsorting_admissible(sd, C, v)) {
        CHECK_NOTHROW(phi_lift(cg, f, C, v));
      } else {
        CHECK_THROWS_AS(phi_lift(cg, f, C, v), NotAdmissible);
        ++rejected;
      }
    });
  }
  CHECK(rejected > 0);
}

TEST_CASE("structures") {
  CHECK(count_structures({3}, {0}) == 1);
  CHECK(count_structures({2, 1}, {0, 2}) == 1);
  CHECK(count_structures({2, 2}, {0, 1}) == 2);
  CHECK(structure_sum({1}, {0}, 2) == structure_product({1}, {0}, 2));
  for (int n = 1; n <= 3; ++n) {
    CHECK(structure_sum({2, 1}, {0, 1}, n) == structure_product({2, 1}, {0, 1}, n));
    CHECK(structure_sum({1, 2, 1}, {0, 1, 2}, n) == structure_product({1, 2, 1}, {0, 1, 2}, n));
  }
  CHECK_THROWS_AS(count_structures({}, {}), InvalidArgs);
  CHECK_THROWS_AS(count_structures({2}, {1}), InvalidArgs);
  CHECK_THROWS_AS(count_structures({1, 1}, {0, 3}), InvalidArgs);
  CHECK_THROWS_AS(structure_sum({0}, {0}, 1), InvalidArgs);
}
