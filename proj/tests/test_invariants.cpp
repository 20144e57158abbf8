#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "knotflow/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace kf;

static Diagram fx(const std::string& name) { return load_kdt(std::string(FIXTURE_DIR) + "/" + name + ".kdt"); }
static Laurent P(const std::string& s) { return Laurent::parse(s); }

static const Laurent t = Laurent::mono(1), ti = Laurent::mono(-1);

static Laurent leibniz(const Matrix& m) {
  int n = int(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Laurent s;
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inv += p[a] > p[b];
    Laurent x(inv % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) x = x * m[i][p[i]];
    s += x;
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}

TEST_CASE("determinant agrees with the permutation expansion") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
  for (int n = 0; n <= 5; ++n)
    for (int rep = 0; rep < 4; ++rep) {
      Matrix m(n, std::vector<Laurent>(n));
      for (auto& row : m)
        for (auto& x : row) x = Laurent::mono(e(rng), c(rng)) + Laurent::mono(e(rng), c(rng));
      CHECK(determinant(m) == leibniz(m));
    }
}

TEST_CASE("Alexander polynomials") {
  CHECK(alexander(fx("fig8")).value == 3 - t - ti);
  CHECK(alexander(fx("fig8")).value.pretty() == "3 - t - t^-1");
  CHECK(alexander(fx("trefoil_right")).value == t - 1 + ti);
  CHECK(alexander(fx("trefoil4")).value == t - 1 + ti);
  CHECK(alexander(fx("knot5_2")).value == 2 * t - 3 + 2 * ti);
  CHECK(alexander(fx("knot6_1")).value == -2 * t + 5 - 2 * ti);
  for (auto name : {"unknot0", "unknot5", "unknot6"}) CHECK(alexander(fx(name)).value == 1);
  for (auto name : {"trefoil_left", "fig8", "knot5_2", "knot6_1", "unknot6"}) {
    auto a = alexander(fx(name));
    CHECK(a.normalized);
    CHECK(abs(a.raw.at_one()) == 1);
    CHECK(equal_up_to_unit(a.raw, a.raw.inverted()).has_value());
  }
}

TEST_CASE("Jones polynomials by every n = 1 route") {
  std::vector<std::pair<const char*, Laurent>> table = {
      {"unknot0", 1},
      {"unknot5", 1},
      {"unknot6", 1},
      {"trefoil_right", t + t.pow(3) - t.pow(4)},
      {"trefoil_left", ti + ti.pow(3) - ti.pow(4)},
      {"trefoil4", t + t.pow(3) - t.pow(4)},
      {"fig8", ti.pow(2) - ti + 1 - t + t.pow(2)},
      {"knot5_2", -ti.pow(6) + ti.pow(5) - ti.pow(4) + 2 * ti.pow(3) - ti.pow(2) + ti},
      {"knot6_1", ti.pow(4) - ti.pow(3) + ti.pow(2) - 2 * ti + 2 - t + t.pow(2)},
  };
  for (auto& [name, J] : table) {
    Diagram d = fx(name);
    CAPTURE(name);
    CHECK(jones_arcsum(d) == J);
    CHECK(colored_jones_flow(d, 1) == J);
    CHECK(colored_jones_cabled(d, 1).value == J);
    CHECK(colored_jones_sortings(d, 1) == J);
    if (d.N > 0) {
      auto rm = rmatrix_jones(d);
      CHECK(rm.jones == J);
      CHECK(rm.rw_failed == 0);
      CHECK(rm.rw_checked == rm.states);
      CHECK(rm.closed == J * (Laurent::mono2(1) + Laurent::mono2(-1)));
    }
  }
}

TEST_CASE("colored routes agree and respect mirroring") {
  for (auto name : {"trefoil_right", "fig8"}) {
    Diagram d = fx(name);
    for (int n = 2; n <= 3; ++n) {
      Laurent f = colored_jones_flow(d, n);
      CHECK(f == colored_jones_cabled(d, n).value);
      CHECK(f == colored_jones_sortings(d, n));
      CHECK(colored_jones_flow(mirror(d), n) == f.inverted());
    }
  }
  CHECK(colored_jones_flow(fx("trefoil4"), 2) == colored_jones_flow(fx("trefoil_right"), 2));
  for (int n = 1; n <= 3; ++n) CHECK(colored_jones_flow(fx("unknot5"), n) == 1);
  CHECK_THROWS_AS(colored_jones_flow(fx("fig8"), 0), InvalidArgs);
}

TEST_CASE("flow terms sum to the colored polynomial") {
  Diagram d = fx("fig8");
  ArcGraph g = build_arc_graph(d);
  Laurent s;
  for (auto& f : all_flows(g, 2)) s += flow_term(g, f, 2);
  CHECK(s.shift2(diagram_stats(d, 2).delta2) == colored_jones_flow(d, 2));
}

TEST_CASE("comparison grammar") {
  CHECK(compare(t, t) == "EQUAL");
  CHECK(compare(-t.pow(2), t) == "EQUAL_UP_TO_UNIT -1 1");
  CHECK(compare(Laurent::mono2(1), 1) == "EQUAL_UP_TO_UNIT 1 1/2");
  CHECK(compare(t, 1 + t).rfind("MISMATCH ", 0) == 0);
  for (auto& l : verify(fx("trefoil_right"), 2, false)) {
    CHECK_FALSE(l.mismatch);
    CHECK(l.text.find(" vs ") != std::string::npos);
  }
}

TEST_CASE("MMR report") {
  auto rep = mmr_report(fx("fig8"), {2, 4}, 4);
  CHECK(rep.limit[0] == 1);
  CHECK(rep.limit[1] == 0);
  CHECK(rep.limit[2] == 1);
  CHECK(rep.err.size() == 2);
  auto u = mmr_report(fx("unknot5"), {1, 3}, 3);
  for (auto& e : u.err)
    for (auto& x : e) CHECK(x == 0);
  CHECK(mmr_nonmonotone(u).empty());
  CHECK_THROWS_AS(mmr_report(fx("fig8"), {2}, 1), InvalidArgs);
}
