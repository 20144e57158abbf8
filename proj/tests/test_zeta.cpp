#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "knotflow/zeta.hpp"

using namespace kf;

static MultiPoly geometric(int E, int D, const MultiPoly& x) {
  MultiPoly s(E, D), p = MultiPoly::one(E, D);
  for (int k = 0; k <= D; ++k) {
    s += p;
    p = p * x;
  }
  return s;
}

TEST_CASE("multivariate truncation") {
  MultiPoly x = MultiPoly::var(2, 3, 0), y = MultiPoly::var(2, 3, 1);
  MultiPoly p = (x + y) * (x + y) * (x + y) * (x + y);
  CHECK(p.is_zero());
  MultiPoly q = (x + y) * (x + y);
  CHECK(q.str({"x", "y"}) == "x^2 + 2 x y + y^2");
  CHECK((q - q).is_zero());
  CHECK(q.part(2) == q);
  CHECK(q.part(1).is_zero());
}

TEST_CASE("single loop and two-cycle") {
  WeightedDigraph loop{1, {{0, 0}}};
  MultiPoly x = MultiPoly::var(1, 3, 0);
  CHECK(zeta_flow_sum(loop, 3) == geometric(1, 3, x));
  CHECK(zeta_lyndon(loop, 3) == geometric(1, 3, x));
  CHECK(fz_identity_check(loop, 3));

  WeightedDigraph two{2, {{0, 1}, {1, 0}}};
  MultiPoly ab = MultiPoly::var(2, 4, 0) * MultiPoly::var(2, 4, 1);
  MultiPoly want = MultiPoly::one(2, 4) + ab + ab * ab;
  CHECK(zeta_flow_sum(two, 4) == want);
  CHECK(zeta_lyndon(two, 4) == want);
  CHECK(nonperiodic_cycles(two, 4).size() == 1);

  WeightedDigraph empty{3, {}};
  CHECK(zeta_flow_sum(empty, 5) == MultiPoly::one(0, 5));
  CHECK(det_I_minus_B(empty, 5) == MultiPoly::one(0, 5));
  CHECK(fz_identity_check(empty, 5));
}

TEST_CASE("three routes agree on random digraphs") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    int nv = 1 + int(seed % 3);
    WeightedDigraph g = random_digraph(seed, nv, 6);
    CAPTURE(seed);
    MultiPoly f = zeta_flow_sum(g, 6);
    CHECK(zeta_lyndon(g, 6) == f);
    CHECK(det_I_minus_B(g, 6) * f == MultiPoly::one(int(g.edges.size()), 6));
  }
  CHECK_THROWS(zeta_flow_sum(WeightedDigraph{1, {{0, 1}}}, 2));
}

TEST_CASE("Lyndon factorization and word maps") {
  std::vector<int> w{3, 4, 5, 1, 2, 4, 2, 1, 2, 3, 1, 2, 4, 2};
  auto wm = word_maps(5, w);
  std::vector<std::vector<int>> want{{3, 4, 5}, {1, 2, 4, 2}, {1, 2, 3, 1, 2, 4, 2}};
  CHECK(wm.factors == want);
  MultiPoly dec(25, 14);
  dec.add(wm.dec, 1);
  CHECK(dec.str(complete_names(5)) == "b12^3 b21^2 b23 b24^2 b31 b34 b42^2 b45 b53");

  auto e = word_maps(3, {});
  CHECK(e.factors.empty());
  CHECK(mono_degree(e.dec) == 0);
  auto s = word_maps(3, {2});
  CHECK(s.factors == std::vector<std::vector<int>>{{2}});
  CHECK(s.dec == beta_circ(3, {2}));
  CHECK((unsigned char)s.dec[4] == 1);  // b22

  for (auto& f : wm.factors) CHECK(is_lyndon(f));
  for (size_t k = 1; k < wm.factors.size(); ++k) CHECK(wm.factors[k - 1] >= wm.factors[k]);
  CHECK_FALSE(is_lyndon({1, 2, 1, 2}));
  CHECK_THROWS(beta_vert(2, {3}));
}

TEST_CASE("vertical map sums to the flow sum on complete graphs") {
  for (int r = 1; r <= 3; ++r) {
    WeightedDigraph K = complete_digraph(r);
    MultiPoly flows = zeta_flow_sum(K, 4);
    for (int L = 0; L <= 4; ++L) {
      MultiPoly vert(r * r, 4), dec(r * r, 4);
      std::vector<int> w(L, 1);
      while (true) {
        vert.add(beta_vert(r, w), 1);
        dec.add(beta_dec(r, w), 1);
        int k = 0;
        while (k < L && w[k] == r) w[k++] = 1;
        if (k == L) break;
        ++w[k];
      }
      CHECK(vert == flows.part(L));
      CHECK(dec == flows.part(L));
    }
  }
}
