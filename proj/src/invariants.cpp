#include "knotflow/invariants.hpp"

#include <algorithm>
#include <map>

#include "knotflow/qalg.hpp"

namespace kf {

Laurent determinant(const Matrix& m) {
  const int n = int(m.size());
  if (n > 20) throw InvalidArgs("determinant: matrix too large");
  // expansion along rows, memoized on the set of used columns
  std::vector<Laurent> f(size_t(1) << n);
  f[0] = 1;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int row = __builtin_popcount(mask) - 1;
    Laurent s;
    int above = 0;
    for (int c = n - 1; c >= 0; --c) {
      if (!(mask >> c & 1)) continue;
      if (!m[row][c].is_zero() && !f[mask ^ (1u << c)].is_zero()) {
        Laurent x = m[row][c] * f[mask ^ (1u << c)];
        if (above % 2) s -= x; else s += x;
      }
      ++above;
    }
    f[mask] = std::move(s);
  }
  return f[(1u << n) - 1];
}

AlexanderResult alexander(const Diagram& d) {
  ArcGraph g = build_arc_graph(d);
  Matrix m = weight_matrix(g);
  for (int i = 0; i < g.r; ++i) {
    for (auto& x : m[i]) x = -x;
    m[i][i] += 1;
  }
  AlexanderResult res;
  res.raw = determinant(m);
  res.value = res.raw;
  if (res.raw.is_zero()) return res;
  int span = res.raw.min_e2() + res.raw.max_e2();
  if (span % 2) return res;
  Laurent p = res.raw.shift2(-span / 2);
  if (p.at_one() < 0) p = -p;
  if (p == p.inverted() && p.at_one() == 1) {
    res.value = p;
    res.normalized = true;
  }
  return res;
}

Laurent jones_arcsum(const Diagram& d) {
  ArcGraph g = build_arc_graph(d);
  Laurent s;
  enumerate_admissible(g, [&](const std::vector<int>& c) {
    s += edge_product(g, c).shift(subgraph_delta(g, c).delta());
  });
  return s.shift2(diagram_stats(d, 1).delta2);
}

Laurent flow_term(const ArcGraph& g, const Flow& f, int n) {
  Laurent T = Laurent::mono(flow_delta(g, f).delta());
  for (int v = 1; v <= g.r; ++v) {
    int s = g.sign[v];
    int fb = g.blue_out[v] >= 0 ? f[g.blue_out[v]] : 0;
    T = T * qbinom(throughput(g, f, v), fb, s).shift(-s * n * fb);
    int pre = 0;
    for (int e : g.in_edges[v]) {
      const Edge& x = g.edges[e];
      if (!x.blue) {
        int ss = g.sign[x.src];
        for (int j = 0; j < f[e]; ++j) T = T * (1 - Laurent::mono(-ss * (n - j - pre)));
      }
      pre += f[e];
    }
  }
  return T;
}

Laurent colored_jones_flow(const Diagram& d, int n) {
  if (n < 1) throw InvalidArgs("colored_jones_flow: n < 1");
  ArcGraph g = build_arc_graph(d);
  Laurent s;
  enumerate_flows(g, n, [&](const Flow& f) { s += flow_term(g, f, n); });
  return s.shift2(diagram_stats(d, n).delta2);
}

CabledResult colored_jones_cabled(const Diagram& d, int n) {
  if (n < 1) throw InvalidArgs("colored_jones_cabled: n < 1");
  ArcGraph g = build_arc_graph(d);
  CabledArcGraph cg = cable_graph(g, n);
  CabledResult res;
  enumerate_admissible(cg, [&](const std::vector<int>& c) {
    res.sum += edge_product(cg, c).shift(subgraph_delta(cg, c).delta());
    ++res.subgraphs;
  });
  res.value = res.sum.shift2(diagram_stats(d, n).delta2);
  res.quadratic = res.sum.shift2(delta2_quadratic(d, n));
  return res;
}

Laurent colored_jones_sortings(const Diagram& d, int n) {
  if (n < 1) throw InvalidArgs("colored_jones_sortings: n < 1");
  ArcGraph g = build_arc_graph(d);
  Laurent s;
  enumerate_flows(g, n, [&](const Flow& f) {
    std::vector<RedCopy> F = red_copies(g, f);
    NSortingData sd{g, f, F, n};
    Laurent inner;
    enumerate_n_sortings(g, f, n, true, [&](const Sorting& C, const std::vector<int>& v) {
      inner += nsorting_weight(sd, v).shift(nsorting_exc(sd, C, v));
    });
    s += inner.shift(flow_delta(g, f).delta());
  });
  return s.shift2(diagram_stats(d, n).delta2);
}

// R-matrix weight of one crossing, exponents in q; nullopt when the coloring is not a state
static std::optional<Laurent> rweight(int ui, int uo, int oi, int oo, int s) {
  if (ui + oi != uo + oo) return std::nullopt;
  if (ui == uo && oi == oo && ui == oi) return -Laurent::mono(s);
  if (ui == 1 && oo == 1 && oi == 0 && uo == 0) return s * (Laurent::mono(-1) - Laurent::mono(1));
  if (oi == 1 && uo == 1) return Laurent();
  return Laurent(1);
}

// local factor of beta(s), in q, and the exc contribution
static Laurent local_beta(int ui, int uo, int oi, int oo, int s, int& exc) {
  if (ui && uo && oi && oo) {
    exc += s;
    return Laurent::mono(-2 * s);
  }
  if (ui && oo) return 1 - Laurent::mono(-2 * s);  // jump up
  if (ui && uo) return Laurent::mono(-2 * s);      // straight under
  return 1;
}

static Laurent q_to_t(const Laurent& p) {
  std::vector<Laurent::Term> ts;
  for (auto& x : p.terms()) ts.push_back({x.e2 / 2, x.c});
  return Laurent::from_terms(std::move(ts));
}

RMatrixResult rmatrix_jones(const Diagram& d) {
  require_valid(d);
  Partarcs pa = partarcs(d);
  const int P = pa.count();
  int R = 0, w = 0;
  for (int x : pa.rot) R += x;
  for (int i = 1; i <= d.N; ++i) w += d.sign[i];
  // q-exponents are stored doubled inside Laurent, so the q-polynomial is built with mono(k)
  Laurent tot;
  RMatrixResult res;
  const Laurent wpow = Laurent::mono(w) * (w % 2 ? -1 : 1);  // (-q)^w
  for (unsigned long col = 0; col < (1ul << P); ++col) {
    auto bit = [&](int i) { return int(col >> i & 1); };
    Laurent W(1), beta(1);
    int exc = 0;
    bool ok = true;
    for (auto& c : pa.cross) {
      auto x = rweight(bit(c.ui), bit(c.uo), bit(c.oi), bit(c.oo), c.sign);
      if (!x || x->is_zero()) {
        ok = false;
        break;
      }
      W = W * *x;
      beta = beta * local_beta(bit(c.ui), bit(c.uo), bit(c.oi), bit(c.oo), c.sign, exc);
    }
    if (!ok) continue;
    if (d.N == 0) W = 1;
    int rs = 0;
    for (int i = 0; i < P; ++i)
      if (bit(i)) rs += pa.rot[i];
    tot += W.shift(R - 2 * rs);
    ++res.states;
    ++res.rw_checked;
    if (W != wpow * beta.shift(2 * exc)) ++res.rw_failed;
  }
  Laurent pre = Laurent::mono(-2 * w) * (w % 2 ? -1 : 1);  // (-q^2)^(-w)
  Laurent V = pre * tot;
  Laurent J = exact_divide(V, Laurent::mono(1) + Laurent::mono(-1));
  res.closed = q_to_t(V);
  res.jones = q_to_t(J);
  return res;
}

MmrReport mmr_report(const Diagram& d, const std::vector<int>& orders, int D) {
  if (D < 2) throw InvalidArgs("mmr_report: D >= 2 required");
  MmrReport rep;
  rep.orders = orders;
  rep.D = D;
  AlexanderResult a = alexander(d);
  Series s = exp_substitute(a.value, 1, D);
  if (s[0] == 0) throw InvalidArgs("Alexander series has zero constant term");
  rep.limit = s.inverse();
  for (int n : orders) {
    if (n < 1) throw InvalidArgs("mmr_report: orders must be >= 1");
    Series sn = exp_substitute(colored_jones_flow(d, n), mpq_class(1, n), D);
    std::vector<mpq_class> e;
    for (int j = 0; j <= D; ++j) e.push_back(abs(sn[j] - rep.limit[j]));
    rep.values.push_back(sn);
    rep.err.push_back(e);
  }
  return rep;
}

std::vector<int> mmr_nonmonotone(const MmrReport& rep) {
  std::vector<int> bad;
  for (int j = 0; j <= rep.D; ++j)
    for (size_t k = 1; k < rep.err.size(); ++k) {
      const mpq_class &a = rep.err[k - 1][j], &b = rep.err[k][j];
      if (!(b < a || (a == 0 && b == 0))) {
        bad.push_back(j);
        break;
      }
    }
  return bad;
}

std::string compare(const Laurent& a, const Laurent& b) {
  if (a == b) return "EQUAL";
  if (auto u = equal_up_to_unit(a, b)) return "EQUAL_UP_TO_UNIT " + std::to_string(u->eps) + " " + half_str(u->k2);
  return "MISMATCH " + (a - b).str();
}

std::vector<VerifyLine> verify(const Diagram& d, int max_n, bool with_ferm) {
  std::vector<VerifyLine> out;
  auto add = [&](const std::string& a, const std::string& b, int n, const Laurent& x, const Laurent& y) {
    std::string c = compare(x, y);
    std::string tag = "[n=" + std::to_string(n) + "]";
    out.push_back({a + tag + " vs " + b + tag + ": " + c, c != "EQUAL"});
  };
  for (int n = 1; n <= max_n; ++n) {
    Laurent flow = colored_jones_flow(d, n);
    if (n == 1) {
      add("flow", "arcsum", n, flow, jones_arcsum(d));
      if (d.N > 0) add("flow", "rmatrix", n, flow, rmatrix_jones(d).jones);
    }
    add("flow", "cabled", n, flow, colored_jones_cabled(d, n).value);
    add("flow", "sortings", n, flow, colored_jones_sortings(d, n));
    if (with_ferm) add("flow", "ferm", n, flow, colored_jones_ferm(d, n));
  }
  return out;
}

}  // namespace kf
