#include "knotflow/arcgraph.hpp"

#include <algorithm>
#include <numeric>

namespace kf {

static int pos_in(const std::vector<int>& v, int x) {
  return int(std::find(v.begin(), v.end(), x) - v.begin());
}

static int sum_from(const std::vector<int>& v, size_t k) {
  return std::accumulate(v.begin() + std::min(k, v.size()), v.end(), 0);
}

ArcGraph build_arc_graph(const Diagram& d) {
  require_valid(d);
  ArcGraph g;
  g.r = std::max(d.N - 1, 0);
  const int r = g.r;
  g.sign.assign(r + 1, 0);
  g.blue_out.assign(r + 1, -1);
  g.red_out.assign(r + 1, -1);
  g.red_head.assign(r + 1, 0);
  g.red_key.assign(r + 1, 0);
  g.blue_in.assign(r + 2, -1);
  g.in_edges.assign(r + 2, {});
  for (int v = 1; v <= r; ++v) {
    int s = d.sign[v];
    g.sign[v] = s;
    if (v + 1 <= r) {
      g.blue_out[v] = int(g.edges.size());
      g.blue_in[v + 1] = int(g.edges.size());
      g.edges.push_back({v, v + 1, true, sum_from(d.rot[v + 1], 0), -1, Laurent::mono(-s)});
    }
    int j = d.over[v];
    int k = pos_in(d.overorder[j], v);
    g.red_head[v] = j;
    g.red_key[v] = k;
    if (j <= r) {
      g.red_out[v] = int(g.edges.size());
      g.edges.push_back({v, j, false, sum_from(d.rot[j], k + 1), k, 1 - Laurent::mono(-s)});
    }
  }
  for (int e = 0; e < int(g.edges.size()); ++e) g.in_edges[g.edges[e].dst].push_back(e);
  for (auto& l : g.in_edges)
    std::sort(l.begin(), l.end(), [&](int a, int b) { return g.edges[a].key < g.edges[b].key; });
  return g;
}

Matrix full_weight_matrix(const Diagram& d) {
  require_valid(d);
  int N = d.N;
  Matrix W(N, std::vector<Laurent>(N));
  for (int i = 1; i <= N; ++i) {
    int s = d.sign[i];
    W[i - 1][i % N] += Laurent::mono(-s);
    W[i - 1][d.over[i] - 1] += 1 - Laurent::mono(-s);
  }
  return W;
}

Matrix weight_matrix(const ArcGraph& g) {
  Matrix W(g.r, std::vector<Laurent>(g.r));
  for (auto& e : g.edges) W[e.src - 1][e.dst - 1] += e.w;
  return W;
}

int CabledArcGraph::index(int base_edge, int src_sheet, int dst_sheet) const {
  const Edge& e = base.edges[base_edge];
  if (e.blue) return first_[base_edge] + src_sheet - 1;
  return first_[base_edge] + (src_sheet - 1) * n + dst_sheet - 1;
}

bool CabledArcGraph::precedes(const CEdge& e, const CEdge& e2) const {
  if (e.dst == e2.dst && base.edges[e.base].key < base.edges[e2.base].key) return true;
  if (e.src == e2.src) {
    int s = base.sign[e.src];
    if (s > 0 && e.src_sheet < e2.src_sheet) return true;
    if (s < 0 && e2.src_sheet < e.src_sheet) return true;
  }
  return false;
}

CabledArcGraph cable_graph(const ArcGraph& g, int n) {
  if (n < 1) throw InvalidArgs("cable_graph: n < 1");
  CabledArcGraph c;
  c.n = n;
  c.base = g;
  for (int b = 0; b < int(g.edges.size()); ++b) {
    const Edge& e = g.edges[b];
    int s = g.sign[e.src];
    c.first_.push_back(int(c.edges.size()));
    for (int i = 1; i <= n; ++i) {
      if (e.blue) {
        c.edges.push_back({e.src, e.dst, i, i, b, true, e.rot, Laurent::mono(-s * n)});
        continue;
      }
      for (int j = 1; j <= n; ++j) {
        Laurent w = s < 0 ? Laurent::mono(j - 1) * (1 - Laurent::mono(1))
                          : Laurent::mono(-(n - j)) * (1 - Laurent::mono(-1));
        c.edges.push_back({e.src, e.dst, i, j, b, false, e.rot, w});
      }
    }
  }
  return c;
}

void enumerate_cycle_covers(int nv, const std::vector<std::pair<int, int>>& edges,
                            const std::function<void(const std::vector<int>&)>& out) {
  std::vector<std::vector<int>> adj(nv);
  for (int e = 0; e < int(edges.size()); ++e) adj[edges[e].first].push_back(e);
  std::vector<char> has_in(nv, 0), has_out(nv, 0);
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int v) {
    if (v == nv) {
      if (has_in == has_out) {
        std::vector<int> c = chosen;
        std::sort(c.begin(), c.end());
        out(c);
      }
      return;
    }
    rec(v + 1);
    for (int e : adj[v]) {
      int h = edges[e].second;
      if (has_in[h]) continue;
      has_in[h] = 1;
      has_out[v] = 1;
      chosen.push_back(e);
      rec(v + 1);
      chosen.pop_back();
      has_out[v] = 0;
      has_in[h] = 0;
    }
  };
  rec(0);
}

void enumerate_admissible(const ArcGraph& g, const std::function<void(const std::vector<int>&)>& out) {
  std::vector<std::pair<int, int>> es;
  for (auto& e : g.edges) es.push_back({e.src - 1, e.dst - 1});
  enumerate_cycle_covers(g.r, es, out);
}

void enumerate_admissible(const CabledArcGraph& g, const std::function<void(const std::vector<int>&)>& out) {
  std::vector<std::pair<int, int>> es;
  for (auto& e : g.edges) es.push_back({g.vertex(e.src, e.src_sheet), g.vertex(e.dst, e.dst_sheet)});
  enumerate_cycle_covers(g.base.r * g.n, es, out);
}

Delta labelling_delta(const ArcGraph& g, const std::vector<int>& f) {
  Delta d;
  for (size_t e = 0; e < g.edges.size(); ++e) d.rot += f[e] * g.edges[e].rot;
  for (int v = 1; v <= g.r; ++v) {
    int b = g.blue_out[v];
    if (b < 0 || f[b] == 0) continue;
    int w = g.red_head[v];
    if (w > g.r) continue;
    int before = 0;
    for (int e : g.in_edges[w])
      if (g.edges[e].key < g.red_key[v]) before += f[e];
    d.exc += g.sign[v] * f[b] * before;
  }
  return d;
}

Delta subgraph_delta(const ArcGraph& g, const std::vector<int>& c) {
  std::vector<int> f(g.edges.size(), 0);
  for (int e : c) f[e] = 1;
  return labelling_delta(g, f);
}

Delta subgraph_delta(const CabledArcGraph& g, const std::vector<int>& c) {
  std::vector<int> f(g.base.edges.size(), 0);
  for (int e : c) f[g.edges[e].base] += 1;
  Delta d = labelling_delta(g.base, f);
  for (int a : c) {
    const CEdge& e = g.edges[a];
    if (e.blue) continue;
    int s = g.base.sign[e.src];
    for (int b : c) {
      if (a == b) continue;
      const CEdge& e2 = g.edges[b];
      int x = 0, y = 0;
      if ((!e2.blue || e2.src != e.src) && g.precedes(e2, e)) {
        if (s > 0 && e.dst_sheet < e2.dst_sheet) x = 1;
        if (s < 0 && e2.dst_sheet < e.dst_sheet) x = 1;
      }
      if (e2.blue && e2.src == e.src && g.precedes(e, e2)) y = 1;
      d.exc += s * (x + y);
    }
  }
  return d;
}

Laurent edge_product(const ArcGraph& g, const std::vector<int>& c) {
  Laurent p(1);
  for (int e : c) p = p * g.edges[e].w;
  return p;
}

Laurent edge_product(const CabledArcGraph& g, const std::vector<int>& c) {
  Laurent p(1);
  for (int e : c) p = p * g.edges[e].w;
  return p;
}

}  // namespace kf
