#include "knotflow/flows.hpp"

#include <algorithm>
#include <map>

namespace kf {

void enumerate_flows(const ArcGraph& g, int n, const std::function<void(const Flow&)>& out) {
  if (n < 0) throw InvalidArgs("enumerate_flows: n < 0");
  std::vector<int> reds;
  for (int e = 0; e < int(g.edges.size()); ++e)
    if (!g.edges[e].blue) reds.push_back(e);
  // choose red values, blue values then follow along the blue path
  std::vector<int> val(reds.size(), 0);
  Flow f(g.edges.size(), 0);
  std::vector<int> red_in(g.r + 2, 0);
  while (true) {
    std::fill(f.begin(), f.end(), 0);
    std::fill(red_in.begin(), red_in.end(), 0);
    for (size_t k = 0; k < reds.size(); ++k) {
      f[reds[k]] = val[k];
      red_in[g.edges[reds[k]].dst] += val[k];
    }
    bool ok = true;
    int carried = 0;
    for (int v = 1; v <= g.r && ok; ++v) {
      int fv = carried + red_in[v];
      int ro = g.red_out[v] >= 0 ? f[g.red_out[v]] : 0;
      int b = fv - ro;
      if (fv > n || b < 0 || (g.blue_out[v] < 0 && b != 0)) ok = false;
      if (g.blue_out[v] >= 0) f[g.blue_out[v]] = b;
      carried = g.blue_out[v] >= 0 ? b : 0;
    }
    if (ok) out(f);
    size_t k = 0;
    while (k < val.size() && val[k] == n) val[k++] = 0;
    if (k == val.size()) break;
    ++val[k];
  }
}

std::vector<Flow> all_flows(const ArcGraph& g, int n) {
  std::vector<Flow> v;
  enumerate_flows(g, n, [&](const Flow& f) { v.push_back(f); });
  return v;
}

bool is_flow(const ArcGraph& g, const Flow& f) {
  std::vector<int> in(g.r + 1, 0), out(g.r + 1, 0);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (f[e] < 0) return false;
    out[g.edges[e].src] += f[e];
    in[g.edges[e].dst] += f[e];
  }
  return in == out;
}

int throughput(const ArcGraph& g, const Flow& f, int v) {
  int s = 0;
  if (g.blue_out[v] >= 0) s += f[g.blue_out[v]];
  if (g.red_out[v] >= 0) s += f[g.red_out[v]];
  return s;
}

mpz_class flow_mult(const ArcGraph& g, const Flow& f) {
  std::vector<std::vector<int>> outs(g.r + 1);
  for (size_t e = 0; e < g.edges.size(); ++e) outs[g.edges[e].src].push_back(f[e]);
  mpz_class m = 1;
  for (int v = 1; v <= g.r; ++v) {
    int tot = 0;
    for (int x : outs[v]) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), tot + x, x);
      m *= b;
      tot += x;
    }
  }
  return m;
}

Laurent flow_mult_q(const ArcGraph& g, const Flow& f) {
  Laurent m(1);
  for (int v = 1; v <= g.r; ++v) {
    int fb = g.blue_out[v] >= 0 ? f[g.blue_out[v]] : 0;
    m = m * qbinom(throughput(g, f, v), fb, g.sign[v]);
  }
  return m;
}

Delta flow_delta(const ArcGraph& g, const Flow& f) { return labelling_delta(g, f); }

Laurent flow_weight(const ArcGraph& g, const Flow& f) {
  Laurent w(1);
  for (size_t e = 0; e < g.edges.size(); ++e) w = w * g.edges[e].w.pow(f[e]);
  return w;
}

std::vector<RedCopy> red_copies(const ArcGraph& g, const Flow& f) {
  std::vector<RedCopy> F;
  for (int v = 1; v <= g.r; ++v)
    for (int e : g.in_edges[v])
      if (!g.edges[e].blue)
        for (int c = 0; c < f[e]; ++c) F.push_back({e, c, v});
  return F;
}

int pset_size(const ArcGraph& g, const Flow& f, const RedCopy& x) {
  int key = g.edges[x.edge].key, s = x.copy;
  for (int e : g.in_edges[x.head])
    if (g.edges[e].key < key) s += f[e];
  return s;
}

void enumerate_sortings(const ArcGraph& g, const Flow& f, const std::function<void(const Sorting&)>& out) {
  std::vector<RedCopy> F = red_copies(g, f);
  Sorting C(g.r + 1);
  std::function<void(int)> rec = [&](int i) {
    if (i > g.r) {
      out(C);
      return;
    }
    std::vector<int> pool = C[i - 1];
    for (int x = 0; x < int(F.size()); ++x)
      if (F[x].head == i) pool.push_back(x);
    std::sort(pool.begin(), pool.end());
    int k = g.blue_out[i] >= 0 ? f[g.blue_out[i]] : 0;
    if (k > int(pool.size())) return;
    // k-subsets of pool in lexicographic order
    std::vector<int> idx(k);
    for (int a = 0; a < k; ++a) idx[a] = a;
    while (true) {
      C[i].clear();
      for (int a : idx) C[i].push_back(pool[a]);
      rec(i + 1);
      int a = k - 1;
      while (a >= 0 && idx[a] == int(pool.size()) - k + a) --a;
      if (a < 0) break;
      ++idx[a];
      for (int b = a + 1; b < k; ++b) idx[b] = idx[b - 1] + 1;
    }
    C[i].clear();
  };
  rec(1);
}

static bool contains(const std::vector<int>& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

Laurent nsorting_weight(const NSortingData& s, const std::vector<int>& v) {
  const ArcGraph& g = s.g;
  int e2 = 0;
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (g.edges[e].blue) e2 -= 2 * g.sign[g.edges[e].src] * s.n * s.f[e];
  Laurent w = Laurent::mono2(e2);
  const Laurent one_minus_t = 1 - Laurent::mono(1), one_minus_ti = 1 - Laurent::mono(-1);
  for (size_t x = 0; x < s.F.size(); ++x) {
    int sg = g.sign[g.edges[s.F[x].edge].src];
    if (sg < 0)
      w = w * Laurent::mono(v[x]) * one_minus_t;
    else
      w = w * Laurent::mono(-(s.n - 1) + v[x]) * one_minus_ti;
  }
  return w;
}

// smallest l >= h with copy x not in C_l
static int exit_vertex(const Sorting& C, int x, int h) {
  int l = h;
  while (l < int(C.size()) && contains(C[l], x)) ++l;
  return l;
}

int nsorting_exc(const NSortingData& s, const Sorting& C, const std::vector<int>& v) {
  const ArcGraph& g = s.g;
  int tot = 0;
  for (int x = 0; x < int(s.F.size()); ++x) {
    const RedCopy& cx = s.F[x];
    int h = cx.head, key = g.edges[cx.edge].key;
    int def1 = 0;
    for (int y = 0; y < int(s.F.size()); ++y) {
      const RedCopy& cy = s.F[y];
      if (cy.head != h || v[y] >= v[x]) continue;
      int ky = g.edges[cy.edge].key;
      if (ky < key || (cy.edge == cx.edge && cy.copy < cx.copy)) ++def1;
    }
    for (int y : C[h - 1])
      if (v[y] < v[x]) ++def1;
    int d1 = g.sign[g.edges[cx.edge].src] > 0 ? pset_size(g, s.f, cx) - def1 : -def1;
    int d = exit_vertex(C, x, h);
    if (d > g.r) throw NotAdmissible("copy never leaves the blue path");
    int def2 = 0;
    for (int y : C[d])
      if (v[y] < v[x]) ++def2;
    int d2 = g.sign[d] > 0 ? int(C[d].size()) - def2 : -def2;
    tot += d1 + d2;
  }
  return tot;
}

bool nsorting_admissible(const NSortingData& s, const Sorting& C, const std::vector<int>& v) {
  for (int a = 0; a < int(s.F.size()); ++a)
    for (int b = 0; b < int(s.F.size()); ++b) {
      if (a == b || v[a] != v[b]) continue;
      int i = s.F[a].head, j = s.F[b].head;
      if (j < i) continue;
      bool left = false;
      for (int l = i; l < j && !left; ++l) left = !contains(C[l], a);
      if (!left) return false;
    }
  return true;
}

void enumerate_n_sortings(const ArcGraph& g, const Flow& f, int n, bool admissible_only,
                          const std::function<void(const Sorting&, const std::vector<int>&)>& out) {
  if (n < 1) throw InvalidArgs("enumerate_n_sortings: n < 1");
  std::vector<RedCopy> F = red_copies(g, f);
  NSortingData sd{g, f, F, n};
  enumerate_sortings(g, f, [&](const Sorting& C) {
    std::vector<int> v(F.size(), 0);
    while (true) {
      if (!admissible_only || nsorting_admissible(sd, C, v)) out(C, v);
      size_t k = 0;
      while (k < v.size() && v[k] == n - 1) v[k++] = 0;
      if (k == v.size()) break;
      ++v[k];
    }
  });
}

std::vector<int> phi_lift(const CabledArcGraph& cg, const Flow& f, const Sorting& C, const std::vector<int>& v) {
  const ArcGraph& g = cg.base;
  std::vector<RedCopy> F = red_copies(g, f);
  NSortingData sd{g, f, F, cg.n};
  if (!nsorting_admissible(sd, C, v)) throw NotAdmissible("phi_lift needs an admissible n-sorting");
  std::vector<int> S;
  for (int i = 1; i <= g.r; ++i) {
    for (int x : C[i]) S.push_back(cg.index(g.blue_out[i], v[x] + 1, v[x] + 1));
    std::vector<int> exits;
    for (int x : C[i - 1])
      if (!contains(C[i], x)) exits.push_back(v[x] + 1);
    for (int x = 0; x < int(F.size()); ++x)
      if (F[x].head == i && !contains(C[i], x)) exits.push_back(v[x] + 1);
    std::sort(exits.begin(), exits.end());
    if (g.sign[i] < 0) std::reverse(exits.begin(), exits.end());
    std::vector<int> copies;
    for (int x = 0; x < int(F.size()); ++x)
      if (F[x].edge == g.red_out[i]) copies.push_back(x);
    if (copies.size() != exits.size()) throw NotAdmissible("exit count does not match red flow");
    std::sort(copies.begin(), copies.end(), [&](int a, int b) { return F[a].copy < F[b].copy; });
    for (size_t k = 0; k < copies.size(); ++k)
      S.push_back(cg.index(g.red_out[i], exits[k], v[copies[k]] + 1));
  }
  std::sort(S.begin(), S.end());
  return S;
}

static void check_sizes(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || a.size() != b.size() || b[0] != 0) throw InvalidArgs("structure sizes: need |a| = |b| >= 1, b_1 = 0");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || b[i] < 0) throw InvalidArgs("structure sizes must be positive blocks");
    if (i > 0 && b[i] > a[i - 1] + b[i - 1]) throw InvalidArgs("structure sizes: b_i too large");
  }
}

mpz_class count_structures(const std::vector<int>& a, const std::vector<int>& b) {
  check_sizes(a, b);
  mpz_class c = 1;
  for (size_t i = 1; i < a.size(); ++i) {
    mpz_class x;
    mpz_bin_uiui(x.get_mpz_t(), a[i - 1] + b[i - 1], b[i]);
    c *= x;
  }
  return c;
}

Laurent structure_sum(const std::vector<int>& a, const std::vector<int>& b, int n) {
  check_sizes(a, b);
  const int l = int(a.size());
  int k = 0;
  std::vector<std::vector<int>> A(l);
  std::vector<int> block(1, -1);
  for (int x = 0; x < l; ++x)
    for (int p = 0; p < a[x]; ++p) {
      A[x].push_back(++k);
      block.push_back(x);
    }
  std::vector<std::vector<int>> B(l);
  Laurent total;
  auto in = [](const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); };
  auto evaluate = [&]() {
    std::vector<std::vector<int>> groups(l);
    for (int m = 0; m < l; ++m) {
      groups[m] = A[m];
      groups[m].insert(groups[m].end(), B[m].begin(), B[m].end());
    }
    std::vector<int> v(k + 1, 0);
    std::map<int, mpz_class> acc;
    std::function<void(int)> rec = [&](int i) {
      if (i > k) {
        for (auto& g : groups)
          for (size_t p = 0; p < g.size(); ++p)
            for (size_t q = p + 1; q < g.size(); ++q)
              if (v[g[p]] == v[g[q]]) return;
        int e = 0;
        for (int x = 1; x <= k; ++x) {
          int bx = block[x], def1 = 0, def2 = 0;
          for (int y : groups[bx])
            if (y < x && v[y] < v[x]) ++def1;
          int d = bx;
          while (d + 1 < l && in(B[d + 1], x)) ++d;
          if (d + 1 < l)
            for (int y : B[d + 1])
              if (v[y] < v[x]) ++def2;
          e += v[x] - def1 - def2;
        }
        acc[e] += 1;
        return;
      }
      for (int val = 0; val < n; ++val) {
        v[i] = val;
        rec(i + 1);
      }
    };
    rec(1);
    for (auto& [e, c] : acc) total += Laurent::mono(e, c);
  };
  std::function<void(int)> choose = [&](int i) {
    if (i == l) {
      evaluate();
      return;
    }
    std::vector<int> pool = A[i - 1];
    pool.insert(pool.end(), B[i - 1].begin(), B[i - 1].end());
    std::sort(pool.begin(), pool.end());
    int m = b[i];
    std::vector<int> idx(m);
    for (int p = 0; p < m; ++p) idx[p] = p;
    while (true) {
      B[i].clear();
      for (int p : idx) B[i].push_back(pool[p]);
      choose(i + 1);
      int p = m - 1;
      while (p >= 0 && idx[p] == int(pool.size()) - m + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < m; ++q) idx[q] = idx[q - 1] + 1;
    }
    B[i].clear();
  };
  choose(1);
  return total;
}

Laurent structure_product(const std::vector<int>& a, const std::vector<int>& b, int n) {
  check_sizes(a, b);
  Laurent p(1);
  for (size_t x = 0; x < a.size(); ++x)
    for (int q = 0; q < a[x]; ++q) {
      int m = b[x] + q;
      if (n - m <= 0) return Laurent();
      p = p * qint(n - m, 1);
    }
  for (size_t x = 0; x + 1 < a.size(); ++x) p = p * qbinom(a[x] + b[x], b[x + 1], -1);
  return p;
}

}  // namespace kf
