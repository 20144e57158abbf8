#include "knotflow/zeta.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <unordered_map>
#include <stdexcept>

namespace kf {

int mono_degree(const MultiPoly::Mono& m) {
  int d = 0;
  for (unsigned char c : m) d += c;
  return d;
}

MultiPoly MultiPoly::one(int nvars, int D) {
  MultiPoly p(nvars, D);
  p.add(Mono(nvars, '\0'), 1);
  return p;
}

MultiPoly MultiPoly::var(int nvars, int D, int i) {
  MultiPoly p(nvars, D);
  Mono m(nvars, '\0');
  m[i] = 1;
  p.add(m, 1);
  return p;
}

void MultiPoly::add(const Mono& m, const mpz_class& c) {
  if (c == 0 || mono_degree(m) > D_) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else if ((it->second += c) == 0) {
    t_.erase(it);
  }
}

MultiPoly MultiPoly::part(int deg) const {
  MultiPoly p(n_, D_);
  for (auto& [m, c] : t_)
    if (mono_degree(m) == deg) p.t_.emplace(m, c);
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (auto& [m, c] : o.t_) add(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (auto& [m, c] : o.t_) add(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  MultiPoly out(a.n_, std::min(a.D_, b.D_));
  std::vector<std::pair<const MultiPoly::Mono*, int>> bs;
  for (auto& [m, c] : b.t_) bs.push_back({&m, mono_degree(m)});
  std::unordered_map<MultiPoly::Mono, mpz_class> acc;
  MultiPoly::Mono m;
  for (auto& [ma, ca] : a.t_) {
    int da = mono_degree(ma);
    size_t k = 0;
    for (auto& [mb, cb] : b.t_) {
      if (da + bs[k++].second > out.D_) continue;
      m = ma;
      for (int i = 0; i < a.n_; ++i) m[i] = char(m[i] + mb[i]);
      acc[m] += ca * cb;
    }
  }
  for (auto& [mm, c] : acc)
    if (c != 0) out.t_.emplace(mm, std::move(c));
  return out;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::vector<std::pair<int, const Mono*>> order;
  for (auto& [m, c] : t_) order.push_back({mono_degree(m), &m});
  std::stable_sort(order.begin(), order.end(), [](auto& x, auto& y) {
    return x.first != y.first ? x.first < y.first : *x.second > *y.second;
  });
  std::string s;
  for (auto& [d, m] : order) {
    const mpz_class& c = t_.at(*m);
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    mpz_class a = abs(c);
    std::string body;
    for (int i = 0; i < n_; ++i) {
      int e = (unsigned char)(*m)[i];
      if (!e) continue;
      if (!body.empty()) body += " ";
      body += i < int(names.size()) ? names[i] : "b" + std::to_string(i);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) s += a.get_str();
    else if (a == 1) s += body;
    else s += a.get_str() + " " + body;
  }
  return s;
}

void WeightedDigraph::check() const {
  for (auto& [a, b] : edges)
    if (a < 0 || b < 0 || a >= nv || b >= nv) throw std::invalid_argument("digraph: edge endpoint out of range");
  if (edges.size() > 255) throw std::invalid_argument("digraph: too many edges");
}

static const std::vector<mpz_class>& factorials() {
  static const std::vector<mpz_class> f = [] {
    std::vector<mpz_class> v(128);
    v[0] = 1;
    for (int i = 1; i < 128; ++i) v[i] = v[i - 1] * i;
    return v;
  }();
  return f;
}

MultiPoly zeta_flow_sum(const WeightedDigraph& g, int D) {
  g.check();
  if (D < 0) throw std::invalid_argument("zeta_flow_sum: D < 0");
  const int E = int(g.edges.size());
  const auto& fact = factorials();
  MultiPoly out(E, D);
  // edges grouped by source; once a vertex's outgoing values are fixed its
  // inflow may not exceed them, and all deficits must fit in the budget left
  std::vector<int> order(E);
  for (int e = 0; e < E; ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.edges[a].first < g.edges[b].first; });
  std::vector<int> done_after(E, -1);  // vertex whose out edges end at position k
  for (int k = 0; k < E; ++k) {
    int v = g.edges[order[k]].first;
    if (k + 1 == E || g.edges[order[k + 1]].first != v) done_after[k] = v;
  }
  MultiPoly::Mono f(E, '\0');
  std::vector<int> in(g.nv, 0), out_(g.nv, 0);
  auto feasible = [&](int upto, int budget) {
    int deficit = 0;
    for (int u = 0; u <= upto; ++u) {
      if (in[u] > out_[u]) return false;
      deficit += out_[u] - in[u];
    }
    return deficit <= budget;
  };
  std::function<void(int, int)> rec = [&](int k, int budget) {
    if (k == E) {
      if (in != out_) return;
      mpz_class mult = 1;
      for (int v = 0; v < g.nv; ++v) mult *= fact[out_[v]];
      for (int e = 0; e < E; ++e) mult /= fact[(unsigned char)f[e]];
      out.add(f, mult);
      return;
    }
    int e = order[k];
    auto [a, b] = g.edges[e];
    for (int x = 0; x <= budget; ++x) {
      f[e] = char(x);
      out_[a] += x;
      in[b] += x;
      if (done_after[k] < 0 || feasible(done_after[k], budget - x)) rec(k + 1, budget - x);
      out_[a] -= x;
      in[b] -= x;
    }
    f[e] = 0;
  };
  rec(0, D);
  return out;
}

bool is_lyndon(const std::vector<int>& w) {
  if (w.empty()) return false;
  for (size_t k = 1; k < w.size(); ++k) {
    std::vector<int> rot(w.begin() + k, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + k);
    if (!(w < rot)) return false;
  }
  return true;
}

std::vector<std::vector<int>> nonperiodic_cycles(const WeightedDigraph& g, int L) {
  g.check();
  std::vector<std::vector<int>> out;
  const int E = int(g.edges.size());
  std::vector<int> walk;
  std::function<void()> rec = [&] {
    int head = g.edges[walk.back()].second;
    if (head == g.edges[walk[0]].first && is_lyndon(walk)) out.push_back(walk);
    if (int(walk.size()) == L) return;
    for (int e = walk[0]; e < E; ++e) {
      if (g.edges[e].first != head) continue;
      walk.push_back(e);
      rec();
      walk.pop_back();
    }
  };
  for (int e = 0; e < E && L > 0; ++e) {
    walk = {e};
    rec();
  }
  return out;
}

MultiPoly zeta_lyndon(const WeightedDigraph& g, int D) {
  if (D < 0) throw std::invalid_argument("zeta_lyndon: D < 0");
  const int E = int(g.edges.size());
  MultiPoly z = MultiPoly::one(E, D);
  for (auto& c : nonperiodic_cycles(g, D)) {
    // z <- z * (1 + x + x^2 + ...), x = beta(c), by repeated monomial shifts
    MultiPoly pw = z;
    for (int k = 1; k * int(c.size()) <= D; ++k) {
      MultiPoly next(E, D);
      for (auto& [m, coef] : pw.terms()) {
        MultiPoly::Mono s = m;
        for (int e : c) s[e] = char(s[e] + 1);
        next.add(s, coef);
      }
      z += next;
      pw = std::move(next);
    }
  }
  return z;
}

MultiPoly det_I_minus_B(const WeightedDigraph& g, int D) {
  g.check();
  const int n = g.nv, E = int(g.edges.size());
  if (n > 20) throw std::invalid_argument("det_I_minus_B: too many vertices");
  std::vector<std::vector<MultiPoly>> M(n, std::vector<MultiPoly>(n, MultiPoly(E, D)));
  for (int i = 0; i < n; ++i) M[i][i] = MultiPoly::one(E, D);
  for (int e = 0; e < E; ++e) M[g.edges[e].first][g.edges[e].second] -= MultiPoly::var(E, D, e);
  std::vector<MultiPoly> f(size_t(1) << n, MultiPoly(E, D));
  f[0] = MultiPoly::one(E, D);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int row = __builtin_popcount(mask) - 1;
    int above = 0;
    for (int c = n - 1; c >= 0; --c) {
      if (!(mask >> c & 1)) continue;
      if (!M[row][c].is_zero()) {
        MultiPoly x = M[row][c] * f[mask ^ (1u << c)];
        if (above % 2) f[mask] -= x; else f[mask] += x;
      }
      ++above;
    }
  }
  return f[(1u << n) - 1];
}

bool fz_identity_check(const WeightedDigraph& g, int D) {
  int E = int(g.edges.size());
  return det_I_minus_B(g, D) * zeta_flow_sum(g, D) == MultiPoly::one(E, D);
}

std::vector<std::vector<int>> lyndon_factorization(const std::vector<int>& w) {
  // Duval
  std::vector<std::vector<int>> out;
  size_t i = 0, n = w.size();
  while (i < n) {
    size_t j = i + 1, k = i;
    while (j < n && w[k] <= w[j]) {
      k = w[k] < w[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.emplace_back(w.begin() + i, w.begin() + i + (j - k));
      i += j - k;
    }
  }
  return out;
}

static void check_word(int r, const std::vector<int>& w) {
  for (int x : w)
    if (x < 1 || x > r) throw std::invalid_argument("word letter out of range");
}

MultiPoly::Mono beta_circ(int r, const std::vector<int>& w) {
  check_word(r, w);
  MultiPoly::Mono m(r * r, '\0');
  for (size_t k = 0; k < w.size(); ++k) {
    int a = w[k], b = w[(k + 1) % w.size()];
    ++m[(a - 1) * r + (b - 1)];
  }
  return m;
}

MultiPoly::Mono beta_dec(int r, const std::vector<int>& w) {
  MultiPoly::Mono m(r * r, '\0');
  for (auto& l : lyndon_factorization(w)) {
    auto c = beta_circ(r, l);
    for (int i = 0; i < r * r; ++i) m[i] = char(m[i] + c[i]);
  }
  return m;
}

MultiPoly::Mono beta_vert(int r, const std::vector<int>& w) {
  check_word(r, w);
  std::vector<int> s = w;
  std::sort(s.begin(), s.end());
  MultiPoly::Mono m(r * r, '\0');
  for (size_t k = 0; k < w.size(); ++k) ++m[(s[k] - 1) * r + (w[k] - 1)];
  return m;
}

WeightedDigraph complete_digraph(int r) {
  WeightedDigraph g;
  g.nv = r;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g.edges.push_back({i, j});
  return g;
}

std::vector<std::string> complete_names(int r) {
  std::vector<std::string> v;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) v.push_back("b" + std::to_string(i) + std::to_string(j));
  return v;
}

WordMaps word_maps(int r, const std::vector<int>& w) {
  return {lyndon_factorization(w), beta_dec(r, w), beta_vert(r, w)};
}

WeightedDigraph random_digraph(uint64_t seed, int nv, int max_edges) {
  std::mt19937_64 rng(seed);
  WeightedDigraph g;
  g.nv = nv;
  int E = std::uniform_int_distribution<int>(0, max_edges)(rng);
  std::uniform_int_distribution<int> v(0, nv - 1);
  for (int e = 0; e < E; ++e) {
    int a = v(rng);
    g.edges.push_back({a, v(rng)});
  }
  return g;
}

}  // namespace kf
