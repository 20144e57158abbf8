#include "knotflow/qalg.hpp"

#include <algorithm>
#include <numeric>
#include <functional>

#include "knotflow/invariants.hpp"

namespace kf {

std::string Generator::str() const {
  std::string ij = std::to_string(row) + "." + std::to_string(col);
  switch (kind) {
    case 'u':
    case 'r':
      return std::string(1, kind) + (sign > 0 ? "+" : "-") + "_" + std::to_string(row);
    case 'a':
      return "a_" + ij;
    default:
      return "z_" + ij;
  }
}

std::vector<int> QMatrix::L() const {
  std::vector<int> out;
  for (int j = 1; j <= r; ++j) {
    std::vector<int> nz;
    for (int i : R)
      if (at(i, j).kind != 'z') nz.push_back(i);
    if (nz.empty() || at(nz.back(), j).kind != 'u') continue;
    if (nz.size() == 1 || at(nz.front(), j).kind != 'u') out.push_back(j);
  }
  return out;
}

static int sum_from(const std::vector<int>& v, size_t k) {
  return std::accumulate(v.begin() + std::min(k, v.size()), v.end(), 0);
}

QMatrix build_B(const Diagram& d) {
  require_valid(d);
  QMatrix A;
  int r = A.r = std::max(d.N - 1, 0);
  for (int i = 1; i <= r; ++i) A.R.push_back(i);
  A.C = A.R;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      Generator g;
      g.row = i;
      g.col = j;
      if (j == i + 1) {
        g.kind = 'u';
        g.sign = d.sign[i];
        g.rot = sum_from(d.rot[j], 0);
      } else if (d.over[i] == j) {
        const auto& oo = d.overorder[j];
        g.kind = 'r';
        g.sign = d.sign[i];
        g.rot = sum_from(d.rot[j], std::find(oo.begin(), oo.end(), i) - oo.begin() + 1);
      }
      A.cells.push_back(g);
    }
  return A;
}

QMatrix build_Bprime(const Diagram& d) {
  QMatrix A = build_B(d);
  const int N = d.N, r = A.r;
  if (r == 0) return A;
  auto T = [&](int i) {
    std::vector<int> v;
    for (int k : d.overorder[i])
      if (k <= r) v.push_back(k);
    return v;
  };
  auto S = [&](int i) {
    std::vector<int> v;
    for (int k : d.overorder[i])
      if (k % N + 1 <= r) v.push_back(k % N + 1);
    return v;
  };
  std::vector<int> Sall;
  for (int i = N; i >= 1; --i) {
    auto b = S(i);
    Sall.insert(Sall.end(), b.rbegin(), b.rend());
  }
  std::vector<int> pos(N + 2, -1);
  for (int p = 0; p < int(Sall.size()); ++p) pos[Sall[p]] = p;
  auto span = [&](int i, bool last) {
    int best = last ? -1 : 1 << 30;
    for (int a : S(i)) best = last ? std::max(best, pos[a]) : std::min(best, pos[a]);
    return best;
  };
  A.R.clear();
  A.C.clear();
  for (int i = 1; i <= N; ++i) {
    auto b = T(i);
    if (i <= r && pos[i] >= 0 && !S(i).empty() && pos[i] < span(i, false)) std::reverse(b.begin(), b.end());
    A.R.insert(A.R.end(), b.begin(), b.end());
  }
  for (int i = N; i >= 1; --i) {
    auto b = S(i);
    std::reverse(b.begin(), b.end());
    if (i <= r && pos[i] >= 0 && !S(i).empty() && pos[i] > span(i, true)) std::reverse(b.begin(), b.end());
    A.C.insert(A.C.end(), b.begin(), b.end());
  }
  return A;
}

QMatrix generic_matrix(int r) {
  QMatrix A;
  A.r = r;
  A.generic = true;
  for (int i = 1; i <= r; ++i) A.R.push_back(i);
  A.C = A.R;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) A.cells.push_back({'a', 0, i, j, 0});
  return A;
}

// coefficient text and whether it carries a leading minus
static std::pair<std::string, bool> qstr(const Laurent& c) {
  auto& ts = c.terms();
  if (ts.size() == 1 && abs(ts[0].c) == 1) return {"q^" + half_str(ts[0].e2), ts[0].c < 0};
  std::string p = c.pretty();
  std::replace(p.begin(), p.end(), 't', 'q');
  return {"(" + p + ")", false};
}

std::string render(const QMatrix& A, const NCPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (auto& [w, c] : p) {
    auto [cs, neg] = qstr(c);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    out += cs + " ·";
    if (w.empty()) out += " 1";
    for (unsigned char x : w) out += " " + A.cells[x].str();
  }
  return out;
}

namespace {

struct Rewriter {
  const QMatrix& A;
  Rules rules;
  std::vector<int> Rp, Cp, key;

  Rewriter(const QMatrix& a, Rules ru) : A(a), rules(ru) {
    Rp.assign(A.r + 1, 0);
    Cp.assign(A.r + 1, 0);
    for (int k = 0; k < A.r; ++k) {
      Rp[A.R[k]] = k;
      Cp[A.C[k]] = k;
    }
    for (auto& g : A.cells) key.push_back(Cp[g.col] * A.r + Rp[g.row]);
  }
  const Generator& G(int c) const { return A.cells[c]; }
  bool rewritable(int x, int y) const {
    if (key[x] <= key[y]) return false;
    if (rules == Rules::Full) return true;
    const Generator &gx = G(x), &gy = G(y);
    return gx.col == gy.col || (gx.row != gy.row && Rp[gx.row] > Rp[gy.row]);
  }
  // x y with key(x) > key(y)
  template <class F>
  void swap(int x, int y, F&& emit) const {
    const Generator &gx = G(x), &gy = G(y);
    auto mk = [](int a, int b) { return std::string{char(a), char(b)}; };
    if (gx.row == gy.row) {
      bool neg = (gx.kind == 'u' && gx.sign < 0) || (gy.kind == 'u' && gy.sign < 0);
      emit(neg ? Laurent::mono(-2) : Laurent(1), mk(y, x));
      return;
    }
    if (gx.col == gy.col) {
      emit(Laurent::mono(1), mk(y, x));
      return;
    }
    if (Rp[gx.row] < Rp[gy.row]) {
      // b = x = (i, j'), c = y = (i', j); a = (i, j), d = (i', j')
      const Generator& a = A.at(gx.row, gy.col);
      const Generator& d = A.at(gy.row, gx.col);
      int e = -1;
      if (gy.kind == 'u' && d.kind == 'r') e += gy.sign;
      if (gx.kind == 'u' && a.kind == 'r') e += gx.sign;
      emit(Laurent::mono(e), mk(y, x));
      return;
    }
    // d = x = (i', j'), a = y = (i, j): da = ad - q^-1 cb + q bc
    int ip = gx.row, jp = gx.col, i = gy.row, j = gy.col;
    int c = A.cell(ip, j), b = A.cell(i, jp);
    int sc = gy.rot + gx.rot - G(b).rot - G(c).rot;
    emit(Laurent(1), mk(y, x));
    emit(-Laurent::mono(sc - 1), mk(c, b));
    emit(Laurent::mono(sc + 1), mk(b, c));
  }
};

}  // namespace

NCPoly nc_normalize(const QMatrix& A, const NCPoly& p, Rules rules, long budget, Strategy strategy) {
  Rewriter rw(A, rules);
  NCPoly out;
  std::vector<std::pair<Word, Laurent>> stack;
  // the step budget applies to each input word separately
  for (auto& input : p) {
    stack.assign(1, input);
    long steps = 0;
    while (!stack.empty()) {
      auto [w, c] = std::move(stack.back());
      stack.pop_back();
      if (c.is_zero()) continue;
      size_t pos = w.size();
      for (size_t k = 0; k + 1 < w.size(); ++k) {
        if (!rw.rewritable((unsigned char)w[k], (unsigned char)w[k + 1])) continue;
        pos = k;
        if (strategy == Strategy::Leftmost) break;
      }
      if (pos + 1 >= w.size()) {
        out[w] += c;
        continue;
      }
      if (++steps > budget) throw NonTerminating("nc_normalize: step budget exceeded");
      rw.swap((unsigned char)w[pos], (unsigned char)w[pos + 1], [&](const Laurent& k, const std::string& pair) {
        Word v = w;
        v.replace(pos, 2, pair);
        stack.emplace_back(std::move(v), c * k);
      });
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool is_canonical(const QMatrix& A, const Word& w) {
  Rewriter rw(A, Rules::Full);
  for (size_t p = 0; p + 1 < w.size(); ++p)
    if (rw.key[(unsigned char)w[p]] > rw.key[(unsigned char)w[p + 1]]) return false;
  return true;
}

NCPoly nc_multiply(const NCPoly& a, const NCPoly& b, int max_len) {
  NCPoly out;
  for (auto& [w1, c1] : a)
    for (auto& [w2, c2] : b)
      if (int(w1.size() + w2.size()) <= max_len) out[w1 + w2] += c1 * c2;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

static int inversions(const std::vector<int>& v) {
  int k = 0;
  for (size_t a = 0; a < v.size(); ++a)
    for (size_t b = a + 1; b < v.size(); ++b) k += v[a] > v[b];
  return k;
}

static Laurent rot_factor(const QMatrix& A, const Word& w) {
  int s = 0;
  for (unsigned char x : w) s += A.cells[x].rot;
  return Laurent::mono(-s);
}

// sum over permutations of the column slots J of (-q)^-inv times the word
static void det_terms(const QMatrix& A, std::vector<int> J, NCPoly& out, int sign) {
  std::vector<int> pi = J;
  do {
    int inv = inversions(pi);
    Word w;
    for (size_t c = 0; c < J.size(); ++c) w += char(A.cell(A.R[pi[c]], A.C[J[c]]));
    out[w] += Laurent::mono(-inv, (inv % 2 ? -1 : 1) * sign) * rot_factor(A, w);
  } while (std::next_permutation(pi.begin(), pi.end()));
}

NCPoly det_q(const QMatrix& A, Rules rules) {
  NCPoly out;
  std::vector<int> J(A.r);
  std::iota(J.begin(), J.end(), 0);
  det_terms(A, J, out, 1);
  return nc_normalize(A, out, rules);
}

NCPoly ferm(const QMatrix& A, Rules rules) {
  NCPoly out;
  for (unsigned mask = 0; mask < (1u << A.r); ++mask) {
    std::vector<int> J;
    for (int k = 0; k < A.r; ++k)
      if (mask >> k & 1) J.push_back(k);
    det_terms(A, J, out, J.size() % 2 ? -1 : 1);
  }
  return nc_normalize(A, out, rules);
}

// rows: row label per position; col_slots: allowed column labels with multiplicities
static NCPoly extract(const QMatrix& A, const std::vector<int>& rows, const std::vector<int>& col_label,
                      std::vector<int> cnt) {
  NCPoly res;
  std::vector<int> cols;
  Word w;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == rows.size()) {
      res[w] += Laurent::mono(inversions(cols)) * rot_factor(A, w);
      return;
    }
    for (size_t k = 0; k < col_label.size(); ++k) {
      if (!cnt[k]) continue;
      --cnt[k];
      cols.push_back(int(k));
      w.push_back(char(A.cell(rows[idx], col_label[k])));
      rec(idx + 1);
      w.pop_back();
      cols.pop_back();
      ++cnt[k];
    }
  };
  rec(0);
  return res;
}

NCPoly qmm_term(const QMatrix& A, const std::vector<int>& m) {
  if (int(m.size()) != A.r) throw InvalidArgs("qmm_term: wrong length");
  std::vector<int> rows;
  for (int k = 0; k < A.r; ++k) rows.insert(rows.end(), m[k], A.R[k]);
  return extract(A, rows, A.C, m);
}

NCPoly qmm_term_arcs(const QMatrix& A, const std::vector<int>& m) {
  if (int(m.size()) != A.r + 1) throw InvalidArgs("qmm_term_arcs: wrong length");
  std::vector<int> rows, cnt;
  for (int a : A.R) rows.insert(rows.end(), m[a], a);
  for (int a : A.C) cnt.push_back(m[a]);
  return extract(A, rows, A.C, cnt);
}

// all m in {0..hi}^r with sum <= D
static void for_each_m(int r, int hi, int D, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> m(r, 0);
  while (true) {
    if (std::accumulate(m.begin(), m.end(), 0) <= D) f(m);
    int k = 0;
    while (k < r && m[k] == hi) m[k++] = 0;
    if (k == r) return;
    ++m[k];
  }
}

NCPoly qmm_inverse(const QMatrix& A, int D, Rules rules) {
  if (D < 0) throw InvalidArgs("qmm_inverse: D < 0");
  NCPoly tot;
  for_each_m(A.r, D, D, [&](const std::vector<int>& m) {
    for (auto& [w, c] : qmm_term(A, m)) tot[w] += c;
  });
  return nc_normalize(A, tot, rules);
}

NCPoly inverse_product(const QMatrix& A, int D, Rules rules) {
  return nc_normalize(A, nc_multiply(ferm(A, rules), qmm_inverse(A, D, rules), D), rules);
}

static Laurent entry_value(const Generator& g) {
  switch (g.kind) {
    case 'u':
      return Laurent::mono(-g.sign);
    case 'r':
      return 1 - Laurent::mono(-g.sign);
    case 'z':
      return Laurent();
    default:
      throw InvalidArgs("commuting_eval: generic symbol");
  }
}

Laurent commuting_eval(const QMatrix& A, const NCPoly& p) {
  Laurent s;
  for (auto& [w, c] : p) {
    Laurent v(c.at_one().get_si());
    for (unsigned char x : w) v = v * entry_value(A.cells[x]);
    s += v;
  }
  return s;
}

Matrix commuting_matrix(const QMatrix& A) {
  Matrix M(A.r, std::vector<Laurent>(A.r));
  for (int k = 0; k < A.r; ++k)
    for (int l = 0; l < A.r; ++l) M[k][l] = entry_value(A.at(A.R[k], A.C[l]));
  return M;
}

Laurent n_evaluate(const QMatrix& A, const NCPoly& p, int n) {
  if (n < 1) throw InvalidArgs("n_evaluate: n < 1");
  std::vector<char> inL(A.r + 1, 0);
  for (int j : A.L()) inL[j] = 1;
  Laurent tot;
  for (auto& [w, c] : p) {
    bool zero = false;
    for (unsigned char x : w) zero |= A.cells[x].kind == 'z';
    if (zero) continue;
    Laurent val(1);
    for (int j = 1; j <= A.r; ++j) {
      std::vector<int> cw;
      for (unsigned char x : w)
        if (A.cells[x].col == j) cw.push_back(x);
      if (inL[j]) std::reverse(cw.begin(), cw.end());
      size_t k = 0;
      int p0 = 0;
      while (k < cw.size() && A.cells[cw[k]].kind == 'u') ++p0, ++k;
      if (p0) val = val * Laurent::mono(-A.cells[cw[0]].sign * p0 * n);
      int pre = p0;
      while (k < cw.size()) {
        const Generator& g = A.cells[cw[k]];
        if (g.kind != 'r') throw MalformedWord("n_evaluate: u in a non-extremal position");
        int run = 0;
        while (k < cw.size() && cw[k] == cw[k - run]) ++run, ++k;
        for (int jj = 0; jj < run; ++jj) val = val * (1 - Laurent::mono(-g.sign * (n - jj - pre)));
        pre += run;
      }
    }
    tot += c * val;
  }
  return tot;
}

static Laurent ferm_sum(const Diagram& d, const QMatrix& A, int n, int D) {
  Laurent tot;
  std::vector<int> m(A.r + 1, 0);
  for_each_m(A.r, n, D, [&](const std::vector<int>& mv) {
    std::copy(mv.begin(), mv.end(), m.begin() + 1);
    tot += n_evaluate(A, nc_normalize(A, qmm_term_arcs(A, m)), n);
  });
  return tot.shift2(diagram_stats(d, n).delta2);
}

Laurent colored_jones_ferm(const Diagram& d, int n) {
  if (n < 1) throw InvalidArgs("colored_jones_ferm: n < 1");
  QMatrix A = build_Bprime(d);
  return ferm_sum(d, A, n, A.r * n);
}

NoncReport verify_nonc(const Diagram& d, int n, int D) {
  if (n < 1) throw InvalidArgs("verify_nonc: n < 1");
  QMatrix A = build_Bprime(d);
  ArcGraph g = build_arc_graph(d);
  if (D < 0) D = A.r * n;
  NoncReport rep;
  rep.ferm = ferm_sum(d, A, n, D);
  rep.flow = colored_jones_flow(d, n);
  rep.verdict = compare(rep.ferm, rep.flow);
  Rewriter rw(A, Rules::Full);
  std::map<std::vector<int>, NCPoly> cache;
  enumerate_flows(g, n, [&](const Flow& f) {
    std::vector<int> m(A.r + 1, 0);
    for (int v = 1; v <= A.r; ++v) m[v] = throughput(g, f, v);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, qmm_term_arcs(A, m)).first;
    Word canon;
    for (size_t e = 0; e < g.edges.size(); ++e) canon.append(f[e], char(A.cell(g.edges[e].src, g.edges[e].dst)));
    std::sort(canon.begin(), canon.end(), [&](char a, char b) {
      return rw.key[(unsigned char)a] < rw.key[(unsigned char)b];
    });
    Word ms = canon;
    std::sort(ms.begin(), ms.end());
    NCPoly restricted;
    for (auto& [w, c] : it->second) {
      Word s = w;
      std::sort(s.begin(), s.end());
      if (s == ms) restricted[w] = c;
    }
    NCPoly got = nc_normalize(A, restricted);
    Delta dl = flow_delta(g, f);
    NCPoly expected{{canon, flow_mult_q(g, f).shift(dl.delta())}};
    FlowCheck fc{f, got == expected, render(A, got), render(A, expected)};
    rep.flows_ok += fc.ok;
    rep.flows.push_back(std::move(fc));
  });
  return rep;
}

}  // namespace kf
