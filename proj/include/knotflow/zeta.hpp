#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kf {

// Commuting polynomial in variables b_0..b_{nvars-1}, truncated above total degree D.
class MultiPoly {
 public:
  using Mono = std::string;  // exponent per variable, one byte each

  MultiPoly(int nvars, int D) : n_(nvars), D_(D) {}
  static MultiPoly one(int nvars, int D);
  static MultiPoly var(int nvars, int D, int i);

  int nvars() const { return n_; }
  int degree_bound() const { return D_; }
  const std::map<Mono, mpz_class>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  MultiPoly part(int deg) const;  // homogeneous component

  void add(const Mono& m, const mpz_class& c);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly& o) const { return t_ == o.t_; }

  // names[i] for variable i; default b0, b1, ...
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int n_, D_;
  std::map<Mono, mpz_class> t_;
};

int mono_degree(const MultiPoly::Mono& m);

struct WeightedDigraph {
  int nv = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based endpoints; edge e has weight b_e
  void check() const;
};

MultiPoly zeta_flow_sum(const WeightedDigraph& g, int D);
MultiPoly zeta_lyndon(const WeightedDigraph& g, int D);
MultiPoly det_I_minus_B(const WeightedDigraph& g, int D);
bool fz_identity_check(const WeightedDigraph& g, int D);

// Nonperiodic cycles as Lyndon edge sequences of length <= L.
std::vector<std::vector<int>> nonperiodic_cycles(const WeightedDigraph& g, int L);

// Words over letters 1..r; variables of K_r are b_ij at index (i-1)*r + (j-1).
std::vector<std::vector<int>> lyndon_factorization(const std::vector<int>& w);
bool is_lyndon(const std::vector<int>& w);
MultiPoly::Mono beta_circ(int r, const std::vector<int>& w);
MultiPoly::Mono beta_dec(int r, const std::vector<int>& w);
MultiPoly::Mono beta_vert(int r, const std::vector<int>& w);
WeightedDigraph complete_digraph(int r);
std::vector<std::string> complete_names(int r);  // b12, b21, ...

struct WordMaps {
  std::vector<std::vector<int>> factors;
  MultiPoly::Mono dec, vert;
};
WordMaps word_maps(int r, const std::vector<int>& w);

// random digraph with nv vertices and up to max_edges edges (loops and parallels allowed)
WeightedDigraph random_digraph(uint64_t seed, int nv, int max_edges);

}  // namespace kf
