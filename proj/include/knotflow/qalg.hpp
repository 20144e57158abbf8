#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotflow/diagram.hpp"
#include "knotflow/flows.hpp"
#include "knotflow/poly.hpp"

namespace kf {

struct NonTerminating : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedWord : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One matrix entry: q^(-rot) times an indeterminate.
struct Generator {
  char kind = 'z';  // 'u', 'r', 'z', or 'a' for a generic symbol
  int sign = 0;
  int row = 0, col = 0;  // arc labels, 1-based
  int rot = 0;
  std::string str() const;  // u+_3, r-_1, z_2.3, a_1.2
};

// Rows and columns are labelled by arcs 1..r.  R and C list the labels in
// matrix order; for B_K both are the identity.
struct QMatrix {
  int r = 0;
  std::vector<int> R, C;
  std::vector<Generator> cells;  // cells[(i-1)*r + (j-1)]
  bool generic = false;          // symbols obey only the right-quantum relations

  const Generator& at(int i, int j) const { return cells[(i - 1) * r + (j - 1)]; }
  int cell(int i, int j) const { return (i - 1) * r + (j - 1); }
  std::vector<int> L() const;  // columns whose last non-z entry (in R order) is a u
};

QMatrix build_B(const Diagram& d);
QMatrix build_Bprime(const Diagram& d);
// r x r matrix of distinct symbols a_ij
QMatrix generic_matrix(int r);

// A word is a string of cell indices.
using Word = std::string;
using NCPoly = std::map<Word, Laurent>;

std::string render(const QMatrix& A, const NCPoly& p);

enum class Rules { Full, RightQuantum };
// which rewritable pair is rewritten first
enum class Strategy { Leftmost, Rightmost };

NCPoly nc_normalize(const QMatrix& A, const NCPoly& p, Rules rules = Rules::Full, long budget = 1000000,
                    Strategy strategy = Strategy::Leftmost);
bool is_canonical(const QMatrix& A, const Word& w);
NCPoly nc_multiply(const NCPoly& a, const NCPoly& b, int max_len);

// Positional: row slot k of the matrix paired with column slot k.
NCPoly det_q(const QMatrix& A, Rules rules = Rules::Full);
NCPoly ferm(const QMatrix& A, Rules rules = Rules::Full);
NCPoly qmm_term(const QMatrix& A, const std::vector<int>& m);  // G_A(m), unnormalized
NCPoly qmm_inverse(const QMatrix& A, int D, Rules rules = Rules::Full);
// ferm(A) * qmm_inverse(A, D) normalized and truncated at length D
NCPoly inverse_product(const QMatrix& A, int D, Rules rules = Rules::Full);

// Commuting specialization q = 1, u^s = t^-s, r^s = 1 - t^-s, z = 0.
Laurent commuting_eval(const QMatrix& A, const NCPoly& p);
Matrix commuting_matrix(const QMatrix& A);  // positional

// Arc pairing: m[a] counts both row a and column a (m[0] unused).
NCPoly qmm_term_arcs(const QMatrix& A, const std::vector<int>& m);

Laurent n_evaluate(const QMatrix& A, const NCPoly& p, int n);

// t^(n delta) times the n-evaluated inverse of Ferm(B'_K)
Laurent colored_jones_ferm(const Diagram& d, int n);

struct FlowCheck {
  Flow f;
  bool ok = false;
  std::string got, expected;
};
struct NoncReport {
  Laurent ferm, flow;
  std::string verdict;  // EQUAL / EQUAL_UP_TO_UNIT e k / MISMATCH ...
  std::vector<FlowCheck> flows;
  long flows_ok = 0;
};
NoncReport verify_nonc(const Diagram& d, int n, int D = -1);

}  // namespace kf
