#pragma once

#include <string>
#include <vector>

#include "knotflow/arcgraph.hpp"
#include "knotflow/diagram.hpp"
#include "knotflow/flows.hpp"
#include "knotflow/poly.hpp"

namespace kf {

Laurent determinant(const Matrix& m);

struct AlexanderResult {
  Laurent value;  // symmetric, value(1) = 1 when reachable by a unit
  Laurent raw;    // det(I - W_K)
  bool normalized = false;
};
AlexanderResult alexander(const Diagram& d);

Laurent jones_arcsum(const Diagram& d);

// summand of the flow formula for one flow (without the global prefactor)
Laurent flow_term(const ArcGraph& g, const Flow& f, int n);
Laurent colored_jones_flow(const Diagram& d, int n);

struct CabledResult {
  Laurent value;      // prefactor t^(n*delta)
  Laurent quadratic;  // prefactor from the quadratic-in-n exponent
  Laurent sum;        // bare state sum
  long subgraphs = 0;
};
CabledResult colored_jones_cabled(const Diagram& d, int n);

Laurent colored_jones_sortings(const Diagram& d, int n);

struct RMatrixResult {
  Laurent jones;
  Laurent closed;       // V before dividing by q + 1/q, as a polynomial in t
  long states = 0;      // states with nonzero weight
  long rw_checked = 0;  // per-state weight identity checks
  long rw_failed = 0;
};
RMatrixResult rmatrix_jones(const Diagram& d);

struct MmrReport {
  std::vector<int> orders;
  int D = 0;
  Series limit;                             // 1/Delta at t = e^h
  std::vector<Series> values;               // J_n at t = e^(h/n)
  std::vector<std::vector<mpq_class>> err;  // |S_n[j] - limit[j]|
};
MmrReport mmr_report(const Diagram& d, const std::vector<int>& orders, int D);
// coefficients whose error fails to decrease strictly along the orders
// (an error that is already zero counts as converged)
std::vector<int> mmr_nonmonotone(const MmrReport& rep);

// "EQUAL", "EQUAL_UP_TO_UNIT e k" or "MISMATCH <difference>"
std::string compare(const Laurent& a, const Laurent& b);

struct VerifyLine {
  std::string text;
  bool mismatch = false;
};
std::vector<VerifyLine> verify(const Diagram& d, int max_n, bool with_ferm);

}  // namespace kf
