#pragma once

#include <functional>
#include <vector>

#include "knotflow/arcgraph.hpp"

namespace kf {

struct NotAdmissible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Flow = std::vector<int>;  // one value per edge of the arc graph

// All flows with throughput f(v) <= n at every vertex.
void enumerate_flows(const ArcGraph& g, int n, const std::function<void(const Flow&)>& out);
std::vector<Flow> all_flows(const ArcGraph& g, int n);
bool is_flow(const ArcGraph& g, const Flow& f);

int throughput(const ArcGraph& g, const Flow& f, int v);
mpz_class flow_mult(const ArcGraph& g, const Flow& f);
Laurent flow_mult_q(const ArcGraph& g, const Flow& f);
Delta flow_delta(const ArcGraph& g, const Flow& f);
Laurent flow_weight(const ArcGraph& g, const Flow& f);  // product of w(e)^f(e)

// Copies of red edges, ordered by head, then incoming order, then copy index.
struct RedCopy {
  int edge;
  int copy;  // 0-based
  int head;
};
std::vector<RedCopy> red_copies(const ArcGraph& g, const Flow& f);
int pset_size(const ArcGraph& g, const Flow& f, const RedCopy& x);

// C[i] for i = 1..r (C[0] empty), each a sorted list of indices into the copy list.
using Sorting = std::vector<std::vector<int>>;

void enumerate_sortings(const ArcGraph& g, const Flow& f, const std::function<void(const Sorting&)>& out);

struct NSortingData {
  const ArcGraph& g;
  const Flow& f;
  const std::vector<RedCopy>& F;
  int n;
};
Laurent nsorting_weight(const NSortingData& s, const std::vector<int>& v);
int nsorting_exc(const NSortingData& s, const Sorting& C, const std::vector<int>& v);
bool nsorting_admissible(const NSortingData& s, const Sorting& C, const std::vector<int>& v);

// (C, v) pairs with v in {0..n-1}^F, optionally filtered by admissibility
void enumerate_n_sortings(const ArcGraph& g, const Flow& f, int n, bool admissible_only,
                          const std::function<void(const Sorting&, const std::vector<int>&)>& out);

// Lift of an admissible n-sorting to the cabled graph (sorted edge indices).
std::vector<int> phi_lift(const CabledArcGraph& cg, const Flow& f, const Sorting& C, const std::vector<int>& v);

// k-structures with block sizes a and B-sizes b (b[0] = 0)
mpz_class count_structures(const std::vector<int>& a, const std::vector<int>& b);
Laurent structure_sum(const std::vector<int>& a, const std::vector<int>& b, int n);
Laurent structure_product(const std::vector<int>& a, const std::vector<int>& b, int n);

}  // namespace kf
