#pragma once

#include <functional>
#include <vector>

#include "knotflow/diagram.hpp"
#include "knotflow/poly.hpp"

namespace kf {

struct Edge {
  int src, dst;
  bool blue;
  int rot;
  int key;  // position in the incoming order at dst (blue is -1)
  Laurent w;
};

// Long-knot arc graph on vertices 1..r.
struct ArcGraph {
  int r = 0;
  std::vector<int> sign;       // sign[v]
  std::vector<Edge> edges;
  std::vector<int> blue_out;   // edge index or -1
  std::vector<int> red_out;    // edge index or -1 (deleted when the head is r+1)
  std::vector<int> red_head;   // over(v), may be r+1
  std::vector<int> red_key;    // incoming-order key of e_v^r, also when deleted
  std::vector<int> blue_in;    // edge index or -1
  std::vector<std::vector<int>> in_edges;  // sorted by key
};

ArcGraph build_arc_graph(const Diagram& d);

using Matrix = std::vector<std::vector<Laurent>>;
Matrix full_weight_matrix(const Diagram& d);  // W on all r+1 arcs
Matrix weight_matrix(const ArcGraph& g);      // W_K

struct CEdge {
  int src, dst;          // base vertices
  int src_sheet, dst_sheet;  // 1..n
  int base;              // base edge index
  bool blue;
  int rot;
  Laurent w;
};

struct CabledArcGraph {
  int n = 1;
  ArcGraph base;
  std::vector<CEdge> edges;
  int vertex(int v, int sheet) const { return (v - 1) * n + sheet - 1; }
  int index(int base_edge, int src_sheet, int dst_sheet) const;
  // e precedes e2 in the order on lifts
  bool precedes(const CEdge& e, const CEdge& e2) const;

 private:
  friend CabledArcGraph cable_graph(const ArcGraph&, int);
  std::vector<int> first_;  // first cabled edge of each base edge
};

CabledArcGraph cable_graph(const ArcGraph& g, int n);

// Vertex-disjoint unions of directed cycles (including the empty one).
void enumerate_cycle_covers(int nv, const std::vector<std::pair<int, int>>& edges,
                            const std::function<void(const std::vector<int>&)>& out);
void enumerate_admissible(const ArcGraph& g, const std::function<void(const std::vector<int>&)>& out);
void enumerate_admissible(const CabledArcGraph& g, const std::function<void(const std::vector<int>&)>& out);

struct Delta {
  int exc = 0, rot = 0;
  int delta() const { return exc - rot; }
  bool operator==(const Delta&) const = default;
};
// exc/rot of a non-negative edge labelling of g (one value per edge)
Delta labelling_delta(const ArcGraph& g, const std::vector<int>& f);
Delta subgraph_delta(const ArcGraph& g, const std::vector<int>& c);
Delta subgraph_delta(const CabledArcGraph& g, const std::vector<int>& c);

Laurent edge_product(const ArcGraph& g, const std::vector<int>& c);
Laurent edge_product(const CabledArcGraph& g, const std::vector<int>& c);

}  // namespace kf
