#pragma once

#include "sginv/diagram.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sginv {

// Vertex-labeled multigraph (vertices 0..vertex_count-1) with loops, plus a
// count of free circles.
struct AbstractGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // endpoints stored with first <= second
  int free_loops = 0;

  void add_edge(int u, int v);
  bool is_loop(std::size_t e) const { return edges[e].first == edges[e].second; }
  friend bool operator==(const AbstractGraph&, const AbstractGraph&) = default;
};

// Requires a crossing-free diagram.
AbstractGraph to_abstract_graph(const Diagram& d);

AbstractGraph delete_edge(const AbstractGraph& g, std::size_t edge);
// Merges the endpoints of a nonloop edge; throws on loops.
AbstractGraph contract_edge(const AbstractGraph& g, std::size_t edge);

// Connected components over the vertices; free loops are not included.
std::vector<AbstractGraph> vertex_components(const AbstractGraph& g);

// Relabels vertices by perm (old -> new) and reorders edges by edge_order.
AbstractGraph relabel(const AbstractGraph& g, const std::vector<int>& perm, const std::vector<std::size_t>& edge_order);

// Isomorphism-invariant string, complete for multigraphs: equal iff isomorphic.
std::string canonical_certificate(const AbstractGraph& g);

}  // namespace sginv
