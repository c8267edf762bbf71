#pragma once

#include "sginv/diagram.hpp"
#include "sginv/io.hpp"

#include <array>
#include <string>
#include <vector>

namespace sginv::testing {

// Closure of a braid on `strands` strands; letter +i crosses strand i over
// strand i+1 (1-based), -i the reverse.
Diagram braid_closure(int strands, const std::vector<int>& word);

using Point3 = std::array<double, 3>;

struct PolylineVertex {
  int id;
  Point3 at;
};
struct PolylineEdge {
  int from;  // vertex id
  int to;
  std::vector<Point3> via;
};

// Projects a piecewise-linear spatial graph onto the xy-plane (z decides
// over/under). Closed polylines in `loops` become vertex-free components.
Diagram project_polylines(const std::vector<PolylineVertex>& vertices, const std::vector<PolylineEdge>& edges,
                          const std::vector<std::vector<Point3>>& loops = {});

// Straight-edge embedding of the complete graph on the given points.
Diagram complete_graph_embedding(const std::vector<Point3>& points);

DiagramDocument load_fixture(const std::string& name);
Diagram fixture(const std::string& name);

// Names of every diagram fixture in the corpus.
std::vector<std::string> corpus_names();

}  // namespace sginv::testing
