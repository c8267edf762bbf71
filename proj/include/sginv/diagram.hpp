#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sginv {

using SegmentId = int;

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Direction { In, Out };

struct Incidence {
  SegmentId segment = 0;
  Direction dir = Direction::In;
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

// Rigid vertex; incidences listed counterclockwise from a distinguished first.
struct VertexNode {
  int id = 0;
  std::vector<Incidence> incident;
  friend bool operator==(const VertexNode&, const VertexNode&) = default;
};

enum Slot : int { OverIn = 0, OverOut = 1, UnderIn = 2, UnderOut = 3 };

struct Crossing {
  SegmentId over_in = 0;
  SegmentId over_out = 0;
  SegmentId under_in = 0;
  SegmentId under_out = 0;
  int sign = 1;

  SegmentId slot(int s) const;
  SegmentId& slot(int s);
  // Counterclockwise slot order around the crossing, starting at OverIn.
  // +1: (over_in, under_out, over_out, under_in); -1: (over_in, under_in,
  // over_out, under_out).
  std::array<int, 4> ccw_slots() const;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Diagram {
  std::vector<VertexNode> vertices;
  std::vector<Crossing> crossings;
  int free_loops = 0;

  bool empty() const { return vertices.empty() && crossings.empty() && free_loops == 0; }
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

// An attachment point for one end of a segment.
struct Port {
  enum class Kind { Vertex, Crossing };
  Kind kind = Kind::Vertex;
  int node = 0;  // index into vertices or crossings
  int slot = 0;  // incidence index or Slot
  friend auto operator<=>(const Port&, const Port&) = default;
};

bool is_head_port(const Diagram& d, const Port& p);
SegmentId segment_at(const Diagram& d, const Port& p);

// Where each segment's tail and head attach. Requires a valid diagram.
struct SegmentEnds {
  Port tail;
  Port head;
};
std::map<SegmentId, SegmentEnds> segment_ends(const Diagram& d);

struct Violation {
  std::string rule;
  std::string subject;
  friend bool operator==(const Violation&, const Violation&) = default;
};
std::string to_string(const Violation& v);

std::vector<Violation> validate(const Diagram& d);
void require_valid(const Diagram& d);

std::vector<SegmentId> segment_ids(const Diagram& d);  // sorted
SegmentId max_segment_id(const Diagram& d);            // -1 when none
int max_vertex_id(const Diagram& d);                   // -1 when none

struct ArcPartition {
  std::vector<std::vector<SegmentId>> arcs;  // each sorted; arcs ordered by least segment
  std::map<SegmentId, int> arc_of;
};
ArcPartition derive_arcs(const Diagram& d);

struct DiagramEdge {
  std::vector<SegmentId> segments;  // sorted
  std::optional<Port> tail;        // vertex port where the edge starts
  std::optional<Port> head;        // vertex port where the edge ends
  bool closed() const { return !tail.has_value(); }
};

struct EdgePartition {
  std::vector<DiagramEdge> edges;  // ordered by least segment; named e1, e2, ...
  std::map<SegmentId, int> edge_of;
  int free_loops = 0;
  int knot_components() const;
};
EdgePartition derive_edges(const Diagram& d);
std::string edge_name(int index);  // 0 -> "e1"

// Faces of the planar map given by the cyclic orders. A dart is a segment
// traversed forward (tail to head) or backward; every dart has its face on
// its left.
struct Dart {
  SegmentId segment = 0;
  bool forward = true;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};
struct FaceStructure {
  std::vector<std::vector<Dart>> faces;
  std::map<Dart, int> face_of;
};
FaceStructure faces(const Diagram& d);
// V - E + F over the connected pieces of the map: 2 per piece iff the cyclic
// orders are realizable in the plane. Free loops are excluded.
bool is_planar(const Diagram& d);

// Swaps over and under strands at every crossing.
Diagram mirror(const Diagram& d);

// Disjoint union with the second diagram's ids shifted past the first's.
Diagram disjoint_union(const Diagram& a, const Diagram& b);

}  // namespace sginv
