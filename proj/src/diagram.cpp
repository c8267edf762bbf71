#include "sginv/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sginv {

namespace {

struct UnionFind {
  std::map<SegmentId, SegmentId> parent;
  SegmentId find(SegmentId s) {
    auto it = parent.find(s);
    if (it == parent.end()) {
      parent.emplace(s, s);
      return s;
    }
    if (it->second == s) return s;
    SegmentId root = find(it->second);
    parent[s] = root;
    return root;
  }
  void unite(SegmentId a, SegmentId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::string seg_name(SegmentId s) { return "s" + std::to_string(s); }

// Groups segments by union-find root; groups ordered by least member.
std::vector<std::vector<SegmentId>> groups(UnionFind& uf, const std::vector<SegmentId>& segs) {
  std::map<SegmentId, std::vector<SegmentId>> by_root;
  for (SegmentId s : segs) by_root[uf.find(s)].push_back(s);
  std::vector<std::vector<SegmentId>> out;
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<Port> node_ports(const Diagram& d, Port::Kind kind, int node) {
  std::vector<Port> ports;
  if (kind == Port::Kind::Vertex) {
    for (int i = 0; i < static_cast<int>(d.vertices[node].incident.size()); ++i)
      ports.push_back({kind, node, i});
  } else {
    for (int s : d.crossings[node].ccw_slots()) ports.push_back({kind, node, s});
  }
  return ports;
}

}  // namespace

SegmentId Crossing::slot(int s) const {
  switch (s) {
    case OverIn: return over_in;
    case OverOut: return over_out;
    case UnderIn: return under_in;
    default: return under_out;
  }
}

SegmentId& Crossing::slot(int s) {
  switch (s) {
    case OverIn: return over_in;
    case OverOut: return over_out;
    case UnderIn: return under_in;
    default: return under_out;
  }
}

std::array<int, 4> Crossing::ccw_slots() const {
  if (sign > 0) return {OverIn, UnderOut, OverOut, UnderIn};
  return {OverIn, UnderIn, OverOut, UnderOut};
}

bool is_head_port(const Diagram& d, const Port& p) {
  if (p.kind == Port::Kind::Vertex) return d.vertices[p.node].incident[p.slot].dir == Direction::In;
  return p.slot == OverIn || p.slot == UnderIn;
}

SegmentId segment_at(const Diagram& d, const Port& p) {
  if (p.kind == Port::Kind::Vertex) return d.vertices[p.node].incident[p.slot].segment;
  return d.crossings[p.node].slot(p.slot);
}

std::map<SegmentId, SegmentEnds> segment_ends(const Diagram& d) {
  std::map<SegmentId, SegmentEnds> ends;
  auto record = [&](const Port& p) {
    auto& e = ends[segment_at(d, p)];
    (is_head_port(d, p) ? e.head : e.tail) = p;
  };
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v)
    for (int i = 0; i < static_cast<int>(d.vertices[v].incident.size()); ++i)
      record({Port::Kind::Vertex, v, i});
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    for (int s = 0; s < 4; ++s) record({Port::Kind::Crossing, c, s});
  return ends;
}

std::string to_string(const Violation& v) { return v.rule + " " + v.subject; }

std::vector<Violation> validate(const Diagram& d) {
  std::vector<Violation> out;
  if (d.free_loops < 0) out.push_back({"negative-free-loops", std::to_string(d.free_loops)});

  std::set<int> vertex_ids;
  struct Count {
    int heads = 0;
    int tails = 0;
    bool at_vertex = false;
  };
  std::map<SegmentId, Count> counts;
  for (const auto& v : d.vertices) {
    if (!vertex_ids.insert(v.id).second) out.push_back({"duplicate-vertex-id", "vertex " + std::to_string(v.id)});
    if (v.incident.empty()) out.push_back({"empty-vertex", "vertex " + std::to_string(v.id)});
    for (const auto& inc : v.incident) {
      auto& c = counts[inc.segment];
      (inc.dir == Direction::In ? c.heads : c.tails)++;
      c.at_vertex = true;
    }
  }
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& x = d.crossings[i];
    if (x.sign != 1 && x.sign != -1) out.push_back({"bad-sign", "crossing " + std::to_string(i)});
    counts[x.over_in].heads++;
    counts[x.under_in].heads++;
    counts[x.over_out].tails++;
    counts[x.under_out].tails++;
  }
  for (const auto& [s, c] : counts) {
    if (s < 0) out.push_back({"negative-segment-id", seg_name(s)});
    if (c.heads + c.tails == 1) {
      out.push_back({c.at_vertex ? "dangling-segment" : "unknown-segment", seg_name(s)});
      continue;
    }
    if (c.heads > 1) out.push_back({"double-head", seg_name(s)});
    if (c.tails > 1) out.push_back({"double-tail", seg_name(s)});
    if (c.heads == 0) out.push_back({"missing-head", seg_name(s)});
    if (c.tails == 0) out.push_back({"missing-tail", seg_name(s)});
  }
  return out;
}

void require_valid(const Diagram& d) {
  auto violations = validate(d);
  if (violations.empty()) return;
  std::string msg = "invalid diagram:";
  for (const auto& v : violations) msg += " [" + to_string(v) + "]";
  throw DiagramError(msg);
}

std::vector<SegmentId> segment_ids(const Diagram& d) {
  std::set<SegmentId> ids;
  for (const auto& v : d.vertices)
    for (const auto& inc : v.incident) ids.insert(inc.segment);
  for (const auto& x : d.crossings)
    for (int s = 0; s < 4; ++s) ids.insert(x.slot(s));
  return {ids.begin(), ids.end()};
}

SegmentId max_segment_id(const Diagram& d) {
  auto ids = segment_ids(d);
  return ids.empty() ? -1 : ids.back();
}

int max_vertex_id(const Diagram& d) {
  int m = -1;
  for (const auto& v : d.vertices) m = std::max(m, v.id);
  return m;
}

ArcPartition derive_arcs(const Diagram& d) {
  UnionFind uf;
  auto segs = segment_ids(d);
  for (SegmentId s : segs) uf.find(s);
  for (const auto& x : d.crossings) uf.unite(x.over_in, x.over_out);
  ArcPartition p;
  p.arcs = groups(uf, segs);
  for (int i = 0; i < static_cast<int>(p.arcs.size()); ++i)
    for (SegmentId s : p.arcs[i]) p.arc_of[s] = i;
  return p;
}

int EdgePartition::knot_components() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const auto& e) { return e.closed(); }));
}

EdgePartition derive_edges(const Diagram& d) {
  UnionFind uf;
  auto segs = segment_ids(d);
  for (SegmentId s : segs) uf.find(s);
  for (const auto& x : d.crossings) {
    uf.unite(x.over_in, x.over_out);
    uf.unite(x.under_in, x.under_out);
  }
  EdgePartition p;
  p.free_loops = d.free_loops;
  for (auto& members : groups(uf, segs)) p.edges.push_back({std::move(members), std::nullopt, std::nullopt});
  for (int i = 0; i < static_cast<int>(p.edges.size()); ++i)
    for (SegmentId s : p.edges[i].segments) p.edge_of[s] = i;
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    for (int k = 0; k < static_cast<int>(d.vertices[v].incident.size()); ++k) {
      const auto& inc = d.vertices[v].incident[k];
      auto& edge = p.edges[p.edge_of.at(inc.segment)];
      (inc.dir == Direction::Out ? edge.tail : edge.head) = Port{Port::Kind::Vertex, v, k};
    }
  }
  return p;
}

std::string edge_name(int index) { return "e" + std::to_string(index + 1); }

FaceStructure faces(const Diagram& d) {
  auto ends = segment_ends(d);
  // Position of every port in its node's counterclockwise order.
  std::map<Port, std::pair<std::vector<Port>, int>> ring;
  auto add_node = [&](Port::Kind kind, int node) {
    auto ports = node_ports(d, kind, node);
    for (int i = 0; i < static_cast<int>(ports.size()); ++i) ring[ports[i]] = {ports, i};
  };
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) add_node(Port::Kind::Vertex, v);
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) add_node(Port::Kind::Crossing, c);

  auto next = [&](const Dart& dart) {
    const auto& e = ends.at(dart.segment);
    const Port& arrival = dart.forward ? e.head : e.tail;
    const auto& [ports, pos] = ring.at(arrival);
    int n = static_cast<int>(ports.size());
    const Port& leave = ports[(pos + n - 1) % n];
    SegmentId t = segment_at(d, leave);
    return Dart{t, !is_head_port(d, leave)};
  };

  FaceStructure fs;
  for (const auto& [s, e] : ends) {
    for (bool fwd : {true, false}) {
      Dart start{s, fwd};
      if (fs.face_of.count(start)) continue;
      int id = static_cast<int>(fs.faces.size());
      fs.faces.emplace_back();
      Dart cur = start;
      do {
        fs.face_of[cur] = id;
        fs.faces.back().push_back(cur);
        cur = next(cur);
      } while (!(cur == start));
    }
  }
  return fs;
}

bool is_planar(const Diagram& d) {
  if (!validate(d).empty()) return false;
  auto fs = faces(d);
  auto ends = segment_ends(d);
  // Connected pieces of the map, keyed by nodes.
  UnionFind uf;
  auto node_key = [&](const Port& p) {
    return p.kind == Port::Kind::Vertex ? -(p.node + 1) : static_cast<int>(d.vertices.size()) + p.node;
  };
  for (const auto& [s, e] : ends) uf.unite(node_key(e.tail), node_key(e.head));
  std::map<int, long> euler;
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) euler[uf.find(-(v + 1))] += 1;
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    euler[uf.find(static_cast<int>(d.vertices.size()) + c)] += 1;
  for (const auto& [s, e] : ends) euler[uf.find(node_key(e.tail))] -= 1;
  for (const auto& face : fs.faces) euler[uf.find(node_key(ends.at(face.front().segment).tail))] += 1;
  return std::all_of(euler.begin(), euler.end(), [](const auto& kv) { return kv.second == 2; });
}

Diagram mirror(const Diagram& d) {
  Diagram m = d;
  for (auto& x : m.crossings) {
    std::swap(x.over_in, x.under_in);
    std::swap(x.over_out, x.under_out);
    x.sign = -x.sign;
  }
  return m;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  Diagram u = a;
  const SegmentId seg_shift = max_segment_id(a) + 1;
  const int vid_shift = max_vertex_id(a) + 1;
  for (auto v : b.vertices) {
    v.id += vid_shift;
    for (auto& inc : v.incident) inc.segment += seg_shift;
    u.vertices.push_back(std::move(v));
  }
  for (auto x : b.crossings) {
    for (int s = 0; s < 4; ++s) x.slot(s) += seg_shift;
    u.crossings.push_back(x);
  }
  u.free_loops += b.free_loops;
  return u;
}

}  // namespace sginv
