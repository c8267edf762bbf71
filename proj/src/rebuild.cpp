#include "sginv/detail/rebuild.hpp"

#include <deque>
#include <stdexcept>

namespace sginv::detail {

namespace {

struct Piece {
  SegmentId segment;
  bool forward;
};

struct Chain {
  Port start;
  Port end;
  std::vector<Piece> pieces;
  int orientation = 0;  // +1: start -> end, -1: end -> start
  SegmentId id = -1;
  const Port& head() const { return orientation > 0 ? end : start; }
};

int partner_slot(int slot) { return slot ^ 1; }  // OverIn<->OverOut, UnderIn<->UnderOut

}  // namespace

Diagram rebuild(const Diagram& d, const RebuildPlan& plan) {
  const auto ends = segment_ends(d);
  auto live = [&](const Port& p) {
    return p.kind == Port::Kind::Vertex ? plan.keep_vertex[p.node] : plan.keep_crossing[p.node];
  };

  std::vector<Port> live_ports;
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v)
    if (plan.keep_vertex[v])
      for (int k = 0; k < static_cast<int>(d.vertices[v].incident.size()); ++k)
        live_ports.push_back({Port::Kind::Vertex, v, k});
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    if (plan.keep_crossing[c])
      for (int s = 0; s < 4; ++s) live_ports.push_back({Port::Kind::Crossing, c, s});

  std::vector<Chain> chains;
  std::map<Port, int> chain_at;
  std::set<SegmentId> covered;

  // Follows segments from `port` through glued ports; stops at a live port
  // or on returning to `stop_segment`.
  auto walk = [&](Port port, SegmentId seg, std::vector<Piece>& pieces, SegmentId stop_segment) -> std::optional<Port> {
    while (true) {
      if (plan.dead.count(seg)) throw std::logic_error("strand runs into a discarded segment");
      const auto& e = ends.at(seg);
      bool forward = port == e.tail;
      pieces.push_back({seg, forward});
      covered.insert(seg);
      Port other = forward ? e.head : e.tail;
      if (live(other)) return other;
      auto g = plan.glue.find(other);
      if (g == plan.glue.end()) throw std::logic_error("open strand at a removed node");
      port = g->second;
      seg = segment_at(d, port);
      if (seg == stop_segment) return std::nullopt;
    }
  };

  for (const Port& p : live_ports) {
    if (chain_at.count(p)) continue;
    Chain c;
    c.start = p;
    auto end = walk(p, segment_at(d, p), c.pieces, -1);
    c.end = *end;
    int idx = static_cast<int>(chains.size());
    chain_at[c.start] = idx;
    chain_at[c.end] = idx;
    chains.push_back(std::move(c));
  }

  int free_loops = d.free_loops;
  for (const auto& [seg, e] : ends) {
    if (covered.count(seg) || plan.dead.count(seg)) continue;
    std::vector<Piece> cycle;
    walk(e.tail, seg, cycle, seg);
    ++free_loops;
  }

  // Orientation: follow each strand through surviving crossings.
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (chains[i].orientation != 0) continue;
    chains[i].orientation = chains[i].pieces.front().forward ? 1 : -1;
    std::deque<int> queue{static_cast<int>(i)};
    while (!queue.empty()) {
      const Chain& c = chains[queue.front()];
      queue.pop_front();
      for (const Port* p : {&c.start, &c.end}) {
        if (p->kind != Port::Kind::Crossing) continue;
        bool is_head = (p == &c.end) == (c.orientation > 0);
        Port twin{Port::Kind::Crossing, p->node, partner_slot(p->slot)};
        int j = chain_at.at(twin);
        Chain& other = chains[j];
        // twin must be the other chain's tail when p is this chain's head.
        int want = ((twin == other.start) == is_head) ? 1 : -1;
        if (other.orientation == 0) {
          other.orientation = want;
          queue.push_back(j);
        } else if (other.orientation != want) {
          throw std::logic_error("inconsistent strand orientation");
        }
      }
    }
  }

  SegmentId fresh = max_segment_id(d) + 1;
  for (auto& c : chains) c.id = c.pieces.size() == 1 ? c.pieces.front().segment : fresh++;

  Diagram out;
  out.free_loops = free_loops;
  for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v) {
    if (!plan.keep_vertex[v]) continue;
    VertexNode node{d.vertices[v].id, {}};
    for (int k = 0; k < static_cast<int>(d.vertices[v].incident.size()); ++k) {
      Port p{Port::Kind::Vertex, v, k};
      const Chain& c = chains[chain_at.at(p)];
      node.incident.push_back({c.id, c.head() == p ? Direction::In : Direction::Out});
    }
    out.vertices.push_back(std::move(node));
  }
  for (int x = 0; x < static_cast<int>(d.crossings.size()); ++x) {
    if (!plan.keep_crossing[x]) continue;
    Crossing nx;
    nx.sign = d.crossings[x].sign;
    for (int in_slot : {OverIn, UnderIn}) {
      Port a{Port::Kind::Crossing, x, in_slot};
      Port b{Port::Kind::Crossing, x, partner_slot(in_slot)};
      const Chain& ca = chains[chain_at.at(a)];
      const Chain& cb = chains[chain_at.at(b)];
      bool reversed = !(ca.head() == a);
      if (reversed) nx.sign = -nx.sign;
      nx.slot(in_slot) = reversed ? cb.id : ca.id;
      nx.slot(partner_slot(in_slot)) = reversed ? ca.id : cb.id;
    }
    out.crossings.push_back(nx);
  }
  return out;
}

}  // namespace sginv::detail
