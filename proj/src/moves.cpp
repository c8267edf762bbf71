#include "sginv/moves.hpp"

#include "sginv/detail/rebuild.hpp"

#include <algorithm>
#include <tuple>

namespace sginv {

namespace {

SegmentId& segment_ref(Diagram& d, const Port& p) {
  if (p.kind == Port::Kind::Vertex) return d.vertices[p.node].incident[p.slot].segment;
  return d.crossings[p.node].slot(p.slot);
}

void require_segment(const std::map<SegmentId, SegmentEnds>& ends, SegmentId s) {
  if (!ends.count(s)) throw DiagramError("unknown segment s" + std::to_string(s));
}

struct Placement {
  bool first_forward;   // face lies left of `first`
  bool second_forward;  // face lies left of `second`
};

std::vector<Placement> placements(const Diagram& d, SegmentId first, SegmentId second) {
  auto fs = faces(d);
  std::vector<std::tuple<int, bool, bool>> found;
  for (bool f1 : {true, false})
    for (bool f2 : {true, false}) {
      int face = fs.face_of.at({first, f1});
      if (fs.face_of.at({second, f2}) == face) found.emplace_back(face, !f1, !f2);
    }
  std::sort(found.begin(), found.end());
  std::vector<Placement> out;
  for (auto [face, nf1, nf2] : found) out.push_back({!nf1, !nf2});
  return out;
}

int cross_sign(std::pair<int, int> over, std::pair<int, int> under) {
  int z = over.first * under.second - over.second * under.first;
  return z < 0 ? 1 : -1;
}

}  // namespace

Diagram resolve_crossing(const Diagram& d, std::size_t crossing, ResolveMode mode) {
  if (crossing >= d.crossings.size()) throw DiagramError("crossing index out of range");
  require_valid(d);
  const Crossing& x = d.crossings[crossing];
  auto ccw = x.ccw_slots();

  if (mode == ResolveMode::V) {
    Diagram out = d;
    VertexNode v{max_vertex_id(d) + 1, {}};
    for (int s : ccw) v.incident.push_back({x.slot(s), (s == OverIn || s == UnderIn) ? Direction::In : Direction::Out});
    out.crossings.erase(out.crossings.begin() + static_cast<std::ptrdiff_t>(crossing));
    out.vertices.push_back(std::move(v));
    return out;
  }

  detail::RebuildPlan plan;
  plan.keep_vertex.assign(d.vertices.size(), true);
  plan.keep_crossing.assign(d.crossings.size(), true);
  plan.keep_crossing[crossing] = false;
  auto port = [&](int i) { return Port{Port::Kind::Crossing, static_cast<int>(crossing), ccw[i]}; };
  auto join = [&](int i, int j) {
    plan.glue[port(i)] = port(j);
    plan.glue[port(j)] = port(i);
  };
  if (mode == ResolveMode::A) {
    join(0, 1);
    join(2, 3);
  } else {
    join(0, 3);
    join(1, 2);
  }
  return detail::rebuild(d, plan);
}

Diagram apply_r1(const Diagram& d, SegmentId segment, int chirality) {
  require_valid(d);
  if (chirality != 1 && chirality != -1) throw DiagramError("chirality must be +1 or -1");
  auto ends = segment_ends(d);
  require_segment(ends, segment);
  Diagram out = d;
  SegmentId loop = max_segment_id(d) + 1;
  SegmentId rest = loop + 1;
  segment_ref(out, ends.at(segment).head) = rest;
  out.crossings.push_back({segment, loop, loop, rest, chirality});
  return out;
}

int r2_placements(const Diagram& d, SegmentId first, SegmentId second) {
  require_valid(d);
  auto ends = segment_ends(d);
  require_segment(ends, first);
  require_segment(ends, second);
  return static_cast<int>(placements(d, first, second).size());
}

Diagram apply_r2(const Diagram& d, SegmentId first, SegmentId second, R2Variant variant) {
  require_valid(d);
  auto ends = segment_ends(d);
  require_segment(ends, first);
  require_segment(ends, second);
  if (first == second) throw DiagramError("apply_r2 needs two distinct segments");
  auto options = placements(d, first, second);
  if (options.empty())
    throw DiagramError("segments s" + std::to_string(first) + " and s" + std::to_string(second) + " share no face");
  const Placement& pl = options[static_cast<std::size_t>(variant.face_choice) % options.size()];

  // Local picture: `second` runs along y = 0, `first` along y = 2, the shared
  // face between them; the finger of `first` dips across y = 0 at x = -1
  // (crossing L) and x = +1 (crossing R).
  const int d2 = pl.second_forward ? 1 : -1;  // face left of second => second heads +x
  const int d1 = pl.first_forward ? -1 : 1;   // face right of first => first heads +x
  // Travel direction of `first` through L and R.
  std::pair<int, int> first_at_l{0, d1 > 0 ? -1 : 1};
  std::pair<int, int> first_at_r{0, d1 > 0 ? 1 : -1};
  std::pair<int, int> second_dir{d2, 0};

  Diagram out = d;
  SegmentId next = max_segment_id(d) + 1;
  SegmentId f_mid = next++, f_end = next++, s_mid = next++, s_end = next++;
  segment_ref(out, ends.at(first).head) = f_end;
  segment_ref(out, ends.at(second).head) = s_end;

  // Which crossing each strand meets first.
  const bool first_hits_l_first = d1 > 0;
  const bool second_hits_l_first = d2 > 0;
  auto strand = [](bool at_first_hit, SegmentId a, SegmentId mid, SegmentId end) {
    return at_first_hit ? std::pair{a, mid} : std::pair{mid, end};
  };
  for (bool at_l : {true, false}) {
    auto [f_in, f_out] = strand(at_l == first_hits_l_first, first, f_mid, f_end);
    auto [s_in, s_out] = strand(at_l == second_hits_l_first, second, s_mid, s_end);
    auto f_dir = at_l ? first_at_l : first_at_r;
    Crossing x;
    if (variant.first_over) {
      x = {f_in, f_out, s_in, s_out, cross_sign(f_dir, second_dir)};
    } else {
      x = {s_in, s_out, f_in, f_out, cross_sign(second_dir, f_dir)};
    }
    out.crossings.push_back(x);
  }
  return out;
}

}  // namespace sginv
