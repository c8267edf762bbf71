#pragma once

#include "sginv/diagram.hpp"

#include <map>
#include <set>
#include <vector>

namespace sginv::detail {

// Surgery description: nodes to drop, how the freed ports of dropped nodes
// join up, and segments to discard.
struct RebuildPlan {
  std::vector<bool> keep_vertex;
  std::vector<bool> keep_crossing;
  std::map<Port, Port> glue;  // symmetric
  std::set<SegmentId> dead;
};

// Rejoins strands through glued ports, closes vertex-free circles into free
// loops, and re-orients every strand consistently through the surviving
// crossings (flipping crossing signs where a strand is reversed). A strand
// made of a single original segment keeps its id; merged strands get fresh
// ids above the current maximum.
Diagram rebuild(const Diagram& d, const RebuildPlan& plan);

}  // namespace sginv::detail
