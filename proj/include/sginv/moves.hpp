#pragma once

#include "sginv/diagram.hpp"

namespace sginv {

// A and B are the two planar smoothings; V replaces the crossing by a rigid
// 4-valent vertex. The A smoothing joins each over end to the under end
// counterclockwise from it, so a sign +1 kink contributes A^2.
enum class ResolveMode { A, B, V };

Diagram resolve_crossing(const Diagram& d, std::size_t crossing, ResolveMode mode);

// Inserts a one-crossing kink of the given sign on `segment`. The segment is
// split as segment -> (over) -> loop -> (under) -> new segment.
Diagram apply_r1(const Diagram& d, SegmentId segment, int chirality);

struct R2Variant {
  bool first_over = true;  // push `first` over `second` (else under)
  int face_choice = 0;     // which shared face, modulo the number available
};

// Pushes a finger of `first` across `second` through a face both border.
// Throws DiagramError if they share no face.
Diagram apply_r2(const Diagram& d, SegmentId first, SegmentId second, R2Variant variant = {});

// Number of (face, side, side) placements available to apply_r2.
int r2_placements(const Diagram& d, SegmentId first, SegmentId second);

}  // namespace sginv
