#pragma once

#include "sginv/alexander.hpp"

#include <random>
#include <vector>

namespace sginv::testing {

WeightMap unit_weights(const Diagram& d);

// Integer circulation: random multiples of fundamental cycles of a spanning
// forest, plus arbitrary weights on closed edges.
WeightMap random_balanced_weights(const Diagram& d, std::mt19937& rng);

// Reduced Burau image of a braid word.
PolyMatrix burau(int strands, const std::vector<int>& word);

// det(I - B) / (1 + t + ... + t^(n-1)) for the closure of a braid.
LaurentPoly burau_alexander(int strands, const std::vector<int>& word);

}  // namespace sginv::testing
