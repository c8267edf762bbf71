#pragma once

#include "sginv/diagram.hpp"
#include "sginv/laurent.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sginv {

// Two incidence slots (indices into VertexNode::incident, first < second) per vertex.
using VertexChoice = std::vector<std::pair<int, int>>;

struct ConstituentLink {
  Diagram diagram;  // no vertices
  VertexChoice choice;
};

// Product over vertices of C(degree, 2). Throws DiagramError on a vertex of
// degree below 2.
Integer constituent_count(const Diagram& d);

// The link left by keeping, at each vertex, the strands through the chosen
// slots: an edge survives only if chosen at both ends, and strands that do
// not close up are dropped.
ConstituentLink constituent_for(const Diagram& d, const VertexChoice& choice);

// Every vertex choice in lexicographic order, empty links included.
void for_each_constituent(const Diagram& d, const std::function<void(const ConstituentLink&)>& f);
std::vector<ConstituentLink> enumerate_constituents(const Diagram& d);

enum class ConstituentInvariant { Yamada, Alexander, Determinant };
// "yamada", "alexander", "determinant"; throws std::invalid_argument otherwise.
ConstituentInvariant parse_constituent_invariant(const std::string& name);

class YamadaMemo;

// Rendered invariant of one vertex-free link. Yamada values are A^(-2w) R for
// writhe w; alexander and determinant use weight 1.
std::string constituent_value(const Diagram& link, ConstituentInvariant inv, YamadaMemo* memo = nullptr);

// constituent_value of each nonempty constituent, sorted (determinants
// numerically).
std::vector<std::string> constituent_fingerprint(const Diagram& d, ConstituentInvariant inv);

// Single-component constituents passing through every vertex, found by
// walking Hamiltonian cycles of the underlying graph.
std::vector<ConstituentLink> hamiltonian_constituents(const Diagram& d);

// Arf invariant of a knot diagram from its determinant: 0 iff det = +-1 mod 8.
int arf_invariant(const Diagram& knot);

// Sum of Arf invariants over Hamiltonian constituents, mod 2. Throws
// DiagramError when there is no Hamiltonian cycle.
int conway_gordon_sum(const Diagram& d);

}  // namespace sginv
