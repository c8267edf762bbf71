#include "doctest.h"

#include "fixtures.hpp"
#include "printers.hpp"
#include "sginv/constituents.hpp"
#include "sginv/moves.hpp"
#include "sginv/yamada.hpp"

#include <random>
#include <set>

using namespace sginv;
using sginv::testing::corpus_names;
using sginv::testing::fixture;

namespace {

bool has_small_vertices(const Diagram& d) {
  for (const auto& v : d.vertices)
    if (v.incident.size() < 2) return true;
  return false;
}

struct Walked {
  std::set<int> edges;  // surviving edge indices
  int cycles = 0;       // closed components through vertices
};

// Follows each edge forward through the chosen slots; the edge survives when
// the walk comes back to it without meeting an unchosen slot.
Walked walk_choice(const Diagram& d, const VertexChoice& choice) {
  EdgePartition ep = derive_edges(d);
  auto chosen_partner = [&](const Port& p) -> std::optional<int> {
    auto [i, j] = choice[p.node];
    if (p.slot == i) return j;
    if (p.slot == j) return i;
    return std::nullopt;
  };
  Walked out;
  std::set<int> seen;
  for (std::size_t e0 = 0; e0 < ep.edges.size(); ++e0) {
    if (ep.edges[e0].closed() || seen.count(static_cast<int>(e0))) continue;
    std::vector<int> path;
    int e = static_cast<int>(e0);
    Port at = *ep.edges[e].head;
    bool ok = true;
    while (true) {
      path.push_back(e);
      auto other = chosen_partner(at);
      if (!other) {
        ok = false;
        break;
      }
      SegmentId s = d.vertices[at.node].incident[*other].segment;
      bool leaving = d.vertices[at.node].incident[*other].dir == Direction::Out;
      e = ep.edge_of.at(s);
      at = leaving ? *ep.edges[e].head : *ep.edges[e].tail;
      if (e == static_cast<int>(e0)) {
        // Back at the start; it must re-enter through the slot it left by.
        ok = at == *ep.edges[e0].head || at == *ep.edges[e0].tail;
        break;
      }
      if (path.size() > 2 * ep.edges.size()) {
        ok = false;
        break;
      }
    }
    if (!chosen_partner(*ep.edges[e0].tail)) ok = false;
    if (ok) {
      for (int x : path) {
        seen.insert(x);
        out.edges.insert(x);
      }
      ++out.cycles;
    }
  }
  return out;
}

std::vector<ConstituentLink> filter_hamiltonian(const Diagram& d) {
  std::vector<ConstituentLink> out;
  for (const auto& c : enumerate_constituents(d)) {
    EdgePartition ep = derive_edges(c.diagram);
    if (ep.knot_components() + ep.free_loops != 1) continue;
    if (d.vertices.empty()) {
      out.push_back(c);
      continue;
    }
    // Every vertex's chosen pair carries the component.
    Walked w = walk_choice(d, c.choice);
    EdgePartition orig = derive_edges(d);
    bool all = orig.knot_components() == 0 && orig.free_loops == 0 && w.cycles == 1;
    for (std::size_t v = 0; all && v < d.vertices.size(); ++v)
      all = w.edges.count(orig.edge_of.at(d.vertices[v].incident[c.choice[v].first].segment)) > 0;
    if (all) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_CASE("trivial theta constituents") {
  Diagram theta = fixture("theta_trivial");
  auto all = enumerate_constituents(theta);
  CHECK(all.size() == 9);
  int unknots = 0, empty = 0;
  for (const auto& c : all) {
    if (c.diagram.empty()) ++empty;
    else if (c.diagram.crossings.empty() && c.diagram.free_loops == 1) ++unknots;
  }
  CHECK(unknots == 3);
  CHECK(empty == 6);
  std::string sigma = to_string(yamada_raw(fixture("unknot")));
  CHECK(constituent_fingerprint(theta, ConstituentInvariant::Yamada) == std::vector<std::string>(3, sigma));
  CHECK(constituent_fingerprint(theta, ConstituentInvariant::Determinant) == std::vector<std::string>{"1", "1", "1"});
  CHECK(constituent_fingerprint(theta, ConstituentInvariant::Alexander) == std::vector<std::string>{"1", "1", "1"});
  CHECK(hamiltonian_constituents(theta).size() == 3);
  CHECK(conway_gordon_sum(theta) == 0);
}

TEST_CASE("knotted theta constituents") {
  Diagram theta = fixture("theta_trefoil");
  CHECK(constituent_fingerprint(theta, ConstituentInvariant::Determinant) == std::vector<std::string>{"1", "1", "3"});
  CHECK(conway_gordon_sum(theta) == 1);
}

TEST_CASE("knot diagrams are their own constituent") {
  for (const char* name : {"trefoil", "figure_eight", "hopf_link", "unknot", "kinked_unknot"}) {
    Diagram d = fixture(name);
    auto all = enumerate_constituents(d);
    REQUIRE(all.size() == 1);
    CHECK(all[0].diagram == d);
    CHECK(all[0].choice.empty());
  }
  CHECK(hamiltonian_constituents(fixture("trefoil")).size() == 1);
  CHECK(hamiltonian_constituents(fixture("hopf_link")).empty());
  CHECK(conway_gordon_sum(fixture("trefoil")) == 1);
  CHECK(conway_gordon_sum(fixture("figure_eight")) == 1);
  CHECK(conway_gordon_sum(fixture("torus_2_5")) == 1);
  CHECK(conway_gordon_sum(fixture("kinked_unknot")) == 0);
  CHECK_THROWS_AS(conway_gordon_sum(fixture("hopf_link")), DiagramError);
}

TEST_CASE("constituent count and validity across the corpus") {
  for (const auto& name : corpus_names()) {
    Diagram d = fixture(name);
    CAPTURE(name);
    if (has_small_vertices(d)) {
      CHECK_THROWS_AS(enumerate_constituents(d), DiagramError);
      continue;
    }
    Integer expected = 1;
    for (const auto& v : d.vertices) {
      Integer k = v.incident.size();
      expected *= k * (k - 1) / 2;
    }
    auto all = enumerate_constituents(d);
    CHECK(Integer(all.size()) == expected);
    CHECK(constituent_count(d) == expected);
    std::set<VertexChoice> choices;
    for (const auto& c : all) {
      CHECK(c.diagram.vertices.empty());
      CHECK(validate(c.diagram).empty());
      choices.insert(c.choice);
    }
    CHECK(choices.size() == all.size());
  }
}

TEST_CASE("constituents agree with an independent walk through the chosen slots") {
  for (const auto& name : corpus_names()) {
    Diagram d = fixture(name);
    if (d.vertices.empty() || has_small_vertices(d)) continue;
    EdgePartition ep = derive_edges(d);
    for (const auto& c : enumerate_constituents(d)) {
      Walked w = walk_choice(d, c.choice);
      std::set<int> live = w.edges;
      for (std::size_t e = 0; e < ep.edges.size(); ++e)
        if (ep.edges[e].closed()) live.insert(static_cast<int>(e));
      std::size_t crossings = 0;
      for (const auto& x : d.crossings)
        if (live.count(ep.edge_of.at(x.over_in)) && live.count(ep.edge_of.at(x.under_in))) ++crossings;
      EdgePartition got = derive_edges(c.diagram);
      CAPTURE(name);
      CHECK(c.diagram.crossings.size() == crossings);
      CHECK(got.knot_components() + got.free_loops == w.cycles + ep.knot_components() + ep.free_loops);
    }
  }
}

TEST_CASE("Hamiltonian walk matches filtering all constituents") {
  for (const auto& name : corpus_names()) {
    Diagram d = fixture(name);
    if (has_small_vertices(d)) continue;
    auto direct = hamiltonian_constituents(d);
    auto filtered = filter_hamiltonian(d);
    CAPTURE(name);
    REQUIRE(direct.size() == filtered.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
      CHECK(direct[i].choice == filtered[i].choice);
      CHECK(direct[i].diagram == filtered[i].diagram);
    }
  }
  CHECK(hamiltonian_constituents(fixture("k4")).size() == 3);
}

TEST_CASE("complete graph on seven vertices") {
  std::mt19937 rng(97);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 2; ++trial) {
    std::vector<sginv::testing::Point3> pts;
    for (int i = 0; i < 7; ++i) pts.push_back({u(rng), u(rng), u(rng)});
    Diagram k7 = sginv::testing::complete_graph_embedding(pts);
    CHECK(hamiltonian_constituents(k7).size() == 360);
    CHECK(conway_gordon_sum(k7) == 1);
  }
}

TEST_CASE("fingerprints are invariant under moves I and II") {
  std::mt19937 rng(101);
  for (const auto& name : corpus_names()) {
    Diagram d = fixture(name);
    if (has_small_vertices(d) || constituent_count(d) > 100) continue;
    auto segs = segment_ids(d);
    if (segs.empty()) continue;
    std::map<ConstituentInvariant, std::vector<std::string>> base;
    for (auto inv : {ConstituentInvariant::Yamada, ConstituentInvariant::Alexander, ConstituentInvariant::Determinant})
      base[inv] = constituent_fingerprint(d, inv);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Diagram> moved{apply_r1(d, segs[rng() % segs.size()], trial % 2 ? 1 : -1)};
      SegmentId a = segs[rng() % segs.size()], b = segs[rng() % segs.size()];
      int placements = a == b ? 0 : r2_placements(d, a, b);
      if (placements) moved.push_back(apply_r2(d, a, b, {rng() % 2 == 0, static_cast<int>(rng() % placements)}));
      for (const auto& m : moved)
        for (const auto& [inv, fp] : base) {
          CAPTURE(name);
          CHECK(constituent_fingerprint(m, inv) == fp);
        }
    }
  }
}

TEST_CASE("bad vertex choices are rejected") {
  Diagram theta = fixture("theta_trivial");
  CHECK_THROWS_AS(constituent_for(theta, {{0, 1}}), DiagramError);
  CHECK_THROWS_AS(constituent_for(theta, {{0, 1}, {1, 1}}), DiagramError);
  CHECK_THROWS_AS(constituent_for(theta, {{0, 3}, {0, 1}}), DiagramError);
  CHECK(constituent_for(theta, {{0, 1}, {0, 1}}).diagram.free_loops + constituent_for(theta, {{0, 1}, {0, 2}}).diagram.free_loops >= 1);
}
