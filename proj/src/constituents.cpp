#include "sginv/constituents.hpp"

#include "sginv/alexander.hpp"
#include "sginv/detail/rebuild.hpp"
#include "sginv/yamada.hpp"

#include <algorithm>
#include <set>

namespace sginv {

namespace {

void require_degrees(const Diagram& d) {
  for (const auto& v : d.vertices)
    if (v.incident.size() < 2)
      throw DiagramError("vertex " + std::to_string(v.id) + " has degree " + std::to_string(v.incident.size()) +
                         "; constituents need degree at least 2");
}

WeightMap unit_weights(const Diagram& d) {
  WeightMap w;
  auto ep = derive_edges(d);
  for (std::size_t e = 0; e < ep.edges.size(); ++e) w[edge_name(static_cast<int>(e))] = 1;
  return w;
}

bool nonempty(const Diagram& d) { return !d.crossings.empty() || d.free_loops > 0; }

}  // namespace

Integer constituent_count(const Diagram& d) {
  require_valid(d);
  require_degrees(d);
  Integer count = 1;
  for (const auto& v : d.vertices) {
    Integer k = v.incident.size();
    count *= k * (k - 1) / 2;
  }
  return count;
}

ConstituentLink constituent_for(const Diagram& d, const VertexChoice& choice) {
  if (choice.size() != d.vertices.size()) throw DiagramError("vertex choice has the wrong length");
  for (std::size_t v = 0; v < choice.size(); ++v) {
    auto [i, j] = choice[v];
    int deg = static_cast<int>(d.vertices[v].incident.size());
    if (i < 0 || j >= deg || i >= j) throw DiagramError("bad slot pair at vertex " + std::to_string(d.vertices[v].id));
  }
  EdgePartition ep = derive_edges(d);
  std::vector<bool> alive(ep.edges.size(), true);
  auto chosen = [&](const Port& p) {
    auto [i, j] = choice[p.node];
    return p.slot == i || p.slot == j;
  };
  for (std::size_t e = 0; e < ep.edges.size(); ++e)
    if (!ep.edges[e].closed()) alive[e] = chosen(*ep.edges[e].tail) && chosen(*ep.edges[e].head);
  auto edge_at = [&](std::size_t v, int slot) { return ep.edge_of.at(d.vertices[v].incident[slot].segment); };
  // A strand that reaches a vertex whose other chosen side is gone is open.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < choice.size(); ++v) {
      int a = edge_at(v, choice[v].first), b = edge_at(v, choice[v].second);
      if (alive[a] != alive[b]) {
        alive[a] = alive[b] = false;
        changed = true;
      }
    }
  }

  detail::RebuildPlan plan;
  plan.keep_vertex.assign(d.vertices.size(), false);
  plan.keep_crossing.assign(d.crossings.size(), false);
  auto glue = [&](const Port& p, const Port& q) {
    plan.glue[p] = q;
    plan.glue[q] = p;
  };
  for (const auto& [seg, e] : ep.edge_of)
    if (!alive[e]) plan.dead.insert(seg);
  for (std::size_t v = 0; v < choice.size(); ++v) {
    auto [i, j] = choice[v];
    int vi = static_cast<int>(v);
    if (alive[edge_at(v, i)]) glue({Port::Kind::Vertex, vi, i}, {Port::Kind::Vertex, vi, j});
  }
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const Crossing& x = d.crossings[c];
    bool over = alive[ep.edge_of.at(x.over_in)], under = alive[ep.edge_of.at(x.under_in)];
    int ci = static_cast<int>(c);
    if (over && under) {
      plan.keep_crossing[c] = true;
    } else if (over) {
      glue({Port::Kind::Crossing, ci, OverIn}, {Port::Kind::Crossing, ci, OverOut});
    } else if (under) {
      glue({Port::Kind::Crossing, ci, UnderIn}, {Port::Kind::Crossing, ci, UnderOut});
    }
  }
  return {detail::rebuild(d, plan), choice};
}

void for_each_constituent(const Diagram& d, const std::function<void(const ConstituentLink&)>& f) {
  constituent_count(d);
  const std::size_t n = d.vertices.size();
  VertexChoice choice(n, {0, 1});
  while (true) {
    f(constituent_for(d, choice));
    // Advance the rightmost vertex whose pair can still move.
    std::size_t v = n;
    while (v > 0) {
      --v;
      int deg = static_cast<int>(d.vertices[v].incident.size());
      auto& [i, j] = choice[v];
      if (j + 1 < deg) {
        ++j;
        break;
      }
      if (i + 2 < deg) {
        ++i;
        j = i + 1;
        break;
      }
      choice[v] = {0, 1};
      if (v == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<ConstituentLink> enumerate_constituents(const Diagram& d) {
  std::vector<ConstituentLink> out;
  for_each_constituent(d, [&](const ConstituentLink& c) { out.push_back(c); });
  return out;
}

ConstituentInvariant parse_constituent_invariant(const std::string& name) {
  if (name == "yamada") return ConstituentInvariant::Yamada;
  if (name == "alexander") return ConstituentInvariant::Alexander;
  if (name == "determinant") return ConstituentInvariant::Determinant;
  throw std::invalid_argument("unknown invariant \"" + name + "\"");
}

std::string constituent_value(const Diagram& link, ConstituentInvariant inv, YamadaMemo* memo) {
  switch (inv) {
    case ConstituentInvariant::Yamada: {
      int writhe = 0;
      for (const auto& x : link.crossings) writhe += x.sign;
      return to_string(yamada_raw(link, memo).shifted(-2 * writhe));
    }
    case ConstituentInvariant::Alexander:
      return to_string(alexander_polynomial(link, unit_weights(link)));
    case ConstituentInvariant::Determinant:
      return graph_determinant(link, unit_weights(link)).str();
  }
  return {};
}

std::vector<std::string> constituent_fingerprint(const Diagram& d, ConstituentInvariant inv) {
  std::vector<std::string> out;
  YamadaMemo memo;
  for_each_constituent(d, [&](const ConstituentLink& c) {
    if (nonempty(c.diagram)) out.push_back(constituent_value(c.diagram, inv, &memo));
  });
  if (inv == ConstituentInvariant::Determinant)
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
  else
    std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConstituentLink> hamiltonian_constituents(const Diagram& d) {
  require_valid(d);
  require_degrees(d);
  EdgePartition ep = derive_edges(d);
  const int n = static_cast<int>(d.vertices.size());
  if (n == 0) {
    if (ep.knot_components() + ep.free_loops == 1) return {{d, {}}};
    return {};
  }
  // Closed components would survive in every constituent.
  if (ep.knot_components() > 0 || ep.free_loops > 0) return {};

  // For each vertex slot, the slot at the other end of its edge.
  std::vector<std::vector<Port>> across(n);
  for (int v = 0; v < n; ++v)
    for (const auto& inc : d.vertices[v].incident) {
      const auto& e = ep.edges[ep.edge_of.at(inc.segment)];
      across[v].push_back(inc.dir == Direction::Out ? *e.head : *e.tail);
    }
  auto far_end = [&](int v, int slot) { return across[v][slot]; };

  std::set<VertexChoice> found;
  VertexChoice choice(n, {-1, -1});
  std::vector<bool> visited(n, false);
  visited[0] = true;
  // Start at vertex 0 leaving by `first`, closing through a later slot there.
  const int deg0 = static_cast<int>(d.vertices[0].incident.size());
  for (int first = 0; first < deg0; ++first) {
    for (int last = first + 1; last < deg0; ++last) {
      choice[0] = {first, last};
      Port next = far_end(0, first);
      if (next.node == 0) {
        if (n == 1 && next.slot == last) found.insert(choice);
        continue;
      }
      visited[next.node] = true;
      // Enter v through slot `in`, leave by another; close when the walk
      // re-enters vertex 0 through `last`.
      std::function<void(int, int, int)> walk = [&](int v, int in, int count) {
        for (int out = 0; out < static_cast<int>(d.vertices[v].incident.size()); ++out) {
          if (out == in) continue;
          Port to = far_end(v, out);
          choice[v] = {std::min(in, out), std::max(in, out)};
          if (to.node == 0) {
            if (count == n && to.slot == last) found.insert(choice);
            continue;
          }
          if (visited[to.node]) continue;
          visited[to.node] = true;
          walk(to.node, to.slot, count + 1);
          visited[to.node] = false;
        }
        choice[v] = {-1, -1};
      };
      walk(next.node, next.slot, 2);
      visited[next.node] = false;
    }
  }
  std::vector<ConstituentLink> out;
  for (const auto& c : found) out.push_back(constituent_for(d, c));
  return out;
}

int arf_invariant(const Diagram& knot) {
  Integer det = graph_determinant(knot, unit_weights(knot));
  int r = static_cast<int>(det % 8);
  if (r % 2 == 0) throw DiagramError("even determinant; not a knot");
  return r == 1 || r == 7 ? 0 : 1;
}

int conway_gordon_sum(const Diagram& d) {
  auto cycles = hamiltonian_constituents(d);
  if (cycles.empty()) throw DiagramError("the underlying graph has no Hamiltonian cycle");
  int sum = 0;
  for (const auto& c : cycles) sum ^= arf_invariant(c.diagram);
  return sum;
}

}  // namespace sginv
