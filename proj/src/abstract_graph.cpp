#include "sginv/abstract_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sginv {

void AbstractGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) throw DiagramError("edge endpoint out of range");
  edges.emplace_back(std::min(u, v), std::max(u, v));
}

AbstractGraph to_abstract_graph(const Diagram& d) {
  if (!d.crossings.empty()) throw DiagramError("to_abstract_graph requires a crossing-free diagram");
  require_valid(d);
  EdgePartition ep = derive_edges(d);
  AbstractGraph g;
  g.vertex_count = static_cast<int>(d.vertices.size());
  g.free_loops = ep.free_loops;
  for (const auto& e : ep.edges) {
    if (e.closed())
      ++g.free_loops;
    else
      g.add_edge(e.tail->node, e.head->node);
  }
  return g;
}

AbstractGraph delete_edge(const AbstractGraph& g, std::size_t edge) {
  if (edge >= g.edges.size()) throw DiagramError("edge index out of range");
  AbstractGraph r = g;
  r.edges.erase(r.edges.begin() + static_cast<std::ptrdiff_t>(edge));
  return r;
}

AbstractGraph contract_edge(const AbstractGraph& g, std::size_t edge) {
  if (edge >= g.edges.size()) throw DiagramError("edge index out of range");
  if (g.is_loop(edge)) throw DiagramError("cannot contract a loop");
  auto [keep, gone] = g.edges[edge];
  auto image = [&](int v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  AbstractGraph r;
  r.vertex_count = g.vertex_count - 1;
  r.free_loops = g.free_loops;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (i != edge) r.add_edge(image(g.edges[i].first), image(g.edges[i].second));
  return r;
}

std::vector<AbstractGraph> vertex_components(const AbstractGraph& g) {
  std::vector<int> comp(g.vertex_count, -1);
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int count = 0;
  for (int s = 0; s < g.vertex_count; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  std::vector<AbstractGraph> out(count);
  std::vector<int> local(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) local[v] = out[comp[v]].vertex_count++;
  for (auto [u, v] : g.edges) out[comp[u]].add_edge(local[u], local[v]);
  return out;
}

AbstractGraph relabel(const AbstractGraph& g, const std::vector<int>& perm, const std::vector<std::size_t>& edge_order) {
  AbstractGraph r;
  r.vertex_count = g.vertex_count;
  r.free_loops = g.free_loops;
  for (std::size_t i : edge_order) r.add_edge(perm[g.edges[i].first], perm[g.edges[i].second]);
  return r;
}

namespace {

// Stable colour refinement seeded by (degree, loops).
std::vector<int> refined_colors(int n, const std::vector<std::vector<int>>& mult) {
  std::vector<std::vector<long>> sig(n);
  for (int v = 0; v < n; ++v) {
    long degree = 0;
    for (int w = 0; w < n; ++w) degree += (w == v ? 2 : 1) * mult[v][w];
    sig[v] = {degree, mult[v][v]};
  }
  std::vector<int> color(n, 0);
  int classes = -1;
  while (true) {
    std::vector<std::vector<long>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (static_cast<int>(sorted.size()) == classes) break;
    classes = static_cast<int>(sorted.size());
    for (int v = 0; v < n; ++v) {
      std::vector<long> next{color[v]};
      std::vector<std::pair<int, int>> nbrs;
      for (int w = 0; w < n; ++w)
        if (w != v && mult[v][w]) nbrs.emplace_back(color[w], mult[v][w]);
      std::sort(nbrs.begin(), nbrs.end());
      for (auto [c, m] : nbrs) {
        next.push_back(c);
        next.push_back(m);
      }
      sig[v] = std::move(next);
    }
  }
  return color;
}

struct CanonicalSearch {
  int n;
  const std::vector<std::vector<int>>& mult;
  std::vector<int> slot_color;  // required colour at each position
  const std::vector<int>& color;
  std::vector<int> placed;
  std::vector<bool> used;
  std::vector<int> code;
  std::vector<int> best;
  bool have_best = false;

  // Appends the row for position k; returns -1/0/+1 against best's prefix.
  void search(int k, bool tied) {
    if (k == n) {
      if (!have_best || code < best) {
        best = code;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || color[v] != slot_color[k]) continue;
      std::size_t mark = code.size();
      code.push_back(mult[v][v]);
      for (int j = 0; j < k; ++j) code.push_back(mult[v][placed[j]]);
      bool still_tied = tied;
      if (have_best && tied) {
        auto cmp = std::lexicographical_compare_three_way(code.begin() + mark, code.end(), best.begin() + mark,
                                                          best.begin() + static_cast<std::ptrdiff_t>(code.size()));
        if (cmp > 0) {
          code.resize(mark);
          continue;
        }
        still_tied = cmp == 0;
      }
      used[v] = true;
      placed.push_back(v);
      search(k + 1, still_tied || !have_best);
      placed.pop_back();
      used[v] = false;
      code.resize(mark);
    }
  }
};

}  // namespace

std::string canonical_certificate(const AbstractGraph& g) {
  const int n = g.vertex_count;
  std::ostringstream out;
  out << "n" << n << ";f" << g.free_loops;
  if (n == 0) return out.str() + ";";
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges) {
    mult[u][v]++;
    if (u != v) mult[v][u]++;
  }
  std::vector<int> color = refined_colors(n, mult);
  std::vector<int> slot_color = color;
  std::sort(slot_color.begin(), slot_color.end());

  CanonicalSearch s{n, mult, slot_color, color, {}, std::vector<bool>(n, false), {}, {}, false};
  s.search(0, true);
  out << ";c";
  for (int c : slot_color) out << c << ',';
  out << ";m";
  for (int x : s.best) out << x << ',';
  return out.str();
}

}  // namespace sginv
