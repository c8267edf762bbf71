#include "sginv/yamada.hpp"

#include "sginv/moves.hpp"

namespace sginv {

namespace {

LaurentPoly bouquet(int loops) {
  // R(B_n) = -(-sigma)^n
  return -((-yamada_sigma()).pow(static_cast<unsigned>(loops)));
}

LaurentPoly eval_connected(const AbstractGraph& g, YamadaMemo* memo) {
  std::string key;
  if (memo) {
    key = canonical_certificate(g);
    if (auto hit = memo->find(key)) return *hit;
  }
  LaurentPoly value('A');
  std::size_t nonloop = g.edges.size();
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (!g.is_loop(e)) {
      nonloop = e;
      break;
    }
  if (nonloop == g.edges.size()) {
    value = bouquet(static_cast<int>(g.edges.size()));
  } else {
    value = eval_crossing_free(delete_edge(g, nonloop), memo) + eval_crossing_free(contract_edge(g, nonloop), memo);
  }
  if (memo) memo->insert(key, value);
  return value;
}

LaurentPoly yamada_rec(const Diagram& d, YamadaMemo* memo, const CrossingChooser& choose) {
  if (d.crossings.empty()) return eval_crossing_free(to_abstract_graph(d), memo);
  std::size_t c = choose ? choose(d.crossings.size()) : 0;
  LaurentPoly a = yamada_rec(resolve_crossing(d, c, ResolveMode::A), memo, choose);
  LaurentPoly b = yamada_rec(resolve_crossing(d, c, ResolveMode::B), memo, choose);
  LaurentPoly v = yamada_rec(resolve_crossing(d, c, ResolveMode::V), memo, choose);
  return a.shifted(1) + b.shifted(-1) + v;
}

}  // namespace

LaurentPoly yamada_sigma() {
  LaurentPoly s('A');
  for (int e : {-1, 0, 1}) s += LaurentPoly::monomial('A', 1, e);
  return s;
}

std::optional<LaurentPoly> YamadaMemo::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void YamadaMemo::insert(const std::string& key, const LaurentPoly& value) {
  std::lock_guard lock(mutex_);
  table_.emplace(key, value);
}

std::size_t YamadaMemo::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

LaurentPoly eval_crossing_free(const AbstractGraph& g, YamadaMemo* memo) {
  LaurentPoly result = yamada_sigma().pow(static_cast<unsigned>(g.free_loops));
  for (const auto& component : vertex_components(g)) {
    result *= eval_connected(component, memo);
    if (result.is_zero()) break;
  }
  return result;
}

LaurentPoly yamada_raw(const Diagram& d, YamadaMemo* memo, const CrossingChooser& choose) {
  require_valid(d);
  if (memo) return yamada_rec(d, memo, choose);
  YamadaMemo local;
  return yamada_rec(d, &local, choose);
}

YamadaResult normalize_yamada(const LaurentPoly& raw) {
  YamadaResult r;
  r.raw = raw;
  if (raw.is_zero()) return r;
  int m = raw.min_degree();
  r.min_power = m;
  // (-A)^-m
  r.normalized = raw.shifted(-m, (m % 2 == 0) ? 1 : -1);
  return r;
}

YamadaResult yamada_normalized(const Diagram& d, YamadaMemo* memo) { return normalize_yamada(yamada_raw(d, memo)); }

}  // namespace sginv
