#include "sginv/alexander.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace sginv {

namespace {

int eps(Direction dir) { return dir == Direction::In ? 1 : -1; }

long long weight_of(const WeightMap& w, int edge) {
  auto it = w.find(edge_name(edge));
  if (it == w.end()) throw InvariantError("missing weight for edge " + edge_name(edge));
  return it->second;
}

void check_weight_names(const EdgePartition& ep, const WeightMap& w) {
  for (const auto& [name, value] : w) {
    bool known = false;
    for (std::size_t e = 0; e < ep.edges.size() && !known; ++e) known = edge_name(static_cast<int>(e)) == name;
    if (!known) throw InvariantError("weight given for unknown edge " + name);
  }
  for (std::size_t e = 0; e < ep.edges.size(); ++e) weight_of(w, static_cast<int>(e));
}

LaurentPoly t_pow(long long e, int coef = 1) {
  if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min())
    throw InvariantError("weight exponent out of range");
  return LaurentPoly::monomial('t', coef, static_cast<int>(e));
}

// Arcs a, b (over), c at a crossing.
struct Roles {
  int a, b, c;
};
Roles roles(const Crossing& x, const ArcPartition& arcs) {
  int under_in = arcs.arc_of.at(x.under_in), under_out = arcs.arc_of.at(x.under_out);
  int b = arcs.arc_of.at(x.over_in);
  return x.sign > 0 ? Roles{under_in, b, under_out} : Roles{under_out, b, under_in};
}

// Calls f on every k-subset of {0..n-1} in lexicographic order until f
// returns false.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_minor_size(std::size_t rows, std::size_t cols, std::size_t k) {
  if (k > std::min(rows, cols))
    throw InvariantError("minor size " + std::to_string(k) + " exceeds matrix dimensions " + std::to_string(rows) +
                         "x" + std::to_string(cols));
}

}  // namespace

BalanceReport check_balanced(const Diagram& d, const WeightMap& w) {
  require_valid(d);
  EdgePartition ep = derive_edges(d);
  check_weight_names(ep, w);
  BalanceReport report;
  for (const auto& v : d.vertices) {
    long long sum = 0;
    for (const auto& inc : v.incident) sum += eps(inc.dir) * weight_of(w, ep.edge_of.at(inc.segment));
    report.residuals.emplace_back(v.id, sum);
    if (sum != 0) report.balanced = false;
  }
  return report;
}

AlexanderMatrix build_alexander_matrix(const Diagram& d, const WeightMap& w) {
  BalanceReport balance = check_balanced(d, w);
  if (!balance.balanced) {
    for (auto [id, r] : balance.residuals)
      if (r != 0)
        throw InvariantError("weights are not balanced at vertex " + std::to_string(id) + " (residual " +
                             std::to_string(r) + ")");
  }
  EdgePartition ep = derive_edges(d);
  ArcPartition arcs = derive_arcs(d);
  auto edge_weight = [&](SegmentId s) { return weight_of(w, ep.edge_of.at(s)); };

  AlexanderMatrix m;
  m.rows = d.crossings.size() + d.vertices.size();
  m.cols = arcs.arcs.size();
  m.entries.assign(m.rows, std::vector<LaurentPoly>(m.cols, LaurentPoly('t')));
  std::size_t row = 0;
  for (const auto& x : d.crossings) {
    Roles r = roles(x, arcs);
    long long w1 = edge_weight(x.over_in), w2 = edge_weight(x.under_in);
    auto& line = m.entries[row++];
    line[r.a] -= t_pow(0);
    line[r.b] += t_pow(0) - t_pow(w2);
    line[r.c] += t_pow(w1);
  }
  for (const auto& v : d.vertices) {
    auto& line = m.entries[row++];
    long long prefix = 0;
    for (const auto& inc : v.incident) {
      int e = eps(inc.dir);
      long long wi = edge_weight(inc.segment);
      line[arcs.arc_of.at(inc.segment)] += t_pow(prefix + std::min(e, 0) * wi, e);
      prefix += e * wi;
    }
  }
  return m;
}

LaurentPoly gcd_of_minors(const AlexanderMatrix& m, std::size_t k) {
  check_minor_size(m.rows, m.cols, k);
  if (k == 0) return LaurentPoly::constant('t', 1);
  LaurentPoly g('t');
  for_each_subset(m.rows, k, [&](const std::vector<std::size_t>& rs) {
    return for_each_subset(m.cols, k, [&](const std::vector<std::size_t>& cs) {
      PolyMatrix minor(k, std::vector<LaurentPoly>(k, LaurentPoly('t')));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor[i][j] = m.entries[rs[i]][cs[j]];
      LaurentPoly det = bareiss_det(minor);
      if (!det.is_zero()) g = g.is_zero() ? normalize_units(det) : laurent_gcd(g, det);
      return !g.is_one();
    });
  });
  return g;
}

Integer gcd_of_minors(const IntMatrix& m, std::size_t rows, std::size_t cols, std::size_t k) {
  check_minor_size(rows, cols, k);
  if (k == 0) return 1;
  Integer g = 0;
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
    return for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
      IntMatrix minor(k, std::vector<Integer>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[rs[i]][cs[j]];
      g = boost::multiprecision::gcd(g, abs(bareiss_det(minor)));
      return g != 1;
    });
  });
  return g;
}

namespace {

// Closed components that never pass under anything: free loops, and closed
// arcs with no endpoint at a crossing or vertex.
std::size_t endless_components(const Diagram& d, const ArcPartition& arcs) {
  std::vector<bool> has_end(arcs.arcs.size(), false);
  for (const auto& x : d.crossings) {
    has_end[arcs.arc_of.at(x.under_in)] = true;
    has_end[arcs.arc_of.at(x.under_out)] = true;
  }
  for (const auto& v : d.vertices)
    for (const auto& inc : v.incident) has_end[arcs.arc_of.at(inc.segment)] = true;
  return static_cast<std::size_t>(d.free_loops) + std::count(has_end.begin(), has_end.end(), false);
}

// Minor size r - 1, raised by one per endless component so that the same
// elementary ideal is taken whichever diagram is used. nullopt means the
// size is -1 (no relations at all) and the answer is 1.
struct MinorPlan {
  std::optional<std::size_t> size;
  bool vanishes = false;
};

MinorPlan minor_plan(const Diagram& d, const AlexanderMatrix& m) {
  if (m.rows > 0 && m.rows - 1 > m.cols)
    throw InvariantError("degenerate matrix: " + std::to_string(m.rows) + " relations but only " +
                         std::to_string(m.cols) + " arcs");
  long long k = static_cast<long long>(m.rows) - 1 + static_cast<long long>(endless_components(d, derive_arcs(d)));
  MinorPlan plan;
  if (k < 0) return plan;
  plan.size = static_cast<std::size_t>(k);
  plan.vanishes = *plan.size > std::min(m.rows, m.cols);
  return plan;
}

}  // namespace

LaurentPoly alexander_polynomial(const Diagram& d, const WeightMap& w) {
  AlexanderMatrix m = build_alexander_matrix(d, w);
  MinorPlan plan = minor_plan(d, m);
  if (!plan.size) return LaurentPoly::constant('t', 1);
  if (plan.vanishes) return LaurentPoly('t');
  return gcd_of_minors(m, *plan.size);
}

Integer graph_determinant(const Diagram& d, const WeightMap& w) {
  AlexanderMatrix m = build_alexander_matrix(d, w);
  MinorPlan plan = minor_plan(d, m);
  if (!plan.size) return 1;
  if (plan.vanishes) return 0;
  IntMatrix ints(m.rows, std::vector<Integer>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) ints[i][j] = m.entries[i][j].evaluate(-1);
  return gcd_of_minors(ints, m.rows, m.cols, *plan.size);
}

Word free_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) out.pop_back();
    else out.push_back(letter);
  }
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << std::abs(w[i]);
    if (w[i] < 0) os << "^-1";
  }
  return os.str();
}

Presentation wirtinger_presentation(const Diagram& d) {
  require_valid(d);
  ArcPartition arcs = derive_arcs(d);
  Presentation p;
  p.generators = arcs.arcs.size();
  for (const auto& x : d.crossings) {
    Roles r = roles(x, arcs);
    p.relators.push_back(free_reduce({-(r.c + 1), -(r.b + 1), r.a + 1, r.b + 1}));
  }
  for (const auto& v : d.vertices) {
    Word w;
    for (const auto& inc : v.incident) w.push_back(eps(inc.dir) * (arcs.arc_of.at(inc.segment) + 1));
    p.relators.push_back(free_reduce(w));
  }
  return p;
}

std::size_t abelianization_rank(const Presentation& p) {
  // Rank of the exponent-sum matrix by fraction-free elimination.
  IntMatrix m;
  for (const auto& r : p.relators) {
    std::vector<Integer> row(p.generators, 0);
    for (int letter : r) row[std::abs(letter) - 1] += letter > 0 ? 1 : -1;
    m.push_back(row);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < p.generators && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      Integer f = m[i][col], g = m[rank][col];
      for (std::size_t j = col; j < p.generators; ++j) m[i][j] = m[i][j] * g - m[rank][j] * f;
    }
    ++rank;
  }
  return p.generators - rank;
}

}  // namespace sginv
