#include "doctest.h"

#include "fixtures.hpp"
#include "printers.hpp"
#include "sginv/moves.hpp"
#include "sginv/yamada.hpp"

#include <numeric>
#include <random>

using namespace sginv;
using sginv::testing::corpus_names;
using sginv::testing::fixture;

namespace {

LaurentPoly A(int e, int c = 1) { return LaurentPoly::monomial('A', c, e); }
LaurentPoly one() { return A(0); }

LaurentPoly bouquet_value(unsigned n) { return -(-yamada_sigma()).pow(n); }

AbstractGraph bouquet(int n) {
  AbstractGraph g;
  g.vertex_count = 1;
  for (int i = 0; i < n; ++i) g.add_edge(0, 0);
  return g;
}

// Spanning-subgraph expansion:
//   R(G) = sigma^f (-1)^|V| sum_S (-1)^|S| (1 + sigma)^b(S)
// with b the cycle rank of (V, S).
LaurentPoly subset_oracle(const AbstractGraph& g) {
  const std::size_t m = g.edges.size();
  LaurentPoly total('A');
  LaurentPoly y = one() + yamada_sigma();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    unsigned cycles = 0, size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      ++size;
      int a = find(g.edges[i].first), b = find(g.edges[i].second);
      if (a == b) ++cycles;
      else parent[a] = b;
    }
    LaurentPoly term = y.pow(cycles);
    total += size % 2 ? -term : term;
  }
  if (g.vertex_count % 2) total = -total;
  return total * yamada_sigma().pow(g.free_loops);
}

AbstractGraph random_graph(std::mt19937& rng) {
  AbstractGraph g;
  g.vertex_count = static_cast<int>(rng() % 4);
  g.free_loops = static_cast<int>(rng() % 2);
  if (g.vertex_count == 0) return g;
  int edges = static_cast<int>(rng() % 7);
  for (int i = 0; i < edges; ++i) g.add_edge(rng() % g.vertex_count, rng() % g.vertex_count);
  return g;
}

}  // namespace

TEST_CASE("eval_crossing_free examples") {
  LaurentPoly sigma = yamada_sigma();
  CHECK(sigma == A(-1) + one() + A(1));
  CHECK(eval_crossing_free(AbstractGraph{}) == one());
  CHECK(eval_crossing_free(bouquet(0)) == -one());
  CHECK(eval_crossing_free(bouquet(2)) == A(2, -1) + A(1, -2) + A(0, -3) + A(-1, -2) + A(-2, -1));
  for (unsigned n = 0; n <= 4; ++n) CHECK(eval_crossing_free(bouquet(n)) == bouquet_value(n));

  AbstractGraph theta;
  theta.vertex_count = 2;
  for (int i = 0; i < 3; ++i) theta.add_edge(0, 1);
  CHECK(eval_crossing_free(theta) == A(2, -1) + A(1, -1) + A(0, -2) + A(-1, -1) + A(-2, -1));

  AbstractGraph bar;
  bar.vertex_count = 2;
  bar.add_edge(0, 1);
  CHECK(eval_crossing_free(bar).is_zero());

  AbstractGraph loops;
  loops.free_loops = 2;
  CHECK(eval_crossing_free(loops) == sigma * sigma);
}

TEST_CASE("eval_crossing_free agrees with the subset expansion") {
  std::mt19937 rng(29);
  YamadaMemo shared;
  for (int trial = 0; trial < 300; ++trial) {
    AbstractGraph g = random_graph(rng);
    LaurentPoly expected = subset_oracle(g);
    CHECK(eval_crossing_free(g) == expected);
    CHECK(eval_crossing_free(g, &shared) == expected);
  }
  CHECK(shared.size() > 0);
}

TEST_CASE("memoized and fresh evaluation agree on the corpus") {
  YamadaMemo shared;
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    Diagram d = fixture(name);
    CHECK(yamada_raw(d, &shared) == yamada_raw(d));
    for (std::size_t c = d.crossings.size(); c-- > 0;) d = resolve_crossing(d, c, ResolveMode::V);
    AbstractGraph g = to_abstract_graph(d);
    if (g.edges.size() <= 16) CHECK(eval_crossing_free(g, &shared) == subset_oracle(g));
  }
}

TEST_CASE("yamada_raw examples") {
  LaurentPoly sigma = yamada_sigma();
  CHECK(yamada_raw(fixture("unknot")) == sigma);
  CHECK(yamada_raw(fixture("kinked_unknot")) == A(2) * sigma);
  Diagram two;
  two.free_loops = 2;
  CHECK(yamada_raw(two) == sigma * sigma);
  CHECK(yamada_raw(fixture("theta_trivial")) == sigma - sigma * sigma);
  CHECK(yamada_raw(Diagram{}) == one());
}

TEST_CASE("yamada_normalized examples") {
  YamadaResult unknot = yamada_normalized(fixture("unknot"));
  CHECK(unknot.min_power == -1);
  CHECK(unknot.normalized == A(0, -1) + A(1, -1) + A(2, -1));

  YamadaResult zero = normalize_yamada(LaurentPoly('A'));
  CHECK_FALSE(zero.min_power.has_value());
  CHECK(zero.normalized.is_zero());

  for (const auto& name : corpus_names()) {
    YamadaResult r = yamada_normalized(fixture(name));
    if (r.raw.is_zero()) continue;
    CHECK(r.normalized.min_degree() == 0);
    CHECK(r.normalized == r.raw.shifted(-*r.min_power, *r.min_power % 2 ? -1 : 1));
  }
}

TEST_CASE("move III and IV fixture pairs agree") {
  CHECK(yamada_raw(fixture("r3_left")) == yamada_raw(fixture("r3_right")));
  CHECK(yamada_raw(fixture("r3_mixed_left")) == yamada_raw(fixture("r3_mixed_right")));
  CHECK(yamada_raw(fixture("r4_over_left")) == yamada_raw(fixture("r4_over_right")));
  CHECK(yamada_raw(fixture("r4_under_left")) == yamada_raw(fixture("r4_under_right")));
  CHECK(yamada_raw(fixture("r4_over_left")) != yamada_sigma() * yamada_raw(fixture("theta_trivial")));
}

TEST_CASE("move I multiplies by A^2 or A^-2") {
  std::mt19937 rng(41);
  YamadaMemo memo;
  for (const auto& name : corpus_names()) {
    Diagram d = fixture(name);
    auto segs = segment_ids(d);
    if (segs.empty()) continue;
    LaurentPoly base = yamada_raw(d, &memo);
    YamadaResult norm = yamada_normalized(d, &memo);
    for (int chirality : {1, -1}) {
      CAPTURE(name);
      CAPTURE(chirality);
      Diagram k = apply_r1(d, segs[rng() % segs.size()], chirality);
      CHECK(yamada_raw(k, &memo) == base.shifted(2 * chirality));
      CHECK(yamada_normalized(k, &memo).normalized == norm.normalized);
    }
  }
}

TEST_CASE("move II leaves the raw polynomial unchanged") {
  std::mt19937 rng(43);
  YamadaMemo memo;
  auto names = corpus_names();
  int done = 0;
  for (int attempt = 0; done < 200 && attempt < 5000; ++attempt) {
    const std::string& name = names[rng() % names.size()];
    Diagram d = fixture(name);
    if (d.crossings.size() > 5) continue;
    auto segs = segment_ids(d);
    if (segs.size() < 2) continue;
    SegmentId a = segs[rng() % segs.size()], b = segs[rng() % segs.size()];
    int placements = a == b ? 0 : r2_placements(d, a, b);
    if (placements == 0) continue;
    R2Variant v{rng() % 2 == 0, static_cast<int>(rng() % placements)};
    CAPTURE(name);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(yamada_raw(apply_r2(d, a, b, v), &memo) == yamada_raw(d, &memo));
    ++done;
  }
  CHECK(done == 200);
}

TEST_CASE("disjoint unions multiply") {
  const std::vector<std::string> small = {"unknot", "theta_trivial", "kinked_unknot", "trefoil", "hopf_link", "k4"};
  YamadaMemo memo;
  for (const auto& x : small)
    for (const auto& y : small) {
      Diagram a = fixture(x), b = fixture(y);
      CHECK(yamada_raw(disjoint_union(a, b), &memo) == yamada_raw(a, &memo) * yamada_raw(b, &memo));
    }
}

TEST_CASE("mirror image inverts the variable") {
  YamadaMemo memo;
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    Diagram d = fixture(name);
    CHECK(yamada_raw(mirror(d), &memo) == yamada_raw(d, &memo).inverted_variable());
  }
}

TEST_CASE("crossing order does not matter") {
  std::mt19937 rng(47);
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    Diagram d = fixture(name);
    LaurentPoly expected = yamada_raw(d);
    for (int trial = 0; trial < 3; ++trial) {
      CrossingChooser random_choice = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
      CHECK(yamada_raw(d, nullptr, random_choice) == expected);
    }
  }
}

TEST_CASE("invalid diagrams are rejected") {
  Diagram d = fixture("trefoil");
  d.crossings[0].under_in = 99;
  CHECK_THROWS_AS(yamada_raw(d), DiagramError);
}
