#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#ifndef SGINV_FIXTURE_DIR
#error "SGINV_FIXTURE_DIR must be defined"
#endif

namespace sginv::testing {

namespace {

int sign_of(double ox, double oy, double ux, double uy) { return ox * uy - oy * ux < 0 ? 1 : -1; }

}  // namespace

Diagram braid_closure(int strands, const std::vector<int>& word) {
  std::vector<SegmentId> start(strands), current(strands);
  SegmentId next = 1;
  for (int p = 0; p < strands; ++p) start[p] = current[p] = next++;
  Diagram d;
  for (int letter : word) {
    int i = std::abs(letter) - 1;
    if (i < 0 || i + 1 >= strands) throw std::invalid_argument("braid letter out of range");
    // Left strand heads (1,1), right strand heads (-1,1).
    SegmentId left_out = next++;   // strand leaving to the right position
    SegmentId right_out = next++;  // strand leaving to the left position
    Crossing x;
    if (letter > 0) {
      x = {current[i], left_out, current[i + 1], right_out, sign_of(1, 1, -1, 1)};
    } else {
      x = {current[i + 1], right_out, current[i], left_out, sign_of(-1, 1, 1, 1)};
    }
    d.crossings.push_back(x);
    current[i] = right_out;
    current[i + 1] = left_out;
  }
  std::map<SegmentId, SegmentId> rename;
  for (int p = 0; p < strands; ++p) {
    if (current[p] == start[p])
      ++d.free_loops;
    else
      rename[current[p]] = start[p];
  }
  for (auto& x : d.crossings)
    for (int s = 0; s < 4; ++s)
      if (auto it = rename.find(x.slot(s)); it != rename.end()) x.slot(s) = it->second;
  return d;
}

Diagram project_polylines(const std::vector<PolylineVertex>& vertices, const std::vector<PolylineEdge>& edges,
                          const std::vector<std::vector<Point3>>& loops) {
  std::map<int, Point3> where;
  std::map<int, int> vindex;
  for (const auto& v : vertices) {
    vindex[v.id] = static_cast<int>(where.size());
    where[v.id] = v.at;
  }
  struct Strand {
    std::vector<Point3> pts;
    bool closed;
  };
  std::vector<Strand> strands;
  for (const auto& e : edges) {
    Strand s{{where.at(e.from)}, false};
    s.pts.insert(s.pts.end(), e.via.begin(), e.via.end());
    s.pts.push_back(where.at(e.to));
    strands.push_back(std::move(s));
  }
  for (const auto& l : loops) strands.push_back({l, true});

  auto piece_count = [&](const Strand& s) { return s.closed ? s.pts.size() : s.pts.size() - 1; };
  auto piece = [&](const Strand& s, std::size_t j) {
    return std::pair{s.pts[j], s.pts[(j + 1) % s.pts.size()]};
  };

  struct Event {
    double pos;
    int crossing;
    bool over;
  };
  std::vector<std::vector<Event>> events(strands.size());
  struct Raw {
    double ox, oy, ux, uy;
  };
  std::vector<Raw> raw;
  const double eps = 1e-9;
  for (std::size_t a = 0; a < strands.size(); ++a) {
    for (std::size_t b = a; b < strands.size(); ++b) {
      for (std::size_t i = 0; i < piece_count(strands[a]); ++i) {
        for (std::size_t j = (a == b ? i + 1 : 0); j < piece_count(strands[b]); ++j) {
          auto [p, p2] = piece(strands[a], i);
          auto [q, q2] = piece(strands[b], j);
          double rx = p2[0] - p[0], ry = p2[1] - p[1];
          double sx = q2[0] - q[0], sy = q2[1] - q[1];
          double denom = rx * sy - ry * sx;
          if (std::abs(denom) < 1e-12) continue;
          double qpx = q[0] - p[0], qpy = q[1] - p[1];
          double t = (qpx * sy - qpy * sx) / denom;
          double u = (qpx * ry - qpy * rx) / denom;
          if (t <= eps || t >= 1 - eps || u <= eps || u >= 1 - eps) continue;
          double za = p[2] + t * (p2[2] - p[2]);
          double zb = q[2] + u * (q2[2] - q[2]);
          int id = static_cast<int>(raw.size());
          bool a_over = za > zb;
          raw.push_back(a_over ? Raw{rx, ry, sx, sy} : Raw{sx, sy, rx, ry});
          events[a].push_back({static_cast<double>(i) + t, id, a_over});
          events[b].push_back({static_cast<double>(j) + u, id, !a_over});
        }
      }
    }
  }

  Diagram d;
  d.crossings.resize(raw.size());
  for (std::size_t c = 0; c < raw.size(); ++c) d.crossings[c].sign = sign_of(raw[c].ox, raw[c].oy, raw[c].ux, raw[c].uy);
  SegmentId next = 1;
  struct End {
    SegmentId first;
    SegmentId last;
  };
  std::vector<End> strand_ends(strands.size());
  for (std::size_t k = 0; k < strands.size(); ++k) {
    auto& ev = events[k];
    std::sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) { return x.pos < y.pos; });
    if (strands[k].closed && ev.empty()) {
      ++d.free_loops;
      continue;
    }
    std::size_t nseg = strands[k].closed ? ev.size() : ev.size() + 1;
    std::vector<SegmentId> segs(nseg);
    for (auto& s : segs) s = next++;
    for (std::size_t m = 0; m < ev.size(); ++m) {
      SegmentId in = strands[k].closed ? segs[(m + nseg - 1) % nseg] : segs[m];
      SegmentId out = strands[k].closed ? segs[m] : segs[m + 1];
      Crossing& x = d.crossings[ev[m].crossing];
      if (ev[m].over) {
        x.over_in = in;
        x.over_out = out;
      } else {
        x.under_in = in;
        x.under_out = out;
      }
    }
    strand_ends[k] = {segs.front(), segs.back()};
  }

  std::vector<std::vector<std::pair<double, Incidence>>> around(vertices.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& pts = strands[k].pts;
    int from = vindex.at(edges[k].from), to = vindex.at(edges[k].to);
    double a0 = std::atan2(pts[1][1] - pts[0][1], pts[1][0] - pts[0][0]);
    std::size_t n = pts.size();
    double a1 = std::atan2(pts[n - 2][1] - pts[n - 1][1], pts[n - 2][0] - pts[n - 1][0]);
    around[from].push_back({a0, {strand_ends[k].first, Direction::Out}});
    around[to].push_back({a1, {strand_ends[k].last, Direction::In}});
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    auto& list = around[v];
    std::sort(list.begin(), list.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    VertexNode node{vertices[v].id, {}};
    for (auto& [angle, inc] : list) node.incident.push_back(inc);
    d.vertices.push_back(std::move(node));
  }
  std::sort(d.vertices.begin(), d.vertices.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  return d;
}

Diagram complete_graph_embedding(const std::vector<Point3>& points) {
  std::vector<PolylineVertex> vs;
  std::vector<PolylineEdge> es;
  for (std::size_t i = 0; i < points.size(); ++i) vs.push_back({static_cast<int>(i + 1), points[i]});
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) es.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1), {}});
  return project_polylines(vs, es);
}

DiagramDocument load_fixture(const std::string& name) {
  return parse_document(read_file(std::string(SGINV_FIXTURE_DIR) + "/" + name + ".json"));
}

Diagram fixture(const std::string& name) { return load_fixture(name).diagram; }

std::vector<std::string> corpus_names() {
  return {"unknot",        "theta_trivial", "kinked_unknot", "trefoil",        "figure_eight",
          "torus_2_5",     "hopf_link",     "theta_trefoil", "handcuff_hopf",  "k4",
          "bouquet_linked", "r3_left",      "r3_right",      "r3_mixed_left",  "r3_mixed_right",
          "r4_over_left",  "r4_over_right", "r4_under_left", "r4_under_right"};
}

}  // namespace sginv::testing
