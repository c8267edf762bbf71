#include "sginv/quandle.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace sginv {

namespace {

std::size_t check_square(const QuandleTable& t, const char* what) {
  const std::size_t n = t.size();
  for (const auto& row : t)
    if (row.size() != n) throw QuandleError(std::string(what) + " table is not square");
  return n;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Inverse column maps, or nullopt when some column is not a bijection.
std::optional<QuandleTable> invert_columns(const QuandleTable& op) {
  const int n = static_cast<int>(op.size());
  QuandleTable inv(n, std::vector<int>(n, -1));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      int z = op[x][y];
      if (z < 0 || z >= n || inv[z][y] != -1) return std::nullopt;
      inv[z][y] = x;
    }
  return inv;
}

}  // namespace

std::string to_string(const QuandleViolation& v) {
  std::ostringstream os;
  os << v.axiom << " at";
  for (int w : v.witnesses) os << ' ' << w;
  return os.str();
}

std::vector<QuandleViolation> verify_quandle(const QuandleTable& op, const QuandleTable& inv) {
  const std::size_t n = check_square(op, "op");
  if (check_square(inv, "inv") != n) throw QuandleError("op and inv tables differ in order");
  const int m = static_cast<int>(n);
  std::vector<QuandleViolation> out;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (op[x][y] < 0 || op[x][y] >= m || inv[x][y] < 0 || inv[x][y] >= m) out.push_back({"range", {x, y}});
  if (!out.empty()) return out;
  for (int x = 0; x < m; ++x)
    if (op[x][x] != x) out.push_back({"axiom-1", {x}});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (inv[op[x][y]][y] != x || op[inv[x][y]][y] != x) out.push_back({"axiom-2", {x, y}});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (op[op[x][y]][z] != op[op[x][z]][op[y][z]]) out.push_back({"axiom-3", {x, y, z}});
  return out;
}

std::vector<QuandleViolation> verify_quandle(const QuandleTable& op) {
  const std::size_t n = check_square(op, "op");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (op[x][y] < 0 || op[x][y] >= static_cast<int>(n))
        return {{"range", {static_cast<int>(x), static_cast<int>(y)}}};
  auto inv = invert_columns(op);
  if (inv) return verify_quandle(op, *inv);
  const int m = static_cast<int>(n);
  std::vector<QuandleViolation> out;
  for (int x = 0; x < m; ++x)
    if (op[x][x] != x) out.push_back({"axiom-1", {x}});
  // Without inverses, axiom 2 fails exactly where a column map collides.
  for (int y = 0; y < m; ++y) {
    std::vector<int> seen(n, -1);
    for (int x = 0; x < m; ++x) {
      int z = op[x][y];
      if (seen[z] != -1) out.push_back({"axiom-2", {seen[z], x, y}});
      else seen[z] = x;
    }
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (op[op[x][y]][z] != op[op[x][z]][op[y][z]]) out.push_back({"axiom-3", {x, y, z}});
  return out;
}

FiniteQuandle FiniteQuandle::from_table(const QuandleTable& op) {
  auto violations = verify_quandle(op);
  if (!violations.empty()) throw QuandleError("not a quandle: " + to_string(violations.front()));
  FiniteQuandle q;
  q.op_ = op;
  q.inv_ = *invert_columns(op);
  return q;
}

FiniteQuandle dihedral_quandle(int n) {
  if (n < 1) throw QuandleError("dihedral quandle order must be at least 1");
  QuandleTable op(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) op[x][y] = ((2 * y - x) % n + n) % n;
  return FiniteQuandle::from_table(op);
}

FiniteQuandle trivial_quandle(int n) {
  if (n < 1) throw QuandleError("trivial quandle order must be at least 1");
  QuandleTable op(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) op[x][y] = x;
  return FiniteQuandle::from_table(op);
}

FiniteQuandle parse_quandle(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw QuandleError(std::string("quandle file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("op"))
    throw QuandleError("quandle file must be an object with \"n\" and \"op\"");
  for (const auto& [key, value] : j.items())
    if (key != "n" && key != "op") throw QuandleError("quandle file: unknown key \"" + key + "\"");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1) throw QuandleError("quandle file: bad \"n\"");
  const auto n = j["n"].get<std::size_t>();
  const auto& rows = j["op"];
  if (!rows.is_array() || rows.size() != n) throw QuandleError("quandle file: \"op\" must have n rows");
  QuandleTable op;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw QuandleError("quandle file: \"op\" rows must have n entries");
    std::vector<int> r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw QuandleError("quandle file: entries must be integers");
      r.push_back(e.get<int>());
    }
    op.push_back(r);
  }
  return FiniteQuandle::from_table(op);
}

namespace {

struct Relation {
  int a, b, c;  // c = a > b
};

class ColoringSearch {
 public:
  ColoringSearch(const Diagram& d, const FiniteQuandle& q) : q_(q) {
    ArcPartition arcs = derive_arcs(d);
    arc_count_ = arcs.arcs.size();
    for (const auto& x : d.crossings) {
      int under_in = arcs.arc_of.at(x.under_in), under_out = arcs.arc_of.at(x.under_out);
      int over = arcs.arc_of.at(x.over_in);
      relations_.push_back(x.sign > 0 ? Relation{under_in, over, under_out} : Relation{under_out, over, under_in});
    }
    for (const auto& v : d.vertices) {
      std::vector<std::pair<int, int>> word;
      for (const auto& inc : v.incident)
        word.push_back({arcs.arc_of.at(inc.segment), inc.dir == Direction::In ? 1 : -1});
      vertices_.push_back(word);
    }
    free_loops_ = d.free_loops;
  }

  Integer run() {
    std::vector<int> colors(arc_count_, -1);
    return search(colors);
  }

 private:
  bool propagate(std::vector<int>& colors) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : relations_) {
        int a = colors[r.a], b = colors[r.b], c = colors[r.c];
        if (b < 0) continue;
        if (a >= 0) {
          int want = q_.op(a, b);
          if (c < 0) {
            colors[r.c] = want;
            changed = true;
          } else if (c != want) {
            return false;
          }
        } else if (c >= 0) {
          colors[r.a] = q_.inv(c, b);
          changed = true;
        }
      }
    }
    return true;
  }

  // Number of extra free-loop colorings compatible with a full arc coloring,
  // or 0 if some vertex condition fails.
  Integer leaf(const std::vector<int>& colors) const {
    const int n = q_.order();
    std::vector<bool> fixed_by_all(n, true);
    for (const auto& word : vertices_) {
      std::vector<int> image(n);
      std::iota(image.begin(), image.end(), 0);
      for (int& x : image)
        for (auto [arc, e] : word) x = q_.act(x, colors[arc], e);
      for (int c : colors)
        if (image[c] != c) return 0;
      for (int x = 0; x < n; ++x)
        if (image[x] != x) fixed_by_all[x] = false;
    }
    Integer fixed = std::count(fixed_by_all.begin(), fixed_by_all.end(), true);
    return pow(fixed, static_cast<unsigned>(free_loops_));
  }

  Integer search(std::vector<int>& colors) const {
    std::size_t next = 0;
    while (next < colors.size() && colors[next] >= 0) ++next;
    if (next == colors.size()) return leaf(colors);
    Integer total = 0;
    for (int x = 0; x < q_.order(); ++x) {
      std::vector<int> trial = colors;
      trial[next] = x;
      if (propagate(trial)) total += search(trial);
    }
    return total;
  }

  const FiniteQuandle& q_;
  std::size_t arc_count_ = 0;
  std::vector<Relation> relations_;
  std::vector<std::vector<std::pair<int, int>>> vertices_;
  int free_loops_ = 0;
};

}  // namespace

Integer count_colorings(const Diagram& d, const FiniteQuandle& q) {
  require_valid(d);
  return ColoringSearch(d, q).run();
}

bool is_p_colorable(const Diagram& d, int p) {
  if (p % 2 == 0 || !is_prime(p)) throw QuandleError(std::to_string(p) + " is not an odd prime");
  // Every constant coloring is valid, so a non-constant one exists iff the
  // count exceeds p.
  return count_colorings(d, dihedral_quandle(p)) > p;
}

}  // namespace sginv
