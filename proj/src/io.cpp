#include "sginv/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace sginv {

using nlohmann::json;

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

SegmentId parse_segment(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v < 0) throw ParseError(where + ": negative segment id");
    return static_cast<SegmentId>(v);
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.size() >= 2 && s[0] == 's' &&
        std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; }) && s.size() < 11)
      return std::stoi(s.substr(1));
  }
  throw ParseError(where + ": segment id must look like \"s<k>\", got " + j.dump());
}

json segment_json(SegmentId s) { return "s" + std::to_string(s); }

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

}  // namespace

ParseError::ParseError(const std::string& what, int line, int column)
    : DiagramError(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what
                            : what),
      line_(line),
      column_(column) {}

DiagramDocument parse_document_unchecked(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("syntax error", line, col);
  }
  if (!root.is_object()) throw ParseError("document must be a JSON object");

  DiagramDocument doc;
  Diagram& d = doc.diagram;
  for (const auto& [key, value] : root.items()) {
    if (key != "vertices" && key != "crossings" && key != "free_loops" && key != "weights")
      throw ParseError("unknown key \"" + key + "\"");
  }
  if (auto it = root.find("vertices"); it != root.end()) {
    if (!it->is_array()) throw ParseError("\"vertices\" must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& jv = (*it)[i];
      std::string where = "vertices[" + std::to_string(i) + "]";
      if (!jv.is_object()) throw ParseError(where + ": expected object");
      VertexNode v;
      const json& id = field(jv, "id", where);
      if (!id.is_number_integer()) throw ParseError(where + ": id must be an integer");
      v.id = id.get<int>();
      const json& inc = field(jv, "incident", where);
      if (!inc.is_array()) throw ParseError(where + ": incident must be an array");
      for (std::size_t k = 0; k < inc.size(); ++k) {
        std::string w = where + ".incident[" + std::to_string(k) + "]";
        const json& pair = inc[k];
        if (!pair.is_array() || pair.size() != 2 || !pair[1].is_string())
          throw ParseError(w + ": expected [segment, \"in\"|\"out\"]");
        const auto& dir = pair[1].get_ref<const std::string&>();
        if (dir != "in" && dir != "out") throw ParseError(w + ": direction must be \"in\" or \"out\"");
        v.incident.push_back({parse_segment(pair[0], w), dir == "in" ? Direction::In : Direction::Out});
      }
      d.vertices.push_back(std::move(v));
    }
  }
  if (auto it = root.find("crossings"); it != root.end()) {
    if (!it->is_array()) throw ParseError("\"crossings\" must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& jx = (*it)[i];
      std::string where = "crossings[" + std::to_string(i) + "]";
      if (!jx.is_object()) throw ParseError(where + ": expected object");
      Crossing x;
      x.over_in = parse_segment(field(jx, "over_in", where), where + ".over_in");
      x.over_out = parse_segment(field(jx, "over_out", where), where + ".over_out");
      x.under_in = parse_segment(field(jx, "under_in", where), where + ".under_in");
      x.under_out = parse_segment(field(jx, "under_out", where), where + ".under_out");
      const json& sign = field(jx, "sign", where);
      if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1))
        throw ParseError(where + ": sign must be 1 or -1");
      x.sign = sign.get<int>();
      d.crossings.push_back(x);
    }
  }
  if (auto it = root.find("free_loops"); it != root.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 0)
      throw ParseError("\"free_loops\" must be a nonnegative integer");
    d.free_loops = it->get<int>();
  }
  if (auto it = root.find("weights"); it != root.end()) {
    if (!it->is_object()) throw ParseError("\"weights\" must be an object");
    for (const auto& [name, w] : it->items()) {
      if (!w.is_number_integer()) throw ParseError("weight of " + name + " must be an integer");
      doc.weights[name] = w.get<long long>();
    }
  }
  std::stable_sort(d.vertices.begin(), d.vertices.end(),
                   [](const VertexNode& a, const VertexNode& b) { return a.id < b.id; });
  return doc;
}

DiagramDocument parse_document(const std::string& text) {
  DiagramDocument doc = parse_document_unchecked(text);
  require_valid(doc.diagram);
  return doc;
}

Diagram parse_diagram(const std::string& text) { return parse_document(text).diagram; }

std::string serialize(const DiagramDocument& doc) {
  const Diagram& d = doc.diagram;
  json root = json::object();
  json vertices = json::array();
  std::vector<const VertexNode*> order;
  for (const auto& v : d.vertices) order.push_back(&v);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->id < b->id; });
  for (const auto* v : order) {
    json inc = json::array();
    for (const auto& i : v->incident)
      inc.push_back(json::array({segment_json(i.segment), i.dir == Direction::In ? "in" : "out"}));
    vertices.push_back({{"id", v->id}, {"incident", inc}});
  }
  json crossings = json::array();
  for (const auto& x : d.crossings) {
    crossings.push_back({{"over_in", segment_json(x.over_in)},
                         {"over_out", segment_json(x.over_out)},
                         {"under_in", segment_json(x.under_in)},
                         {"under_out", segment_json(x.under_out)},
                         {"sign", x.sign}});
  }
  root["vertices"] = vertices;
  root["crossings"] = crossings;
  root["free_loops"] = d.free_loops;
  if (!doc.weights.empty()) root["weights"] = doc.weights;
  return root.dump(2) + "\n";
}

std::string serialize(const Diagram& d) { return serialize(DiagramDocument{d, {}}); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sginv
