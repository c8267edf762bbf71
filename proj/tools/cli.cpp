#include "cli.hpp"

#include "sginv/alexander.hpp"
#include "sginv/constituents.hpp"
#include "sginv/io.hpp"
#include "sginv/quandle.hpp"
#include "sginv/yamada.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <optional>

namespace sginv::cli {

namespace {

using nlohmann::json;

// Bad input: unreadable files, malformed documents, bad flag values.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DiagramDocument load(const std::string& path) {
  try {
    return parse_document(read_file(path));
  } catch (const ParseError& e) {
    std::string where = path;
    if (e.line() > 0) where += ":" + std::to_string(e.line()) + ":" + std::to_string(e.column());
    throw InputError(where + ": " + e.what());
  } catch (const DiagramError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Document weights overridden by --weight e<k>=<int> flags; every edge must
// end up with a weight and every key must name an edge.
WeightMap weights_for(const DiagramDocument& doc, const std::vector<std::string>& flags) {
  WeightMap w = doc.weights;
  for (const auto& f : flags) {
    auto eq = f.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--weight expects e<k>=<int>, got \"" + f + "\"");
    std::string name = f.substr(0, eq), value = f.substr(eq + 1);
    try {
      std::size_t used = 0;
      long long v = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      w[name] = v;
    } catch (const std::exception&) {
      throw InputError("--weight " + name + ": \"" + value + "\" is not an integer");
    }
  }
  EdgePartition ep = derive_edges(doc.diagram);
  for (std::size_t e = 0; e < ep.edges.size(); ++e)
    if (!w.count(edge_name(static_cast<int>(e))))
      throw InputError("missing weight for edge " + edge_name(static_cast<int>(e)));
  for (const auto& [name, value] : w) {
    bool known = false;
    for (std::size_t e = 0; e < ep.edges.size() && !known; ++e) known = edge_name(static_cast<int>(e)) == name;
    if (!known) throw InputError("weight given for unknown edge " + name);
  }
  return w;
}

std::string choice_text(const Diagram& d, const VertexChoice& c) {
  std::string s;
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (v) s += ' ';
    s += "v" + std::to_string(d.vertices[v].id) + ":" + std::to_string(c[v].first) + "," + std::to_string(c[v].second);
  }
  return s.empty() ? "-" : s;
}

int components(const Diagram& link) {
  EdgePartition ep = derive_edges(link);
  return ep.knot_components() + ep.free_loops;
}

void emit(std::ostream& out, bool as_json, const json& j, const std::string& text) {
  if (as_json) out << j.dump() << '\n';
  else out << text << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of spatial graph diagrams", "sginv"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");

  std::string file;
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "diagram document")->required(); };

  auto* validate_cmd = app.add_subcommand("validate", "List structural violations");
  add_file(validate_cmd);

  auto* yamada_cmd = app.add_subcommand("yamada", "Yamada polynomial");
  add_file(yamada_cmd);
  bool normalized = false;
  long long max_crossings = 18;
  yamada_cmd->add_flag("--normalized", normalized, "Normalize by -(-A)^-m");
  yamada_cmd->add_option("--max-crossings", max_crossings, "Refuse larger diagrams")
      ->envname("SGINV_MAX_CROSSINGS")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> weight_flags;
  auto* alexander_cmd = app.add_subcommand("alexander", "Weighted Alexander polynomial");
  add_file(alexander_cmd);
  alexander_cmd->add_option("--weight", weight_flags, "Edge weight e<k>=<int>");
  auto* determinant_cmd = app.add_subcommand("determinant", "Graph determinant");
  add_file(determinant_cmd);
  determinant_cmd->add_option("--weight", weight_flags, "Edge weight e<k>=<int>");

  auto* colorings_cmd = app.add_subcommand("colorings", "Count quandle colorings");
  add_file(colorings_cmd);
  int dihedral = 0, trivial = 0;
  std::string quandle_file;
  auto* dih = colorings_cmd->add_option("--dihedral", dihedral, "Dihedral quandle of order n")->check(CLI::PositiveNumber);
  auto* triv = colorings_cmd->add_option("--trivial", trivial, "Trivial quandle of order n")->check(CLI::PositiveNumber);
  auto* qf = colorings_cmd->add_option("--quandle", quandle_file, "Quandle table (JSON)");
  dih->excludes(triv)->excludes(qf);
  triv->excludes(qf);

  auto* pcolor_cmd = app.add_subcommand("pcolor", "Fox p-colorability");
  add_file(pcolor_cmd);
  int p = 0;
  pcolor_cmd->add_option("--p", p, "Odd prime")->required();

  auto* constituents_cmd = app.add_subcommand("constituents", "Constituent links and their invariants");
  add_file(constituents_cmd);
  std::string invariant_name;
  bool drop_empty = false;
  constituents_cmd->add_option("--invariant", invariant_name, "yamada, alexander or determinant")
      ->required()
      ->check(CLI::IsMember({"yamada", "alexander", "determinant"}));
  constituents_cmd->add_flag("--drop-empty", drop_empty, "Omit empty constituents");

  auto* group_cmd = app.add_subcommand("group", "Wirtinger presentation");
  add_file(group_cmd);
  auto* cg_cmd = app.add_subcommand("cg", "Sum of Arf invariants over Hamiltonian cycles");
  add_file(cg_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*colorings_cmd && !*dih && !*triv && !*qf)
      throw CLI::RequiredError("one of --dihedral, --trivial, --quandle");
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    DiagramDocument doc;
    if (*validate_cmd) {
      try {
        doc = parse_document_unchecked(read_file(file));
      } catch (const ParseError& e) {
        std::string where = file;
        if (e.line() > 0) where += ":" + std::to_string(e.line()) + ":" + std::to_string(e.column());
        throw InputError(where + ": " + e.what());
      }
      auto violations = validate(doc.diagram);
      json list = json::array();
      std::string text = violations.empty() ? "valid" : "";
      for (std::size_t i = 0; i < violations.size(); ++i) {
        list.push_back(to_string(violations[i]));
        text += (i ? "\n" : "") + to_string(violations[i]);
      }
      emit(out, as_json, {{"valid", violations.empty()}, {"violations", list}}, text);
      return violations.empty() ? 0 : 1;
    }

    doc = load(file);
    const Diagram& d = doc.diagram;

    if (*yamada_cmd) {
      if (static_cast<long long>(d.crossings.size()) > max_crossings)
        throw std::runtime_error("diagram has " + std::to_string(d.crossings.size()) + " crossings, above the cap of " +
                                 std::to_string(max_crossings) + " (--max-crossings or SGINV_MAX_CROSSINGS)");
      if (normalized) {
        YamadaResult r = yamada_normalized(d);
        json j{{"yamada_normalized", to_json(r.normalized)}};
        j["min_power"] = r.min_power ? json(*r.min_power) : json(nullptr);
        emit(out, as_json, j, to_string(r.normalized));
      } else {
        LaurentPoly r = yamada_raw(d);
        emit(out, as_json, {{"yamada", to_json(r)}}, to_string(r));
      }
    } else if (*alexander_cmd) {
      LaurentPoly a = alexander_polynomial(d, weights_for(doc, weight_flags));
      emit(out, as_json, {{"alexander", to_json(a)}}, to_string(a));
    } else if (*determinant_cmd) {
      Integer det = graph_determinant(d, weights_for(doc, weight_flags));
      emit(out, as_json, {{"determinant", integer_to_json(det)}}, det.str());
    } else if (*colorings_cmd) {
      std::optional<FiniteQuandle> q;
      try {
        if (dihedral) q = dihedral_quandle(dihedral);
        else if (trivial) q = trivial_quandle(trivial);
        else q = parse_quandle(read_file(quandle_file));
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
      Integer n = count_colorings(d, *q);
      emit(out, as_json, {{"colorings", integer_to_json(n)}}, n.str());
    } else if (*pcolor_cmd) {
      bool yes;
      try {
        yes = is_p_colorable(d, p);
      } catch (const QuandleError& e) {
        throw InputError(e.what());
      }
      emit(out, as_json, {{"p", p}, {"p_colorable", yes}}, yes ? "yes" : "no");
    } else if (*constituents_cmd) {
      ConstituentInvariant inv = parse_constituent_invariant(invariant_name);
      YamadaMemo memo;
      json members = json::array();
      std::string text;
      std::vector<std::string> fingerprint;
      for_each_constituent(d, [&](const ConstituentLink& c) {
        bool empty = c.diagram.empty();
        if (empty && drop_empty) return;
        std::optional<std::string> value;
        if (!empty) {
          value = constituent_value(c.diagram, inv, &memo);
          fingerprint.push_back(*value);
        }
        json choice = json::array();
        for (std::size_t v = 0; v < c.choice.size(); ++v)
          choice.push_back({d.vertices[v].id, c.choice[v].first, c.choice[v].second});
        members.push_back({{"choice", choice},
                           {"components", components(c.diagram)},
                           {"fingerprint", value ? json(*value) : json(nullptr)}});
        text += choice_text(d, c.choice) + "\t" + std::to_string(components(c.diagram)) + "\t" +
                (value ? *value : "empty") + "\n";
      });
      // Same order as constituent_fingerprint.
      if (inv == ConstituentInvariant::Determinant)
        std::sort(fingerprint.begin(), fingerprint.end(), [](const std::string& a, const std::string& b) {
          return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
      else
        std::sort(fingerprint.begin(), fingerprint.end());
      std::string summary = "fingerprint:";
      for (const auto& f : fingerprint) summary += " [" + f + "]";
      emit(out, as_json, {{"constituents", members}, {"fingerprint", fingerprint}}, text + summary);
    } else if (*group_cmd) {
      Presentation pres = wirtinger_presentation(d);
      json gens = json::array(), rels = json::array();
      std::string text = "generators:";
      for (std::size_t g = 1; g <= pres.generators; ++g) {
        gens.push_back("x" + std::to_string(g));
        text += " x" + std::to_string(g);
      }
      text += "\nrelators:";
      for (const auto& r : pres.relators) {
        rels.push_back(to_string(r));
        text += "\n  " + to_string(r);
      }
      emit(out, as_json, {{"generators", gens}, {"relators", rels}}, text);
    } else if (*cg_cmd) {
      auto cycles = hamiltonian_constituents(d);
      int sum = conway_gordon_sum(d);
      emit(out, as_json, {{"conway_gordon", sum}, {"hamiltonian_cycles", cycles.size()}}, std::to_string(sum));
    }
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace sginv::cli
