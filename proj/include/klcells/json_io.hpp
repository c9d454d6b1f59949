#pragma once

// JSON emission for every report type and a combined diagram parser.
// Objects serialize with sorted keys and length-then-lex element order, so
// emitted files diff cleanly.

#include <string>
#include <vector>

#include <json.hpp>

#include "klcells/cells.hpp"
#include "klcells/diagram.hpp"
#include "klcells/families.hpp"
#include "klcells/lifting.hpp"
#include "klcells/perm.hpp"
#include "klcells/rs.hpp"
#include "klcells/shapes.hpp"

namespace klcells {

using nlohmann::json;

inline json json_of(const Permutation& w) { return json(w.row()); }

inline json json_of(const Composition& c) { return json(c.parts()); }

inline json json_of(const Partition& p) { return json(p.parts()); }

inline json json_of(const Diagram& d) {
  json nodes = json::array();
  for (const Node& u : d.nodes()) nodes.push_back(json::array({u.row, u.col}));
  return json{{"nodes", nodes}};
}

inline json json_of(const StandardTableau& t) { return json{{"rows", t.rows()}}; }

inline json json_of(const RSPair& pq) {
  return json{{"P", json_of(pq.p)}, {"Q", json_of(pq.q)}};
}

inline json json_of(const CellReport& r) {
  json z = json::array(), y = json::array(), ys = json::array(), cell = json::array();
  for (const Permutation& e : r.z) z.push_back(json_of(e));
  for (const Permutation& e : r.rim) y.push_back(json_of(e));
  for (const Permutation& e : r.special) ys.push_back(json_of(e));
  for (const Permutation& e : r.cell) cell.push_back(json_of(e));
  json diagrams = json::array();
  for (const Diagram& d : r.diagrams) diagrams.push_back(json_of(d));
  json words = json::object();
  for (const auto& [key, word] : r.reduced_words) words[key] = json(word);
  return json{{"lambda", json_of(r.lambda)}, {"Z", z},    {"Y", y},
              {"Ys", ys},                    {"E", diagrams}, {"cell", cell},
              {"reduced_words", words}};
}

inline json json_of(const FamilyRim& f) {
  json out = json_of(cell_report(f.lambda));
  out["family"] = to_string(f.family);
  out["predicted_size"] = f.predicted_size;
  return out;
}

inline json json_of(const LiftReport& r) {
  json pairs = json::array();
  for (const LiftPair& p : r.pairs)
    pairs.push_back(json{{"z", json_of(p.z)},
                         {"z_prime", json_of(p.image)},
                         {"connector", json_of(p.connector)}});
  json checks = json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  json out{{"lambda", json_of(r.lambda)},
           {"target", json_of(r.target)},
           {"kind", r.kind},
           {"pairs", pairs},
           {"checks", checks}};
  if (r.kind == "k") {
    out["k"] = r.k;
    out["condition"] = r.condition;
  }
  return out;
}

inline json json_of(const BridgeReport& r) {
  return json{{"lambda", json_of(r.lambda)},
              {"target", json_of(r.target)},
              {"k", r.k},
              {"d_bar", json_of(r.d_bar)},
              {"d", json_of(r.d)},
              {"identity_holds", r.identity_holds},
              {"containment_holds", r.containment_holds}};
}

inline json json_of(const std::vector<CellId>& children) {
  json out = json::array();
  for (const CellId& c : children) out.push_back(json{{"Q", json_of(c.recording)}});
  return out;
}

inline json json_of(const std::vector<RestrictionPair>& parts) {
  json out = json::array();
  for (const RestrictionPair& p : parts)
    out.push_back(json{{"corner", json::array({p.corner.row, p.corner.col})},
                       {"expelled", p.expelled},
                       {"d", json_of(p.d)},
                       {"child_Q", json_of(p.child.recording)}});
  return out;
}

// Accepts either the {"nodes": [[r,c],...]} object or the ascii grid.
inline Diagram parse_diagram(const std::string& text) {
  size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    json obj = json::parse(text);
    std::vector<Node> nodes;
    for (const auto& pair : obj.at("nodes"))
      nodes.push_back(Node{pair.at(0).get<int>(), pair.at(1).get<int>()});
    return Diagram(std::move(nodes));
  }
  return parse_diagram_ascii(text);
}

}  // namespace klcells
