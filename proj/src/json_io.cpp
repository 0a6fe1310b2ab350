#include "coverkit/json_io.hpp"

#include <limits>

namespace coverkit {

Json diagram_to_json(const LinkDiagram& d) {
  Json j;
  if (!d.name().empty()) j["name"] = d.name();
  j["crossings"] = Json::array();
  for (const auto& c : d.crossings())
    j["crossings"].push_back(
        Json{{"over", c.over}, {"under_in", c.under_in}, {"under_out", c.under_out}, {"sign", c.sign}});
  j["circles"] = d.split_circles();
  j["arcs"] = d.arcs();
  j["components"] = d.components();
  if (d.braid())
    j["braid"] = Json{{"word", d.braid()->word}, {"strands", d.braid()->strands}};
  return j;
}

LinkDiagram diagram_from_json(const Json& j) {
  if (j.is_string()) return builtin_diagram(j.get<std::string>());
  if (!j.is_object()) throw ParseError("diagram json: expected object or built-in name");

  std::vector<Crossing> crossings;
  for (const auto& cj : j.value("crossings", Json::array()))
    crossings.push_back(Crossing{cj.at("over").get<int>(), cj.at("under_in").get<int>(),
                                 cj.at("under_out").get<int>(), cj.at("sign").get<int>()});
  std::vector<int> circles = j.value("circles", std::vector<int>{});
  std::optional<BraidData> braid;
  if (j.contains("braid"))
    braid = BraidData{j["braid"].at("word").get<std::vector<int>>(),
                      j["braid"].at("strands").get<int>()};
  LinkDiagram d = LinkDiagram::build(std::move(crossings), std::move(circles), std::move(braid),
                                     j.value("name", std::string{}));
  // Derived fields, when present, must agree; this catches hand edits.
  if (j.contains("arcs") && j["arcs"].get<std::vector<int>>() != d.arcs())
    throw ParseError("diagram json: arcs field disagrees with crossings");
  if (j.contains("components") &&
      j["components"].get<std::vector<std::vector<int>>>() != d.components())
    throw ParseError("diagram json: components field disagrees with crossings");
  return d;
}

Json monodromy_to_json(const Monodromy& m) {
  Json j;
  j["diagram"] = m.diagram.name().empty() ? diagram_to_json(m.diagram) : Json(m.diagram.name());
  j["degree"] = m.degree;
  Json assign = Json::object();
  for (int a : m.diagram.arcs()) assign[std::to_string(a)] = one_line_str(m.at(a));
  j["assignment"] = std::move(assign);
  return j;
}

Monodromy monodromy_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("monodromy json: expected object");
  LinkDiagram d = diagram_from_json(j.at("diagram"));
  int degree = j.at("degree").get<int>();
  std::map<int, Permutation> assignment;
  for (const auto& [key, val] : j.at("assignment").items()) {
    int arc = 0;
    try {
      std::size_t pos = 0;
      arc = std::stoi(key, &pos);
      if (pos != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("monodromy json: bad arc key \"" + key + "\"");
    }
    assignment.emplace(arc, parse_permutation(val.get<std::string>(), degree));
  }
  return make_monodromy(std::move(d), degree, std::move(assignment));
}

Json abelian_to_json(const AbelianInvariants& ab) {
  Json j;
  j["rank"] = ab.rank;
  Json torsion = Json::array();
  for (const Int& t : ab.torsion) {
    if (t <= Int(std::numeric_limits<long long>::max()))
      torsion.push_back(t.convert_to<long long>());
    else
      torsion.push_back(t.str());
  }
  j["torsion"] = std::move(torsion);
  j["pretty"] = ab.str();
  return j;
}

Json report_to_json(const CoverReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["transitive"] = r.transitive;
  j["simple"] = r.simple;
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back(Json{{"label", c.label},
                         {"indices", c.indices.lengths},
                         {"preimage_components", c.preimage_components}});
  j["components"] = std::move(comps);
  if (r.h1) j["h1"] = abelian_to_json(*r.h1);
  return j;
}

Json fpgroup_to_json(const FpGroup& g) {
  Json j;
  j["generators"] = g.generators;
  Json rels = Json::array();
  for (const auto& r : g.relators) rels.push_back(word_str(g, r));
  j["relators"] = std::move(rels);
  return j;
}

namespace {

Json indices_to_json(const std::vector<std::pair<std::string, CycleType>>& v) {
  Json arr = Json::array();
  for (const auto& [label, ct] : v)
    arr.push_back(Json{{"component", label}, {"indices", ct.lengths}});
  return arr;
}

}  // namespace

Json certificate_to_json(const MoveCertificate& c) {
  Json j;
  j["operation"] = c.operation;
  j["old_degree"] = c.old_degree;
  j["new_degree"] = c.new_degree;
  j["indices_before"] = indices_to_json(c.indices_before);
  j["indices_after"] = indices_to_json(c.indices_after);
  j["h1_before"] = c.h1_before ? abelian_to_json(*c.h1_before) : Json(nullptr);
  j["h1_after"] = c.h1_after ? abelian_to_json(*c.h1_after) : Json(nullptr);
  return j;
}

Json triviality_to_json(const TrivialityReport& r) {
  Json j;
  j["verdict"] = triviality_name(r.verdict);
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

}  // namespace coverkit
