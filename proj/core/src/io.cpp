#include "omltopo/io.hpp"

#include <json.hpp>

namespace omltopo {

namespace {

using Json = nlohmann::ordered_json;

std::string dot_escape(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

LatticeSpec parse_lattice_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }

  LatticeSpec spec;
  try {
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("order") ||
        !doc.contains("ortho"))
      raise(ErrorKind::ParseError, "lattice JSON needs \"elements\", \"order\" and \"ortho\"");

    for (const auto& name : doc.at("elements"))
      spec.elements.push_back(name.get<std::string>());

    const auto& order = doc.at("order");
    const std::string kind = order.at("kind").get<std::string>();
    if (kind == "covers")
      spec.order_is_covers = true;
    else if (kind == "full")
      spec.order_is_covers = false;
    else
      raise(ErrorKind::ParseError, "order kind must be \"covers\" or \"full\"");
    for (const auto& pair : order.at("pairs")) {
      if (!pair.is_array() || pair.size() != 2)
        raise(ErrorKind::ParseError, "order pairs must be [i, j] arrays");
      spec.order_pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }

    for (const auto& [key, value] : doc.at("ortho").items())
      spec.ortho[key] = value.get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ParseError, std::string("malformed lattice JSON: ") + e.what());
  }
  return spec;
}

std::string lattice_to_json(const FiniteOml& lattice, int indent) {
  Json doc;
  doc["elements"] = lattice.names();
  Json pairs = Json::array();
  for (int a = 0; a < lattice.size(); ++a)
    for (int b = 0; b < lattice.size(); ++b)
      if (lattice.leq(a, b)) pairs.push_back(Json::array({a, b}));
  doc["order"] = Json{{"kind", "full"}, {"pairs", std::move(pairs)}};
  Json ortho = Json::object();
  for (int a = 0; a < lattice.size(); ++a) ortho[lattice.name(a)] = lattice.name(lattice.ortho(a));
  doc["ortho"] = std::move(ortho);
  return doc.dump(indent);
}

std::string lattice_to_dot(const FiniteOml& lattice) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (int x = 0; x < lattice.size(); ++x)
    out += "  \"" + dot_escape(lattice.name(x)) + "\";\n";
  for (const auto& [a, b] : lattice.cover_pairs())
    out += "  \"" + dot_escape(lattice.name(a)) + "\" -> \"" + dot_escape(lattice.name(b)) +
           "\";\n";
  out += "}\n";
  return out;
}

std::string report_to_json(const TopologyReport& report, const FiniteOml& lattice, int indent) {
  Json doc;
  doc["kind"] = std::string(to_string(report.family));
  doc["stabilization"] = report.stabilization;

  if (report.has_relations) {
    Json relations = Json::array();
    for (std::size_t n = 0; n < report.relations.size(); ++n) {
      Json pairs = Json::array();
      for (const auto& [a, b] : report.relations[n]) pairs.push_back(Json::array({a, b}));
      relations.push_back(Json{{"n", n}, {"pairs", std::move(pairs)}});
    }
    doc["relations"] = std::move(relations);
  }

  if (report.has_isolated) {
    Json isolated = Json::array();
    for (int x : report.isolated) isolated.push_back(lattice.name(x));
    doc["isolated"] = std::move(isolated);
  }

  if (report.has_balls) {
    Json balls = Json::object();
    for (const auto& [element, trace] : report.balls) {
      Json per_n = Json::object();
      for (std::size_t n = 0; n < trace.size(); ++n) {
        Json members = Json::array();
        for (int b : trace[n]) members.push_back(lattice.name(b));
        per_n[std::to_string(n)] = std::move(members);
      }
      balls[lattice.name(element)] = std::move(per_n);
    }
    doc["balls"] = std::move(balls);

    Json first_empty = Json::object();
    for (std::size_t i = 0; i < report.carrier.size(); ++i)
      first_empty[lattice.name(report.carrier[i])] = report.first_empty[i];
    doc["first_empty"] = std::move(first_empty);
  }

  if (!report.subsets.empty()) {
    Json subsets = Json::array();
    for (const auto& verdict : report.subsets) {
      Json names = Json::array();
      for (int x : verdict.subset) names.push_back(lattice.name(x));
      subsets.push_back(Json{{"subset", std::move(names)}, {"open", verdict.open}});
    }
    doc["subsets"] = std::move(subsets);
  }

  return doc.dump(indent);
}

}  // namespace omltopo
