#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>

#include <json.hpp>

#include "omltopo/geometry.hpp"
#include "omltopo/io.hpp"
#include "omltopo/topology.hpp"
#include "spec_parse.hpp"

namespace omltopo::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDefaultGeneralCap = 64;
constexpr int kDefaultAtomCap = 128;

std::string fmt(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

Json error_json(const Error& e) {
  Json err;
  err["kind"] = std::string(to_string(e.kind()));
  err["message"] = e.what();
  if (!e.witness().empty()) err["witness"] = e.witness();
  return Json{{"error", std::move(err)}};
}

CommandResult error_result(const std::string& command, const std::string& input, const Error& e) {
  Json doc;
  doc["command"] = command;
  if (!input.empty()) doc["input"] = input;
  // Keep the check-style verdict visible for validation failures.
  if (e.kind() == ErrorKind::NotOrthomodular) doc["orthomodular"] = false;
  if (e.kind() == ErrorKind::NotAPoset || e.kind() == ErrorKind::NotALattice ||
      e.kind() == ErrorKind::NotAnOrtholattice)
    doc["valid"] = false;
  doc.update(error_json(e));
  return {doc.dump(2), exit_code_for_error_kind(static_cast<int>(e.kind()))};
}

Family parse_family(const std::string& name) {
  const auto family = family_from_string(name);
  if (!family)
    raise(ErrorKind::ParseError, "unknown family \"" + name + "\" (expected at, lattice or general)");
  return *family;
}

void enforce_cap(const FiniteOml& lattice, Family family, int cap) {
  const int effective =
      cap > 0 ? cap : (family == Family::General ? kDefaultGeneralCap : kDefaultAtomCap);
  if (lattice.size() > effective)
    raise(ErrorKind::SizeLimit, "lattice has " + std::to_string(lattice.size()) +
                                    " elements; cap for this family is " +
                                    std::to_string(effective) + " (override with --cap)");
}

Json vec3_json(const geom::Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

}  // namespace

int exit_code_for_error_kind(int kind) {
  switch (static_cast<ErrorKind>(kind)) {
    case ErrorKind::IoError: return 3;
    case ErrorKind::ParseError: return 4;
    case ErrorKind::NotAPoset:
    case ErrorKind::NotALattice:
    case ErrorKind::NotAnOrtholattice:
    case ErrorKind::NotOrthomodular:
    case ErrorKind::NotALowerSet: return 5;
    case ErrorKind::NotAtomic:
    case ErrorKind::NoAtomProjection:
    case ErrorKind::NotAnAtom:
    case ErrorKind::DomainError:
    case ErrorKind::DimensionError:
    case ErrorKind::PreconditionError:
    case ErrorKind::DegenerateInput: return 6;
    case ErrorKind::CertificateFailure: return 7;
    case ErrorKind::SizeLimit: return 8;
  }
  return 1;
}

CommandResult run_check(const std::string& input, const GlobalOptions& global) {
  try {
    const FiniteOml lattice = load_lattice(input);
    if (global.format == "dot") return {lattice_to_dot(lattice), 0};
    if (!global.format.empty() && global.format != "json")
      raise(ErrorKind::ParseError, "check supports --format json or dot");

    Json doc;
    doc["command"] = "check";
    doc["input"] = input;
    doc["elements"] = lattice.size();
    doc["atoms"] = static_cast<int>(lattice.atoms().size());
    doc["orthomodular"] = true;
    doc["atomic"] = lattice.is_atomic();
    doc["atom_projection"] = lattice.has_atom_projection();
    return {doc.dump(2), 0};
  } catch (const Error& e) {
    return error_result("check", input, e);
  }
}

CommandResult run_rn(const std::string& input, const std::string& family, int cap,
                     const GlobalOptions& global) {
  try {
    const FiniteOml lattice = load_lattice(input);
    const Family fam = parse_family(family);
    enforce_cap(lattice, fam, cap);

    ReportOptions options;
    options.family = fam;
    options.max_n = global.max_n;
    options.include_balls = false;
    options.include_isolated = false;
    const TopologyReport report = topology_report(lattice, options);

    Json doc;
    doc["command"] = "rn";
    doc["input"] = input;
    doc.update(Json::parse(report_to_json(report, lattice)));
    return {doc.dump(2), 0};
  } catch (const Error& e) {
    return error_result("rn", input, e);
  }
}

CommandResult run_balls(const std::string& input, const std::string& family,
                        const std::string& element, int ball_n, int cap,
                        const GlobalOptions& global) {
  try {
    const FiniteOml lattice = load_lattice(input);
    const Family fam = parse_family(family);
    enforce_cap(lattice, fam, cap);

    if (!element.empty() && ball_n >= 0) {
      const int id = lattice.index_of(element);
      if (id < 0) raise(ErrorKind::ParseError, "unknown element \"" + element + "\"");
      TopologyEngine engine(lattice, fam);
      Json members = Json::array();
      for (int b : engine.ball(id, ball_n)) members.push_back(lattice.name(b));
      Json doc;
      doc["command"] = "balls";
      doc["input"] = input;
      doc["kind"] = std::string(to_string(fam));
      doc["element"] = element;
      doc["n"] = ball_n;
      doc["members"] = std::move(members);
      return {doc.dump(2), 0};
    }

    ReportOptions options;
    options.family = fam;
    options.max_n = ball_n >= 0 ? ball_n : global.max_n;
    options.include_relations = false;
    options.include_isolated = false;
    if (!element.empty()) {
      const int id = lattice.index_of(element);
      if (id < 0) raise(ErrorKind::ParseError, "unknown element \"" + element + "\"");
      options.ball_elements = std::vector<int>{id};
    }
    const TopologyReport report = topology_report(lattice, options);

    Json doc;
    doc["command"] = "balls";
    doc["input"] = input;
    doc.update(Json::parse(report_to_json(report, lattice)));
    return {doc.dump(2), 0};
  } catch (const Error& e) {
    return error_result("balls", input, e);
  }
}

CommandResult run_topology(const std::string& input, const std::string& family, int cap,
                           const std::vector<std::string>& subsets, const GlobalOptions& global) {
  try {
    const FiniteOml lattice = load_lattice(input);
    const Family fam = parse_family(family);
    enforce_cap(lattice, fam, cap);

    ReportOptions options;
    options.family = fam;
    options.max_n = global.max_n;
    for (const std::string& query : subsets) {
      std::vector<int> ids;
      std::size_t start = 0;
      while (start <= query.size()) {
        const std::size_t comma = query.find(',', start);
        const std::string name =
            query.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!name.empty()) {
          const int id = lattice.index_of(name);
          if (id < 0) raise(ErrorKind::ParseError, "unknown element \"" + name + "\" in --subset");
          ids.push_back(id);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      options.subsets.push_back(std::move(ids));
    }
    const TopologyReport report = topology_report(lattice, options);

    Json doc;
    doc["command"] = "topology";
    doc["input"] = input;
    doc.update(Json::parse(report_to_json(report, lattice)));
    return {doc.dump(2), 0};
  } catch (const Error& e) {
    return error_result("topology", input, e);
  }
}

CommandResult run_geom_lemma(int thetas, int grid, const GlobalOptions& global) {
  try {
    if (thetas < 1) raise(ErrorKind::DomainError, "need at least one theta sample");
    const double tol = global.tol < 0 ? 1e-6 : global.tol;
    const double lo = 0.05;
    const double hi = std::numbers::pi / 2 - 0.05;

    struct Row {
      double theta, closed_min, grid_min, refined_min, abs_err;
    };
    std::vector<Row> rows;
    double max_abs_err = 0.0;
    for (int i = 0; i < thetas; ++i) {
      const double theta = thetas == 1 ? lo : lo + (hi - lo) * i / (thetas - 1);
      const geom::DotRange range = geom::projected_dot_range(geom::Angle{theta}, grid, tol);
      const double abs_err = std::abs(range.refined_min - range.closed_min);
      max_abs_err = std::max(max_abs_err, abs_err);
      rows.push_back({theta, range.closed_min, range.grid_min, range.refined_min, abs_err});
    }

    if (global.format.empty() || global.format == "csv") {
      std::string csv = "theta,closed_form_min,grid_min,refined_min,abs_err\n";
      for (const Row& row : rows)
        csv += fmt(row.theta) + "," + fmt(row.closed_min) + "," + fmt(row.grid_min) + "," +
               fmt(row.refined_min) + "," + fmt(row.abs_err) + "\n";
      csv.pop_back();
      return {csv, 0};
    }
    if (global.format != "json") raise(ErrorKind::ParseError, "geom lemma supports csv or json");

    Json doc;
    doc["command"] = "geom lemma";
    doc["thetas"] = thetas;
    doc["grid"] = grid;
    doc["tolerance"] = tol;
    doc["max_abs_err"] = max_abs_err;
    Json out_rows = Json::array();
    for (const Row& row : rows)
      out_rows.push_back(Json{{"theta", row.theta},
                              {"closed_form_min", row.closed_min},
                              {"grid_min", row.grid_min},
                              {"refined_min", row.refined_min},
                              {"abs_err", row.abs_err}});
    doc["rows"] = std::move(out_rows);
    return {doc.dump(2), 0};
  } catch (const Error& e) {
    return error_result("geom lemma", "", e);
  }
}

CommandResult run_geom_ladder(int count, const GlobalOptions& global) {
  try {
    if (count < 0) raise(ErrorKind::DomainError, "ladder bound must be nonnegative");
    const geom::ThetaLadder ladder(count);

    bool recursion_matches = true;
    bool decreasing = true;
    for (int n = 0; n <= count; ++n) {
      if (!(ladder.cosine(n) == geom::ladder_cos(n))) recursion_matches = false;
      if (n > 0 && !(ladder.angle(n).radians < ladder.angle(n - 1).radians)) decreasing = false;
    }
    const bool theta0_ok = ladder.angle(0).radians == std::acos(0.0);
    if (!recursion_matches || !decreasing || !theta0_ok)
      raise(ErrorKind::CertificateFailure, "ladder recursion check failed");

    if (global.format == "csv") {
      std::string csv = "n,c_num,c_den,theta\n";
      for (int n = 0; n <= count; ++n)
        csv += std::to_string(n) + "," + std::to_string(ladder.cosine(n).num) + "," +
               std::to_string(ladder.cosine(n).den) + "," + fmt(ladder.angle(n).radians) + "\n";
      csv.pop_back();
      return {csv, 0};
    }
    if (!global.format.empty() && global.format != "json")
      raise(ErrorKind::ParseError, "geom ladder supports json or csv");

    Json doc;
    doc["command"] = "geom ladder";
    doc["n"] = count;
    doc["recursion_matches_closed_form"] = recursion_matches;
    doc["theta0_half_pi"] = theta0_ok;
    doc["strictly_decreasing"] = decreasing;
    return {doc.dump(2), 0};
  } catch (const Error& e) {
    return error_result("geom ladder", "", e);
  }
}

CommandResult run_geom_chain(int depth, int trials, const GlobalOptions& global) {
  try {
    if (depth < 0) raise(ErrorKind::DomainError, "chain depth must be nonnegative");
    if (trials < 1) raise(ErrorKind::DomainError, "need at least one trial");
    const double tol = global.tol < 0 ? 1e-7 : global.tol;
    const double half_pi = std::numbers::pi / 2;

    std::mt19937_64 rng(global.seed);
    const double theta_n = geom::ladder_angle(depth).radians;
    std::uniform_real_distribution<double> separation(theta_n, half_pi);

    Json chains = Json::array();
    double max_residual = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      const auto [a, b] = geom::random_line_pair(rng, geom::Angle{separation(rng)});
      const auto chain = geom::chain_witness(a, b, depth);

      Json links = Json::array();
      Json angles = Json::array();
      Json residuals = Json::array();
      for (std::size_t i = 0; i < chain.size(); ++i) {
        const double angle = geom::line_distance(chain[i].a, chain[i].b).radians;
        links.push_back(Json{{"a", vec3_json(chain[i].a.direction())},
                             {"b", vec3_json(chain[i].b.direction())}});
        angles.push_back(angle);
        // Levels below the input sit exactly on the ladder by construction.
        if (i > 0)
          residuals.push_back(
              std::abs(angle - geom::ladder_angle(depth - static_cast<int>(i)).radians));
      }
      const double final_residual =
          std::abs(geom::line_distance(chain.back().a, chain.back().b).radians - half_pi);
      max_residual = std::max(max_residual, final_residual);

      chains.push_back(Json{{"input",
                             Json{{"a", vec3_json(a.direction())},
                                  {"b", vec3_json(b.direction())},
                                  {"distance", geom::line_distance(a, b).radians}}},
                            {"chain", std::move(links)},
                            {"angles", std::move(angles)},
                            {"residuals", std::move(residuals)},
                            {"final_residual", final_residual}});
    }

    Json doc;
    doc["command"] = "geom chain";
    doc["n"] = depth;
    doc["trials"] = trials;
    doc["seed"] = global.seed;
    doc["tolerance"] = tol;
    doc["max_residual"] = max_residual;
    doc["chains"] = std::move(chains);
    return {doc.dump(2), max_residual <= tol ? 0 : 7};
  } catch (const Error& e) {
    return error_result("geom chain", "", e);
  }
}

void write_output(const std::string& output, const std::string& path) {
  if (path.empty()) {
    std::cout << output << "\n";
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path temp = target.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) raise(ErrorKind::IoError, "cannot write \"" + temp.string() + "\"");
    out << output << "\n";
  }
  fs::rename(temp, target);
}

}  // namespace omltopo::cli
