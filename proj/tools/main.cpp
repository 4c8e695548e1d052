#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "omltopo/errors.hpp"

int main(int argc, char** argv) {
  using namespace omltopo::cli;

  CLI::App app{"omltopo: relation-chain topologies on finite orthomodular lattices"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags remain valid after the subcommand name

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format (json; csv for geom lemma/ladder; dot for check)");
  app.add_option("--seed", global.seed, "RNG seed for randomized sweeps")->default_val(0);
  app.add_option("--max-n", global.max_n, "Cap on emitted relation/ball depth");
  app.add_option("--tol", global.tol, "Tolerance override for numeric certificates");
  app.add_option("--out", global.out, "Write the report to this file (atomically)");

  std::string check_input;
  auto* check = app.add_subcommand("check", "Validate a lattice; report hypothesis verdicts");
  check->add_option("input", check_input, "Lattice file or gen: spec")->required();

  std::string rn_input, rn_family = "general";
  int rn_cap = -1;
  auto* rn = app.add_subcommand("rn", "Compute the stabilizing relation chain");
  rn->add_option("input", rn_input, "Lattice file or gen: spec")->required();
  rn->add_option("--family", rn_family, "at | general")->default_val("general");
  rn->add_option("--cap", rn_cap, "Element cap override for this run");

  std::string balls_input, balls_family = "general", balls_element;
  int balls_n = -1, balls_cap = -1;
  auto* balls = app.add_subcommand("balls", "Evaluate neighborhood balls");
  balls->add_option("input", balls_input, "Lattice file or gen: spec")->required();
  balls->add_option("--family", balls_family, "at | lattice | general")->default_val("general");
  balls->add_option("--element", balls_element, "Restrict to one element (by name)");
  balls->add_option("--n", balls_n, "Ball index n");
  balls->add_option("--cap", balls_cap, "Element cap override for this run");

  std::string topo_input, topo_family = "general";
  int topo_cap = -1;
  std::vector<std::string> topo_subsets;
  auto* topo = app.add_subcommand("topology", "Full report: relations, balls, isolated points");
  topo->add_option("input", topo_input, "Lattice file or gen: spec")->required();
  topo->add_option("--family", topo_family, "at | lattice | general")->default_val("general");
  topo->add_option("--cap", topo_cap, "Element cap override for this run");
  topo->add_option("--subset", topo_subsets, "Openness query: comma-separated element names (repeatable)");

  auto* geom = app.add_subcommand("geom", "Numeric verification on the projective sphere of R^3");
  geom->require_subcommand(1);

  int lemma_thetas = 50, lemma_grid = 400;
  auto* lemma = geom->add_subcommand("lemma", "Extremal-dot sweep with grid certificate");
  lemma->add_option("--thetas", lemma_thetas, "Number of theta samples")->default_val(50);
  lemma->add_option("--grid", lemma_grid, "Grid resolution per axis")->default_val(400);

  int ladder_n = 1000;
  auto* ladder = geom->add_subcommand("ladder", "Exact-rational angle ladder verification");
  ladder->add_option("--n", ladder_n, "Verify indices 0..n")->default_val(1000);

  int chain_n = 3, chain_trials = 100;
  auto* chain = geom->add_subcommand("chain", "Witness chains down to orthogonal pairs");
  chain->add_option("--n", chain_n, "Chain depth")->default_val(3);
  chain->add_option("--trials", chain_trials, "Number of random input pairs")->default_val(100);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  CommandResult result;
  if (*check) {
    result = run_check(check_input, global);
  } else if (*rn) {
    result = run_rn(rn_input, rn_family, rn_cap, global);
  } else if (*balls) {
    result = run_balls(balls_input, balls_family, balls_element, balls_n, balls_cap, global);
  } else if (*topo) {
    result = run_topology(topo_input, topo_family, topo_cap, topo_subsets, global);
  } else if (*geom) {
    if (*lemma) result = run_geom_lemma(lemma_thetas, lemma_grid, global);
    if (*ladder) result = run_geom_ladder(ladder_n, global);
    if (*chain) result = run_geom_chain(chain_n, chain_trials, global);
  }

  try {
    write_output(result.output, global.out);
  } catch (const omltopo::Error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return result.exit_code;
}
