#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace omltopo::cli {

/// Options shared by every subcommand. `format` empty means the command's
/// own default (json everywhere, csv for `geom lemma`).
struct GlobalOptions {
  std::string format;
  std::uint64_t seed = 0;
  int max_n = -1;
  double tol = -1.0;  // < 0: command default
  std::string out;    // empty: stdout
};

struct CommandResult {
  std::string output;
  int exit_code = 0;
};

/// Exit codes: 0 ok, 2 usage, 3 io, 4 parse, 5 lattice validation,
/// 6 hypothesis/argument, 7 certificate, 8 size limit.
int exit_code_for_error_kind(int kind);

CommandResult run_check(const std::string& input, const GlobalOptions& global);
CommandResult run_rn(const std::string& input, const std::string& family, int cap,
                     const GlobalOptions& global);
CommandResult run_balls(const std::string& input, const std::string& family,
                        const std::string& element, int ball_n, int cap,
                        const GlobalOptions& global);
CommandResult run_topology(const std::string& input, const std::string& family, int cap,
                           const std::vector<std::string>& subsets, const GlobalOptions& global);
CommandResult run_geom_lemma(int thetas, int grid, const GlobalOptions& global);
CommandResult run_geom_ladder(int count, const GlobalOptions& global);
CommandResult run_geom_chain(int depth, int trials, const GlobalOptions& global);

/// Writes output followed by a newline to `path` (atomically, via a
/// temporary file) or to stdout when the path is empty.
void write_output(const std::string& output, const std::string& path);

}  // namespace omltopo::cli
