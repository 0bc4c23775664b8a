#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace frio {

// A fully specified CLI job. The CLI front end only parses flags into this
// struct; everything else lives behind run_job so it can be tested
// in-process.
struct JobSpec {
  enum class Command { curve_two_pure, curve_trine, regions, compare, simulate };

  Command command = Command::curve_two_pure;

  double eta1 = -1.0;       // two-pure problems
  double cos_theta = -1.0;  // two-pure problems
  double theta = -1.0;      // trine problems (radians)

  double q_min = 0.0;
  double q_max = -1.0;  // negative: command-specific default
  int steps = 101;

  double q = -1.0;  // simulate
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 1;

  int oracle_grid = 720;
  int oracle_refine = 60;
  int oracle_restarts = 32;
  std::uint64_t oracle_seed = 1;
  bool oracle_full_rank = false;

  bool json = false;       // compare/simulate summary mode
  std::string output_path; // empty: stdout
};

// Exit codes: 0 success, 2 parameter validation failure, 3 numerical
// failure. Results go to `out` (or the spec's output path); diagnostics to
// `diag`.
int run_job(const JobSpec& spec, std::ostream& out, std::ostream& diag);

// Empty string when the spec is valid, otherwise a usage message.
std::string validate_job(const JobSpec& spec);

}  // namespace frio
