// Command-line front end: optimal-error curves, region diagrams, oracle
// comparisons and Monte Carlo checks, all emitted as CSV (or JSON summaries
// for compare/simulate with --json). Angles are radians throughout.

#include <iostream>

#include <CLI11.hpp>

#include "frio/jobs.hpp"

namespace {

void add_output_options(CLI::App* cmd, frio::JobSpec& spec) {
  cmd->add_option("-o,--output", spec.output_path, "Write CSV to a file instead of stdout");
}

void add_oracle_options(CLI::App* cmd, frio::JobSpec& spec) {
  cmd->add_option("--grid", spec.oracle_grid, "Orientation grid size")->capture_default_str();
  cmd->add_option("--refine", spec.oracle_refine, "Refinement iteration budget")
      ->capture_default_str();
  cmd->add_option("--restarts", spec.oracle_restarts, "Inner-search random restarts")
      ->capture_default_str();
  cmd->add_option("--oracle-seed", spec.oracle_seed, "Oracle RNG seed")->capture_default_str();
  cmd->add_flag("--full-rank", spec.oracle_full_rank,
                "Also search full-rank inconclusive operators");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal quantum-state discrimination at a fixed inconclusive rate"};
  app.require_subcommand(1);

  frio::JobSpec spec;

  CLI::App* curve2 = app.add_subcommand(
      "curve-two-pure", "Optimal error curve for two pure states with arbitrary priors");
  curve2->add_option("--eta1", spec.eta1, "Prior of the first state, in (0,1)")->required();
  curve2->add_option("--cos-theta", spec.cos_theta, "State overlap, in [0,1)")->required();
  curve2->add_option("--q-min", spec.q_min, "Lower end of the q sweep")->capture_default_str();
  curve2->add_option("--q-max", spec.q_max, "Upper end of the q sweep (default 1)");
  curve2->add_option("--steps", spec.steps, "Number of samples")->capture_default_str();
  add_output_options(curve2, spec);

  CLI::App* curvet = app.add_subcommand(
      "curve-trine", "Optimal error curve for trine states at equal priors");
  curvet->add_option("--theta", spec.theta, "Trine half-angle in (0, pi/4], radians")->required();
  curvet->add_option("--q-min", spec.q_min, "Lower end of the q sweep")->capture_default_str();
  curvet->add_option("--q-max", spec.q_max, "Upper end of the q sweep (default 1)");
  curvet->add_option("--steps", spec.steps, "Number of samples")->capture_default_str();
  add_output_options(curvet, spec);

  CLI::App* regions = app.add_subcommand(
      "regions", "Critical and threshold rates across the prior axis");
  regions->add_option("--cos-theta", spec.cos_theta, "State overlap, in [0,1)")->required();
  regions->add_option("--steps", spec.steps, "Number of eta1 samples")->capture_default_str();
  add_output_options(regions, spec);

  CLI::App* compare = app.add_subcommand(
      "compare", "Closed form vs numerical oracle over a q sweep");
  compare->add_option("--eta1", spec.eta1, "Prior of the first state (two-pure mode)");
  compare->add_option("--cos-theta", spec.cos_theta, "State overlap (two-pure mode)");
  compare->add_option("--theta", spec.theta, "Trine half-angle (trine mode)");
  compare->add_option("--q-min", spec.q_min, "Lower end of the q sweep")->capture_default_str();
  compare->add_option("--q-max", spec.q_max, "Upper end of the q sweep (default q_c)");
  compare->add_option("--steps", spec.steps, "Number of samples")->capture_default_str();
  compare->add_flag("--json", spec.json, "Emit a JSON summary instead of CSV");
  add_oracle_options(compare, spec);
  add_output_options(compare, spec);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo check of the optimal strategy at one rate");
  simulate->add_option("--eta1", spec.eta1, "Prior of the first state (two-pure mode)");
  simulate->add_option("--cos-theta", spec.cos_theta, "State overlap (two-pure mode)");
  simulate->add_option("--theta", spec.theta, "Trine half-angle (trine mode)");
  simulate->add_option("--q", spec.q, "Inconclusive rate of the simulated strategy")->required();
  simulate->add_option("--trials", spec.trials, "Number of Monte Carlo trials")
      ->capture_default_str();
  simulate->add_option("--seed", spec.seed, "Monte Carlo seed")->capture_default_str();
  simulate->add_flag("--json", spec.json, "Emit a JSON summary instead of CSV");
  add_output_options(simulate, spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (curve2->parsed()) spec.command = frio::JobSpec::Command::curve_two_pure;
  if (curvet->parsed()) spec.command = frio::JobSpec::Command::curve_trine;
  if (regions->parsed()) spec.command = frio::JobSpec::Command::regions;
  if (compare->parsed()) spec.command = frio::JobSpec::Command::compare;
  if (simulate->parsed()) spec.command = frio::JobSpec::Command::simulate;

  if ((compare->parsed() || simulate->parsed())) {
    const bool trine = spec.theta >= 0.0;
    const bool two_pure = spec.eta1 >= 0.0 || spec.cos_theta >= 0.0;
    if (trine == two_pure) {
      std::cerr << "error: pass either --theta (trine) or --eta1/--cos-theta (two-pure)\n";
      return 2;
    }
  }

  return frio::run_job(spec, std::cout, std::cerr);
}
