#include "frio/jobs.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "frio/closedform.hpp"
#include "frio/oracle.hpp"
#include "frio/simulate.hpp"

namespace frio {

namespace {

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

bool is_trine_job(const JobSpec& spec) { return spec.theta >= 0.0; }

OracleConfig oracle_config(const JobSpec& spec) {
  OracleConfig cfg;
  cfg.orientation_grid_size = spec.oracle_grid;
  cfg.refinement_iterations = spec.oracle_refine;
  cfg.random_restarts = spec.oracle_restarts;
  cfg.seed = spec.oracle_seed;
  cfg.allow_full_rank_pi0 = spec.oracle_full_rank;
  return cfg;
}

void run_curve_two_pure(const JobSpec& spec, std::ostream& out) {
  const TwoPureProblem p(spec.eta1, spec.cos_theta);
  const double q_max = spec.q_max < 0.0 ? 1.0 : spec.q_max;
  const FrioCurve curve = sample_two_pure_curve(p, spec.q_min, q_max, spec.steps);
  const double alpha = 0.0;  // two pure states admit unambiguous discrimination
  out << "q,pe_min,pe_conditional,regime\n";
  for (const FrioPoint& pt : curve.points) {
    const double cond = (1.0 - pt.q > 1e-12) ? pt.pe_min / (1.0 - pt.q) : alpha;
    out << g12(pt.q) << ',' << g12(pt.pe_min) << ',' << g12(cond) << ','
        << regime_name(pt.regime) << '\n';
  }
}

void run_curve_trine(const JobSpec& spec, std::ostream& out) {
  const double q_max = spec.q_max < 0.0 ? 1.0 : spec.q_max;
  const FrioCurve curve = sample_trine_curve(spec.theta, spec.q_min, q_max, spec.steps);
  const double alpha = trine_critical(spec.theta).alpha;
  out << "q,pe_min,pe_conditional,regime\n";
  for (const FrioPoint& pt : curve.points) {
    const double cond = (1.0 - pt.q > 1e-12) ? pt.pe_min / (1.0 - pt.q) : alpha;
    out << g12(pt.q) << ',' << g12(pt.pe_min) << ',' << g12(cond) << ','
        << regime_name(pt.regime) << '\n';
  }
}

void run_regions(const JobSpec& spec, std::ostream& out) {
  out << "eta1,q_c,q_th,region\n";
  for (int i = 0; i < spec.steps; ++i) {
    const double eta1 = static_cast<double>(i + 1) / (spec.steps + 1);
    const TwoPureProblem p(eta1, spec.cos_theta);
    out << g12(eta1) << ',' << g12(two_pure_qc(p)) << ',' << g12(two_pure_qth(p)) << ','
        << region_name(classify_region(p)) << '\n';
  }
}

void run_compare(const JobSpec& spec, std::ostream& out) {
  const bool trine = is_trine_job(spec);
  const Ensemble ensemble =
      trine ? trine_ensemble(spec.theta)
            : two_pure_ensemble(TwoPureProblem(spec.eta1, spec.cos_theta));
  const double q_c =
      trine ? trine_qc(spec.theta) : two_pure_qc(TwoPureProblem(spec.eta1, spec.cos_theta));
  const double q_max = spec.q_max < 0.0 ? q_c : spec.q_max;
  const OracleConfig cfg = oracle_config(spec);

  struct Row {
    double q = 0.0, closed = 0.0, oracle = 0.0, delta = 0.0;
    const char* status = "ok";
  };
  std::vector<Row> rows(spec.steps);
  for (int i = 0; i < spec.steps; ++i) {
    Row& row = rows[i];
    row.q = spec.q_min + (q_max - spec.q_min) * i / (spec.steps - 1);
    row.closed = trine ? trine_pe_min(spec.theta, row.q).pe_min
                       : two_pure_pe_min(TwoPureProblem(spec.eta1, spec.cos_theta), row.q).pe_min;
    try {
      const OracleResult res = optimize_fixed_q(ensemble, row.q, cfg);
      row.oracle = res.pe;
      row.delta = res.pe - row.closed;
      row.status = res.strategy_kind == StrategyKind::mixed ? "mixed" : "ok";
    } catch (const std::domain_error&) {
      row.oracle = std::nan("");
      row.delta = std::nan("");
      row.status = "infeasible";
    }
  }

  if (spec.json) {
    double max_abs_delta = 0.0;
    for (const Row& row : rows) {
      if (std::isfinite(row.delta)) max_abs_delta = std::max(max_abs_delta, std::abs(row.delta));
    }
    nlohmann::json j;
    j["command"] = "compare";
    j["ensemble"] = trine ? "trine" : "two-pure";
    j["steps"] = spec.steps;
    j["q_min"] = spec.q_min;
    j["q_max"] = q_max;
    j["max_abs_delta"] = max_abs_delta;
    j["rows"] = nlohmann::json::array();
    for (const Row& row : rows) {
      j["rows"].push_back({{"q", row.q},
                           {"pe_closed", row.closed},
                           {"pe_oracle", row.oracle},
                           {"delta", row.delta},
                           {"status", row.status}});
    }
    out << j.dump(2) << '\n';
    return;
  }

  out << "q,pe_closed,pe_oracle,delta,status\n";
  for (const Row& row : rows) {
    out << g12(row.q) << ',' << g12(row.closed) << ',' << g12(row.oracle) << ','
        << g12(row.delta) << ',' << row.status << '\n';
  }
}

void run_simulate(const JobSpec& spec, std::ostream& out) {
  const bool trine = is_trine_job(spec);
  const Ensemble ensemble =
      trine ? trine_ensemble(spec.theta)
            : two_pure_ensemble(TwoPureProblem(spec.eta1, spec.cos_theta));
  const Povm povm = trine
                        ? trine_optimal_povm(spec.theta, spec.q)
                        : two_pure_optimal_povm(TwoPureProblem(spec.eta1, spec.cos_theta), spec.q);
  const TrialReport report = estimate_rates(ensemble, povm, spec.trials, spec.seed);

  if (spec.json) {
    nlohmann::json j;
    j["command"] = "simulate";
    j["ensemble"] = trine ? "trine" : "two-pure";
    j["q"] = spec.q;
    j["trials"] = report.n_trials;
    j["seed"] = spec.seed;
    j["reference"] = {{"p_success", report.reference.p_success},
                      {"p_error", report.reference.p_error},
                      {"q_inconclusive", report.reference.q_inconclusive}};
    j["empirical"] = {{"p_success", report.empirical.p_success},
                      {"p_error", report.empirical.p_error},
                      {"q_inconclusive", report.empirical.q_inconclusive}};
    j["std_errors"] = report.std_errors;
    j["z_scores"] = report.z_scores;
    out << j.dump(2) << '\n';
    return;
  }

  const std::array<const char*, 3> names{"p_success", "p_error", "q_inconclusive"};
  const std::array<double, 3> ref{report.reference.p_success, report.reference.p_error,
                                  report.reference.q_inconclusive};
  const std::array<double, 3> emp{report.empirical.p_success, report.empirical.p_error,
                                  report.empirical.q_inconclusive};
  out << "component,reference,empirical,std_error,z_score\n";
  for (int c = 0; c < 3; ++c) {
    out << names[c] << ',' << g12(ref[c]) << ',' << g12(emp[c]) << ','
        << g12(report.std_errors[c]) << ',' << g12(report.z_scores[c]) << '\n';
  }
}

std::string validate_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    return std::string(name) + " must be in [0,1]";
  }
  return {};
}

}  // namespace

std::string validate_job(const JobSpec& spec) {
  using Command = JobSpec::Command;
  const bool needs_two_pure = spec.command == Command::curve_two_pure ||
                              spec.command == Command::regions;
  const bool needs_either = spec.command == Command::compare ||
                            spec.command == Command::simulate;

  if (spec.command == Command::curve_trine ||
      (needs_either && is_trine_job(spec))) {
    if (!(spec.theta > 0.0 && spec.theta <= std::numbers::pi / 4.0 + 1e-12)) {
      return "theta must be in (0, pi/4] radians";
    }
  }
  if (needs_two_pure || (needs_either && !is_trine_job(spec))) {
    if (spec.command != Command::regions && !(spec.eta1 > 0.0 && spec.eta1 < 1.0)) {
      return "eta1 must be in (0,1)";
    }
    if (!(spec.cos_theta >= 0.0 && spec.cos_theta < 1.0)) {
      return "cos-theta must be in [0,1)";
    }
  }
  if (spec.steps < 2) return "steps must be >= 2";

  if (spec.command == Command::curve_two_pure || spec.command == Command::curve_trine ||
      spec.command == Command::compare) {
    if (auto err = validate_probability(spec.q_min, "q-min"); !err.empty()) return err;
    if (spec.q_max >= 0.0) {
      if (auto err = validate_probability(spec.q_max, "q-max"); !err.empty()) return err;
      if (spec.q_min >= spec.q_max) return "q-min must be less than q-max";
    }
  }
  if (spec.command == Command::simulate) {
    if (auto err = validate_probability(spec.q, "q"); !err.empty()) return err;
    if (spec.trials < 1) return "trials must be >= 1";
    const double q_c = is_trine_job(spec)
                           ? trine_qc(spec.theta)
                           : two_pure_qc(TwoPureProblem(spec.eta1, spec.cos_theta));
    if (spec.q > q_c + 1e-12) {
      return "q exceeds the critical rate q_c = " + g12(q_c) +
             " (no pure optimal strategy to simulate)";
    }
  }
  if (spec.command == Command::compare) {
    if (spec.oracle_grid < 8) return "oracle grid must be >= 8";
    if (spec.oracle_refine < 1 || spec.oracle_restarts < 1) {
      return "oracle iteration counts must be >= 1";
    }
  }
  return {};
}

int run_job(const JobSpec& spec, std::ostream& out, std::ostream& diag) {
  const std::string usage_error = validate_job(spec);
  if (!usage_error.empty()) {
    diag << "error: " << usage_error << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!spec.output_path.empty()) {
    file.open(spec.output_path);
    if (!file) {
      diag << "error: cannot open output file " << spec.output_path << '\n';
      return 2;
    }
    sink = &file;
  }

  try {
    switch (spec.command) {
      case JobSpec::Command::curve_two_pure: run_curve_two_pure(spec, *sink); break;
      case JobSpec::Command::curve_trine: run_curve_trine(spec, *sink); break;
      case JobSpec::Command::regions: run_regions(spec, *sink); break;
      case JobSpec::Command::compare: run_compare(spec, *sink); break;
      case JobSpec::Command::simulate: run_simulate(spec, *sink); break;
    }
  } catch (const std::exception& ex) {
    diag << "error: " << ex.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace frio
