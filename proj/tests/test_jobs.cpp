#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "frio/jobs.hpp"

using namespace frio;

namespace {

struct JobRun {
  int exit_code;
  std::string csv;
  std::string diag;
};

JobRun run(const JobSpec& spec) {
  std::ostringstream out, err;
  const int code = run_job(spec, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

TEST_CASE("two-pure curve job emits the documented schema") {
  JobSpec spec;
  spec.command = JobSpec::Command::curve_two_pure;
  spec.eta1 = 0.5;
  spec.cos_theta = 0.5;
  spec.steps = 51;

  const JobRun result = run(spec);
  REQUIRE(result.exit_code == 0);
  const auto lines = lines_of(result.csv);
  REQUIRE(lines.size() == 52);
  CHECK(lines[0] == "q,pe_min,pe_conditional,regime");

  const auto first = split_csv(lines[1]);
  CHECK(first[0] == "0");
  CHECK(first[3] == "me-point");
  const auto last = split_csv(lines.back());
  CHECK(last[0] == "1");
  CHECK(last[1] == "0");
  CHECK(last[3] == "linear-tail");

  // Deterministic output.
  CHECK(run(spec).csv == result.csv);
}

TEST_CASE("trine curve switches regime at the critical rate") {
  JobSpec spec;
  spec.command = JobSpec::Command::curve_trine;
  spec.theta = 0.314159265358979;  // pi/10
  spec.steps = 101;

  const JobRun result = run(spec);
  REQUIRE(result.exit_code == 0);
  const auto lines = lines_of(result.csv);
  REQUIRE(lines.size() == 102);

  double switch_q = -1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    if (fields[3] == "linear-tail") {
      switch_q = std::stod(fields[0]);
      break;
    }
  }
  // cos(pi/5) = 0.809017; the switch lands at the first grid point past it.
  CHECK(switch_q == doctest::Approx(0.8090169943749475).epsilon(0.011));

  // The conditional error column is constant 1/3 on the tail.
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    if (fields[3] != "linear-tail") continue;
    CHECK(std::stod(fields[2]) == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  }
}

TEST_CASE("regions job sweeps the prior axis") {
  JobSpec spec;
  spec.command = JobSpec::Command::regions;
  spec.cos_theta = 0.5;
  spec.steps = 201;

  const JobRun result = run(spec);
  REQUIRE(result.exit_code == 0);
  const auto lines = lines_of(result.csv);
  REQUIRE(lines.size() == 202);
  CHECK(lines[0] == "eta1,q_c,q_th,region");

  bool seen_one = false, seen_two = false, seen_three = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    const double eta1 = std::stod(fields[0]);
    const double q_c = std::stod(fields[1]);
    const double q_th = std::stod(fields[2]);
    const std::string& region = fields[3];
    if (region == "I") {
      seen_one = true;
      CHECK(eta1 < 0.2);
      CHECK(q_th < q_c);
    } else if (region == "II") {
      seen_two = true;
      CHECK(eta1 >= 0.2 - 1e-9);
      CHECK(eta1 <= 0.8 + 1e-9);
      CHECK(q_th >= q_c - 1e-12);
    } else {
      seen_three = true;
      CHECK(eta1 > 0.8);
      CHECK(q_th < q_c);
    }
    // The two rate curves cross at the region boundaries.
    if (std::abs(eta1 - 0.2) < 0.006 || std::abs(eta1 - 0.8) < 0.006) {
      CHECK(std::abs(q_c - q_th) < 0.02);
    }
  }
  CHECK(seen_one);
  CHECK(seen_two);
  CHECK(seen_three);
}

TEST_CASE("compare job stays within the oracle tolerance") {
  JobSpec spec;
  spec.command = JobSpec::Command::compare;
  spec.eta1 = 0.5;
  spec.cos_theta = 0.5;
  spec.steps = 5;
  spec.oracle_grid = 240;
  spec.oracle_restarts = 8;

  const JobRun result = run(spec);
  REQUIRE(result.exit_code == 0);
  const auto lines = lines_of(result.csv);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "q,pe_closed,pe_oracle,delta,status");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    CHECK(std::abs(std::stod(fields[3])) < 1e-3);
    CHECK(fields[4] == "ok");
  }
}

TEST_CASE("compare job emits a JSON summary on request") {
  JobSpec spec;
  spec.command = JobSpec::Command::compare;
  spec.theta = 0.5;
  spec.steps = 3;
  spec.oracle_grid = 120;
  spec.oracle_restarts = 6;
  spec.json = true;

  const JobRun result = run(spec);
  REQUIRE(result.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(result.csv);
  CHECK(j["command"] == "compare");
  CHECK(j["ensemble"] == "trine");
  CHECK(j["rows"].size() == 3);
  CHECK(j["max_abs_delta"].get<double>() < 1e-3);
}

TEST_CASE("simulate job reports reference, empirical and z-scores") {
  JobSpec spec;
  spec.command = JobSpec::Command::simulate;
  spec.eta1 = 0.5;
  spec.cos_theta = 0.5;
  spec.q = 0.3;
  spec.trials = 50000;
  spec.seed = 11;

  const JobRun result = run(spec);
  REQUIRE(result.exit_code == 0);
  const auto lines = lines_of(result.csv);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "component,reference,empirical,std_error,z_score");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    CHECK(std::abs(std::stod(fields[4])) < 6.0);
  }

  spec.json = true;
  const JobRun js = run(spec);
  REQUIRE(js.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(js.csv);
  CHECK(j["trials"] == 50000);
  CHECK(j["reference"]["q_inconclusive"].get<double>() == doctest::Approx(0.3));
}

TEST_CASE("parameter validation produces usage errors") {
  JobSpec spec;
  spec.command = JobSpec::Command::curve_two_pure;
  spec.eta1 = 1.5;
  spec.cos_theta = 0.5;
  JobRun r = run(spec);
  CHECK(r.exit_code == 2);
  CHECK(r.diag.find("eta1") != std::string::npos);

  spec.eta1 = 0.5;
  spec.steps = 1;
  r = run(spec);
  CHECK(r.exit_code == 2);
  CHECK(r.diag.find("steps") != std::string::npos);

  JobSpec trine;
  trine.command = JobSpec::Command::curve_trine;
  trine.theta = 1.0;  // above pi/4
  r = run(trine);
  CHECK(r.exit_code == 2);
  CHECK(r.diag.find("theta") != std::string::npos);

  JobSpec sim;
  sim.command = JobSpec::Command::simulate;
  sim.eta1 = 0.5;
  sim.cos_theta = 0.5;
  sim.q = 0.7;  // beyond q_c = 0.5
  r = run(sim);
  CHECK(r.exit_code == 2);
  CHECK(r.diag.find("critical") != std::string::npos);
}
