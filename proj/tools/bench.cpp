// Compares the serial reference implementations of the data-parallel
// kernels against their OpenMP counterparts: same seeds, same configs, and
// the outputs must agree bit for bit. Reports wall time and speedup.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "frio/closedform.hpp"
#include "frio/oracle.hpp"
#include "frio/simulate.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct BenchRow {
  const char* name;
  double serial_ms;
  double parallel_ms;
  bool identical;
};

void print_row(const BenchRow& row) {
  std::printf("%-34s %10.1f ms %10.1f ms %7.2fx   %s\n", row.name, row.serial_ms,
              row.parallel_ms, row.serial_ms / std::max(row.parallel_ms, 1e-9),
              row.identical ? "outputs identical" : "OUTPUTS DIFFER");
}

template <class F>
BenchRow run_pair(const char* name, F&& kernel) {
  // kernel(exec) returns a comparable summary value (bitwise via memcmp of
  // doubles packed in a string).
  auto t0 = Clock::now();
  const std::string serial = kernel(frio::ExecMode::serial);
  const double serial_ms = ms_since(t0);
  t0 = Clock::now();
  const std::string parallel = kernel(frio::ExecMode::parallel);
  const double parallel_ms = ms_since(t0);
  return {name, serial_ms, parallel_ms, serial == parallel};
}

std::string pack(const double* data, std::size_t n) {
  return std::string(reinterpret_cast<const char*>(data), n * sizeof(double));
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;

  const int oracle_points = quick ? 3 : 11;
  const std::uint64_t mc_trials = quick ? 200000 : 20000000;
  const int curve_steps = quick ? 2001 : 200001;
  const int trine_grid = quick ? 120 : 720;

  std::printf("threads available: %d\n", frio::max_threads());
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  const frio::TwoPureProblem problem(0.3, 0.5);
  const frio::Ensemble two_pure = frio::two_pure_ensemble(problem);

  print_row(run_pair("oracle sweep, two pure states", [&](frio::ExecMode exec) {
    frio::OracleConfig cfg;
    cfg.exec = exec;
    if (quick) cfg.orientation_grid_size = 240;
    std::string packed;
    const double q_c = frio::two_pure_qc(problem);
    for (int i = 0; i < oracle_points; ++i) {
      const double q = q_c * i / (oracle_points - 1);
      const double pe = frio::optimize_fixed_q(two_pure, q, cfg).pe;
      packed += pack(&pe, 1);
    }
    return packed;
  }));

  print_row(run_pair("oracle point, trine states", [&](frio::ExecMode exec) {
    frio::OracleConfig cfg;
    cfg.exec = exec;
    cfg.orientation_grid_size = trine_grid;
    const frio::Ensemble trine = frio::trine_ensemble(0.5);
    const double pe = frio::optimize_fixed_q(trine, 0.3, cfg).pe;
    return pack(&pe, 1);
  }));

  print_row(run_pair("born-rule sampling", [&](frio::ExecMode exec) {
    const frio::Povm povm = frio::two_pure_optimal_povm(problem, 0.2);
    const frio::TrialReport report =
        frio::estimate_rates(two_pure, povm, mc_trials, 42, exec);
    const double emp[3] = {report.empirical.p_success, report.empirical.p_error,
                           report.empirical.q_inconclusive};
    return pack(emp, 3);
  }));

  print_row(run_pair("curve sampling, two pure states", [&](frio::ExecMode exec) {
    const frio::FrioCurve curve =
        frio::sample_two_pure_curve(problem, 0.0, 1.0, curve_steps, exec);
    std::string packed;
    packed.reserve(curve.size() * sizeof(double));
    for (const frio::FrioPoint& pt : curve.points) packed += pack(&pt.pe_min, 1);
    return packed;
  }));

  return 0;
}
