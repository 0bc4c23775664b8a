#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frio/curve.hpp"
#include "frio/parallel.hpp"
#include "frio/reduction.hpp"

namespace frio {

// Tuning knobs for the derivative-free search. The defaults are sized so
// that two- and three-state qubit problems agree with the closed forms to
// better than 1e-3.
struct OracleConfig {
  int orientation_grid_size = 720;  // Bloch-sphere grid points for the pi0 axis
  int refinement_iterations = 60;   // golden-section budget around the best cell
  double q_constraint_tolerance = 1e-9;
  bool allow_full_rank_pi0 = false; // also search two-eigenvalue pi0 candidates
  int random_restarts = 32;         // restarts of the three-outcome inner search
  std::uint64_t seed = 1;
  ExecMode exec = ExecMode::parallel;

  void validate() const {
    if (orientation_grid_size < 8) {
      throw std::invalid_argument("OracleConfig: orientation grid must be >= 8");
    }
    if (q_constraint_tolerance <= 0.0) {
      throw std::invalid_argument("OracleConfig: tolerances must be positive");
    }
    if (refinement_iterations < 1 || random_restarts < 1) {
      throw std::invalid_argument("OracleConfig: iteration counts must be positive");
    }
  }
};

enum class StrategyKind { pure, mixed };

// Best strategy found at the requested inconclusive rate. The POVM is
// always exactly feasible and reproduces (pe, achieved_q) through rates().
struct OracleResult {
  double pe = 0.0;
  Povm povm;
  double achieved_q = 0.0;
  StrategyKind strategy_kind = StrategyKind::pure;
  std::optional<MixedStrategy> mixture;
  double pi0_min_eigenvalue = 0.0;
  // Smallest eigenvalue of the residual conclusive element in the
  // three-state search; a markedly positive value means the optimum did not
  // want a rank-one residual.
  double residual_rank_excess = 0.0;
};

// Minimizes the error probability over strategies with tr(rho pi0) = q.
// Pure strategies are searched with a rank-one pi0 (plus optional
// full-rank candidates); if no pure strategy can reach q, a mixed strategy
// is assembled from the convex envelope of pure anchor points.
OracleResult optimize_fixed_q(const Ensemble& ensemble, double q, const OracleConfig& cfg);

// Lower convex envelope over q of the given samples. Points on the
// envelope are returned unchanged; points above it become mixed points
// carrying the bracketing vertices and the mixing weight. The input must
// contain the trivial point q = 1, pe = 0.
FrioCurve convexify(const std::vector<FrioPoint>& points);

struct ZeroEigCheck {
  double q = 0.0;
  bool skipped = false;
  std::string note;
  double pe_rank1 = 0.0;
  double pe_full_rank = 0.0;
  double improvement = 0.0;  // pe_rank1 - pe_full_rank, positive if full rank won
  double winner_min_eigenvalue = 0.0;
};

struct ZeroEigReport {
  std::vector<ZeroEigCheck> checks;

  double max_improvement() const {
    double m = 0.0;
    for (const auto& c : checks) {
      if (!c.skipped) m = std::max(m, c.improvement);
    }
    return m;
  }
};

// Empirical check that allowing full-rank pi0 candidates never improves on
// the rank-one search where the optimal-error curve is strictly convex.
// Samples that sit on the linear tail are reported as skipped: mixed
// strategies win there and the rank-one claim does not apply.
ZeroEigReport verify_zero_eigenvalue_theorem(const Ensemble& ensemble,
                                             const std::vector<double>& q_samples,
                                             const OracleConfig& cfg);

}  // namespace frio
