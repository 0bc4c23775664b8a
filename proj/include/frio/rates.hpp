#pragma once

#include "frio/povm.hpp"
#include "frio/states.hpp"

namespace frio {

// Success, error and inconclusive probabilities of a measurement strategy.
// The three components always partition unity.
struct RateTriple {
  double p_success = 0.0;
  double p_error = 0.0;
  double q_inconclusive = 0.0;

  double sum() const { return p_success + p_error + q_inconclusive; }
};

// Average rates of `povm` on `ensemble`:
//   P_s = sum_i eta_i <psi_i| Pi_identify(i) |psi_i>
//   P_e = sum_{i != j} eta_i <psi_i| Pi_identify(j) |psi_i>
//   Q   = sum_i eta_i <psi_i| Pi_0 |psi_i>
// Throws if the identify labels do not match the ensemble arity.
RateTriple rates(const Ensemble& ensemble, const Povm& povm);

// Sum of absolute eigenvalues. Throws on non-Hermitian input.
double trace_norm(const Mat2& op);

// Minimum-error probability for two states:
// (1 - || eta2 rho2 - eta1 rho1 ||_1) / 2.
double helstrom_error(const Ensemble& ensemble);

// Minimum-error measurement for two states: projectors onto the positive
// and nonpositive eigenspaces of eta2 rho2 - eta1 rho1, with a zero
// inconclusive element.
Povm helstrom_povm(const Ensemble& ensemble);

}  // namespace frio
