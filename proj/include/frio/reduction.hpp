#pragma once

#include "frio/rates.hpp"

namespace frio {

// Minimum-error problem equivalent to discriminating the original ensemble
// with the inconclusive element pi0 fixed. Holds the transformed states and
// priors, the inconclusive rate q spent on pi0, and omega = I - pi0.
struct ReducedProblem {
  Ensemble ensemble;
  double q = 0.0;
  Mat2 omega;
};

// Transforms (ensemble, pi0) into the equivalent conclusive-only problem:
//   |psi~_i>  ∝  omega^{1/2} |psi_i>,   eta~_i = eta_i <psi_i|omega|psi_i> / (1-Q).
// Requires 0 <= pi0 <= I. Throws std::domain_error when some state is
// annihilated by omega (no conclusive amplitude left) or when Q = 1.
ReducedProblem reduce(const Ensemble& ensemble, const Mat2& pi0);

// Minimum error probability among all strategies that use exactly this
// pi0: (1-Q) times the minimum-error probability of the reduced ensemble.
// Two-state ensembles only.
double frio_error_for_pi0(const Ensemble& ensemble, const Mat2& pi0);

// Maps a complete conclusive-only POVM back to the original problem:
// conclusive elements become omega^{1/2} Pi~ omega^{1/2} and pi0 is
// reinstated as the inconclusive element. The reduced POVM must be valid
// with a zero inconclusive element.
Povm lift_povm(const Povm& reduced_povm, const Mat2& omega, const Mat2& pi0);

// Inverse of lift_povm on the conclusive sector: conjugates the conclusive
// elements by omega^{-1/2} and zeroes the inconclusive element. Omega must
// be strictly positive for the result to be complete.
Povm reduce_povm(const Povm& povm, const Mat2& omega);

}  // namespace frio
