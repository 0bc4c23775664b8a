#pragma once

#include <array>
#include <cstdint>

#include "frio/parallel.hpp"
#include "frio/rates.hpp"
#include "frio/rng.hpp"

namespace frio {

// Tally of a Born-rule sampling run against an analytic reference.
struct TrialReport {
  std::uint64_t n_trials = 0;
  RateTriple reference;
  RateTriple empirical;
  std::array<std::uint64_t, 3> counts{};     // success, error, inconclusive
  std::array<double, 3> std_errors{};        // sqrt(p(1-p)/n) from empirical p
  std::array<double, 3> z_scores{};          // (empirical - reference)/std_error
};

// Outcome probabilities of a POVM on a state, with an inverse-CDF sampler.
// Probabilities are computed once at construction; throws if they fail to
// sum to 1 within 1e-9 (an invalid POVM slipped through validation).
class OutcomeSampler {
 public:
  OutcomeSampler(const QubitState& state, const Povm& povm);

  int sample(double u01) const;  // maps a uniform [0,1) draw to an outcome index
  double probability(std::size_t outcome) const { return probs_[outcome]; }
  std::size_t n_outcomes() const { return probs_.size(); }

 private:
  std::vector<double> probs_;
  std::vector<double> cdf_;
};

// Single Born-rule draw: outcome index i with probability <psi|Pi_i|psi>.
int sample_outcome(const QubitState& state, const Povm& povm, CounterRng& rng);

// Samples n_trials preparations (state index from the priors) and
// measurement outcomes, tallying success/error/inconclusive by the POVM
// role labels. The per-trial randomness is a pure function of (seed, trial
// index), so parallel and serial runs produce identical reports.
TrialReport estimate_rates(const Ensemble& ensemble, const Povm& povm,
                           std::uint64_t n_trials, std::uint64_t seed,
                           ExecMode exec = ExecMode::parallel);

}  // namespace frio
