#include "frio/simulate.hpp"

#include <cmath>
#include <limits>

namespace frio {

OutcomeSampler::OutcomeSampler(const QubitState& state, const Povm& povm) {
  probs_.reserve(povm.size());
  double total = 0.0;
  for (const Mat2& element : povm.elements) {
    double p = expectation(state.amplitudes(), element);
    if (p < -1e-9) {
      throw std::invalid_argument("OutcomeSampler: negative outcome probability");
    }
    p = std::max(p, 0.0);
    probs_.push_back(p);
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("OutcomeSampler: outcome probabilities do not sum to 1");
  }
  cdf_.reserve(probs_.size());
  double acc = 0.0;
  for (double p : probs_) {
    acc += p / total;
    cdf_.push_back(acc);
  }
  cdf_.back() = 1.0;
}

int OutcomeSampler::sample(double u01) const {
  for (std::size_t k = 0; k + 1 < cdf_.size(); ++k) {
    if (u01 < cdf_[k]) return static_cast<int>(k);
  }
  return static_cast<int>(cdf_.size() - 1);
}

int sample_outcome(const QubitState& state, const Povm& povm, CounterRng& rng) {
  return OutcomeSampler(state, povm).sample(rng.next_u01());
}

TrialReport estimate_rates(const Ensemble& ensemble, const Povm& povm,
                           std::uint64_t n_trials, std::uint64_t seed, ExecMode exec) {
  if (n_trials < 1) throw std::invalid_argument("estimate_rates: n_trials must be >= 1");

  TrialReport report;
  report.n_trials = n_trials;
  report.reference = rates(ensemble, povm);

  const std::size_t n_states = ensemble.size();
  std::vector<double> prior_cdf(n_states);
  double acc = 0.0;
  for (std::size_t i = 0; i < n_states; ++i) {
    acc += ensemble.prior(i);
    prior_cdf[i] = acc;
  }
  prior_cdf.back() = 1.0;

  std::vector<OutcomeSampler> samplers;
  samplers.reserve(n_states);
  for (std::size_t i = 0; i < n_states; ++i) {
    samplers.emplace_back(ensemble.state(i), povm);
  }

  // Outcome classification by role: 0 success, 1 error, 2 inconclusive.
  std::vector<std::vector<int>> outcome_class(n_states, std::vector<int>(povm.size(), 2));
  for (std::size_t k = 0; k < povm.size(); ++k) {
    const OutcomeRole& role = povm.roles[k];
    for (std::size_t i = 0; i < n_states; ++i) {
      if (role.kind == OutcomeRole::Kind::inconclusive) {
        outcome_class[i][k] = 2;
      } else {
        outcome_class[i][k] = (role.state_index == i) ? 0 : 1;
      }
    }
  }

  // Chunked tally: counts merge by addition, so the chunking cannot change
  // the result; the per-trial draws depend only on (seed, trial index).
  const int n_chunks = (exec == ExecMode::parallel) ? std::max(1, max_threads() * 4) : 1;
  const std::uint64_t chunk_size = (n_trials + n_chunks - 1) / n_chunks;
  std::vector<std::array<std::uint64_t, 3>> chunk_counts(n_chunks, {0, 0, 0});

  parallel_for(n_chunks, exec, [&](std::int64_t chunk) {
    const std::uint64_t begin = chunk * chunk_size;
    const std::uint64_t end = std::min(n_trials, begin + chunk_size);
    std::array<std::uint64_t, 3> local{0, 0, 0};
    for (std::uint64_t t = begin; t < end; ++t) {
      const double u_state = CounterRng::uniform01(seed, t, 0);
      std::size_t state = 0;
      while (state + 1 < n_states && u_state >= prior_cdf[state]) ++state;
      const double u_outcome = CounterRng::uniform01(seed, t, 1);
      const int outcome = samplers[state].sample(u_outcome);
      ++local[outcome_class[state][outcome]];
    }
    chunk_counts[chunk] = local;
  });

  for (const auto& local : chunk_counts) {
    for (int c = 0; c < 3; ++c) report.counts[c] += local[c];
  }

  const double n = static_cast<double>(n_trials);
  const std::array<double, 3> reference{report.reference.p_success, report.reference.p_error,
                                        report.reference.q_inconclusive};
  std::array<double, 3> empirical{};
  for (int c = 0; c < 3; ++c) {
    empirical[c] = static_cast<double>(report.counts[c]) / n;
    report.std_errors[c] = std::sqrt(empirical[c] * (1.0 - empirical[c]) / n);
    const double diff = empirical[c] - reference[c];
    if (report.std_errors[c] > 0.0) {
      report.z_scores[c] = diff / report.std_errors[c];
    } else {
      // Degenerate tally (all-or-nothing component): fall back to the
      // reference variance; zero when the estimate is exact.
      const double ref_se = std::sqrt(reference[c] * (1.0 - reference[c]) / n);
      report.z_scores[c] = (diff == 0.0) ? 0.0
                           : (ref_se > 0.0 ? diff / ref_se
                                           : std::numeric_limits<double>::infinity());
    }
  }
  report.empirical = {empirical[0], empirical[1], empirical[2]};
  return report;
}

}  // namespace frio
