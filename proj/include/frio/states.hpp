#pragma once

#include <cstddef>
#include <vector>

#include "frio/algebra.hpp"

namespace frio {

// Pure qubit state. Construction enforces unit norm to 1e-12.
class QubitState {
 public:
  QubitState(cplx c0, cplx c1) : amps_{c0, c1} {
    const double n = norm2(amps_);
    if (std::abs(n - 1.0) > 1e-12) {
      throw std::invalid_argument("QubitState: amplitudes are not unit norm");
    }
  }

  // cos(t)|0> + sin(t)|1>, real amplitudes.
  static QubitState from_angle(double t) { return {std::cos(t), std::sin(t)}; }

  const Vec2& amplitudes() const { return amps_; }
  Mat2 projector() const { return outer(amps_); }

 private:
  Vec2 amps_;
};

// Angle theta in [0, pi/2] with cos(theta) = |<s1|s2>|.
inline double overlap_angle(const QubitState& s1, const QubitState& s2) {
  const double c = std::abs(dot(s1.amplitudes(), s2.amplitudes()));
  return std::acos(std::min(c, 1.0));
}

// Pure states with prior probabilities. Priors must be nonnegative and sum
// to one within 1e-12; at least two states are required.
class Ensemble {
 public:
  Ensemble(std::vector<QubitState> states, std::vector<double> priors)
      : states_(std::move(states)), priors_(std::move(priors)) {
    if (states_.size() != priors_.size() || states_.size() < 2) {
      throw std::invalid_argument("Ensemble: need matching states/priors, at least 2");
    }
    double sum = 0.0;
    for (double p : priors_) {
      if (p < 0.0) throw std::invalid_argument("Ensemble: negative prior");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("Ensemble: priors do not sum to 1");
    }
  }

  std::size_t size() const { return states_.size(); }
  const QubitState& state(std::size_t i) const { return states_[i]; }
  double prior(std::size_t i) const { return priors_[i]; }
  const std::vector<QubitState>& states() const { return states_; }
  const std::vector<double>& priors() const { return priors_; }

  // rho = sum_i eta_i |psi_i><psi_i|
  Mat2 average_state() const {
    Mat2 rho = Mat2::zero();
    for (std::size_t i = 0; i < states_.size(); ++i) {
      rho = rho + priors_[i] * states_[i].projector();
    }
    return rho;
  }

 private:
  std::vector<QubitState> states_;
  std::vector<double> priors_;
};

}  // namespace frio
