#include "frio/reduction.hpp"

namespace frio {

namespace {

void check_inconclusive_operator(const Mat2& pi0) {
  if (!is_hermitian(pi0, 1e-10)) {
    throw std::invalid_argument("reduce: pi0 is not Hermitian");
  }
  if (min_eigenvalue(pi0) < -1e-10) {
    throw std::invalid_argument("reduce: pi0 is not positive semidefinite");
  }
  if (max_eigenvalue(pi0) > 1.0 + 1e-10) {
    throw std::invalid_argument("reduce: pi0 exceeds the identity");
  }
}

}  // namespace

ReducedProblem reduce(const Ensemble& ensemble, const Mat2& pi0) {
  check_inconclusive_operator(pi0);
  const Mat2 omega = Mat2::identity() - pi0;
  const Mat2 omega_sqrt = sqrt_psd(omega);

  const std::size_t n = ensemble.size();
  std::vector<QubitState> tilde_states;
  std::vector<double> tilde_priors(n);
  tilde_states.reserve(n);

  double q_bar = 0.0;  // sum_i eta_i <psi_i|omega|psi_i> = 1 - Q
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& psi = ensemble.state(i).amplitudes();
    const double t = expectation(psi, omega);
    if (t <= 1e-13) {
      throw std::domain_error("reduce: a state is annihilated by omega (singular transform)");
    }
    weights[i] = t;
    q_bar += ensemble.prior(i) * t;
  }
  if (q_bar <= 1e-12) {
    throw std::domain_error("reduce: Q = 1, no conclusive sector remains");
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 w = omega_sqrt * ensemble.state(i).amplitudes();
    const Vec2 v = normalized(w);
    tilde_states.emplace_back(v.c0, v.c1);
    tilde_priors[i] = ensemble.prior(i) * weights[i] / q_bar;
  }

  ReducedProblem out{Ensemble(std::move(tilde_states), std::move(tilde_priors)),
                     1.0 - q_bar, omega};
  return out;
}

double frio_error_for_pi0(const Ensemble& ensemble, const Mat2& pi0) {
  if (ensemble.size() != 2) {
    throw std::invalid_argument("frio_error_for_pi0: exactly two states required");
  }
  const ReducedProblem reduced = reduce(ensemble, pi0);
  return (1.0 - reduced.q) * helstrom_error(reduced.ensemble);
}

Povm lift_povm(const Povm& reduced_povm, const Mat2& omega, const Mat2& pi0) {
  const std::vector<std::string> violations = validate_povm(reduced_povm);
  if (!violations.empty()) {
    throw std::invalid_argument("lift_povm: invalid reduced POVM: " + violations.front());
  }
  const int inc = reduced_povm.inconclusive_index();
  if (max_abs_entry(reduced_povm.elements[inc]) > 1e-10) {
    throw std::invalid_argument("lift_povm: reduced POVM has a nonzero inconclusive element");
  }
  if (max_abs_entry((Mat2::identity() - pi0) - omega) > 1e-10) {
    throw std::invalid_argument("lift_povm: omega and pi0 are inconsistent");
  }

  const Mat2 omega_sqrt = sqrt_psd(omega);

  Povm out;
  out.elements.reserve(reduced_povm.size());
  out.roles.reserve(reduced_povm.size());
  out.elements.push_back(pi0);
  out.roles.push_back(OutcomeRole::inconclusive());
  for (std::size_t k = 0; k < reduced_povm.size(); ++k) {
    if (static_cast<int>(k) == inc) continue;
    out.elements.push_back(hermitian_part(omega_sqrt * reduced_povm.elements[k] * omega_sqrt));
    out.roles.push_back(reduced_povm.roles[k]);
  }
  return out;
}

Povm reduce_povm(const Povm& povm, const Mat2& omega) {
  const int inc = povm.inconclusive_index();
  if (inc < 0) throw std::invalid_argument("reduce_povm: POVM has no inconclusive element");
  const Mat2 omega_inv_sqrt = inv_sqrt_psd(omega);

  Povm out;
  out.elements.reserve(povm.size());
  out.roles.reserve(povm.size());
  out.elements.push_back(Mat2::zero());
  out.roles.push_back(OutcomeRole::inconclusive());
  for (std::size_t k = 0; k < povm.size(); ++k) {
    if (static_cast<int>(k) == inc) continue;
    out.elements.push_back(hermitian_part(omega_inv_sqrt * povm.elements[k] * omega_inv_sqrt));
    out.roles.push_back(povm.roles[k]);
  }
  return out;
}

}  // namespace frio
