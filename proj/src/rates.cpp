#include "frio/rates.hpp"

namespace frio {

RateTriple rates(const Ensemble& ensemble, const Povm& povm) {
  const std::size_t n = ensemble.size();
  if (povm.elements.size() != povm.roles.size()) {
    throw std::invalid_argument("rates: element/role count mismatch");
  }

  const int inc = povm.inconclusive_index();
  if (inc < 0) throw std::invalid_argument("rates: POVM has no inconclusive element");

  std::vector<int> id_index(n, -1);
  for (std::size_t k = 0; k < povm.roles.size(); ++k) {
    const OutcomeRole& r = povm.roles[k];
    if (r.kind != OutcomeRole::Kind::identify) continue;
    if (r.state_index >= n) {
      throw std::invalid_argument("rates: identify label exceeds ensemble arity");
    }
    if (id_index[r.state_index] >= 0) {
      throw std::invalid_argument("rates: duplicate identify label");
    }
    id_index[r.state_index] = static_cast<int>(k);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (id_index[i] < 0) {
      throw std::invalid_argument("rates: missing identify element for some state");
    }
  }

  RateTriple out;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& psi = ensemble.state(i).amplitudes();
    const double eta = ensemble.prior(i);
    out.q_inconclusive += eta * expectation(psi, povm.elements[inc]);
    for (std::size_t j = 0; j < n; ++j) {
      const double p = eta * expectation(psi, povm.elements[id_index[j]]);
      if (i == j) {
        out.p_success += p;
      } else {
        out.p_error += p;
      }
    }
  }
  return out;
}

double trace_norm(const Mat2& op) {
  if (!is_hermitian(op, 1e-10)) {
    throw std::invalid_argument("trace_norm: operator is not Hermitian");
  }
  const EigH2 eig = eig_hermitian(op);
  return std::abs(eig.lambda_min) + std::abs(eig.lambda_max);
}

double helstrom_error(const Ensemble& ensemble) {
  if (ensemble.size() != 2) {
    throw std::invalid_argument("helstrom_error: exactly two states required");
  }
  const Mat2 gamma = ensemble.prior(1) * ensemble.state(1).projector() -
                     ensemble.prior(0) * ensemble.state(0).projector();
  return 0.5 * (1.0 - trace_norm(gamma));
}

Povm helstrom_povm(const Ensemble& ensemble) {
  if (ensemble.size() != 2) {
    throw std::invalid_argument("helstrom_povm: exactly two states required");
  }
  const Mat2 gamma = ensemble.prior(1) * ensemble.state(1).projector() -
                     ensemble.prior(0) * ensemble.state(0).projector();
  const EigH2 eig = eig_hermitian(gamma);

  // Strictly positive eigenspace answers "state 2"; the rest answers
  // "state 1", which absorbs any zero eigenvalue deterministically.
  Mat2 pi2 = Mat2::zero();
  if (eig.lambda_max > 0.0) pi2 = pi2 + outer(eig.v_max);
  if (eig.lambda_min > 0.0) pi2 = pi2 + outer(eig.v_min);
  const Mat2 pi1 = Mat2::identity() - pi2;
  return Povm::with_inconclusive(Mat2::zero(), {pi1, pi2});
}

}  // namespace frio
