#pragma once

#include <random>

#include "frio/rates.hpp"

// Deterministic generators and independent reference computations shared by
// the test suites. The brute-force routines deliberately avoid the library's
// closed-form solvers so they can serve as oracles for them.

namespace frio::test {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cplx random_cplx(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  return {normal(rng), normal(rng)};
}

inline QubitState random_state(Rng& rng) {
  Vec2 v{random_cplx(rng), random_cplx(rng)};
  while (norm2(v) < 1e-6) v = {random_cplx(rng), random_cplx(rng)};
  v = normalized(v);
  return {v.c0, v.c1};
}

inline Mat2 random_hermitian(Rng& rng, double scale = 1.0) {
  const double a = scale * uniform(rng, -1.0, 1.0);
  const double d = scale * uniform(rng, -1.0, 1.0);
  const cplx b = scale * 0.5 * random_cplx(rng);
  return {cplx(a, 0.0), b, std::conj(b), cplx(d, 0.0)};
}

inline Ensemble random_two_state_ensemble(Rng& rng) {
  const double eta1 = uniform(rng, 0.05, 0.95);
  return Ensemble({random_state(rng), random_state(rng)}, {eta1, 1.0 - eta1});
}

// Random valid POVM with one inconclusive and n_conclusive identify
// elements: random PSD blocks whitened by their sum, with the last element
// replaced by the exact completeness residual.
inline Povm random_povm(Rng& rng, std::size_t n_conclusive) {
  const std::size_t n = n_conclusive + 1;
  while (true) {
    std::vector<Mat2> blocks;
    blocks.reserve(n);
    Mat2 sum = Mat2::zero();
    for (std::size_t k = 0; k < n; ++k) {
      const Mat2 g{random_cplx(rng), random_cplx(rng), random_cplx(rng), random_cplx(rng)};
      const Mat2 psd = hermitian_part(adjoint(g) * g);
      blocks.push_back(psd);
      sum = sum + psd;
    }
    if (min_eigenvalue(sum) < 0.05) continue;
    const Mat2 white = inv_sqrt_psd(sum);
    std::vector<Mat2> elements;
    elements.reserve(n);
    Mat2 partial = Mat2::zero();
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const Mat2 e = hermitian_part(white * blocks[k] * white);
      elements.push_back(e);
      partial = partial + e;
    }
    elements.push_back(Mat2::identity() - partial);
    if (min_eigenvalue(elements.back()) < -1e-12) continue;

    Povm povm;
    povm.elements.push_back(elements.back());  // residual as the inconclusive slot
    povm.roles.push_back(OutcomeRole::inconclusive());
    for (std::size_t k = 0; k + 1 < n; ++k) {
      povm.elements.push_back(elements[k]);
      povm.roles.push_back(OutcomeRole::identify(k));
    }
    return povm;
  }
}

// Minimum error over projective qubit measurements by exhaustive scan plus
// local refinement. Independent of the trace-norm route.
inline double brute_force_projective_me2(const Ensemble& ensemble) {
  const auto pe_for = [&](double beta, double phi) {
    const Vec2 v{std::cos(0.5 * beta), std::polar(std::sin(0.5 * beta), phi)};
    const Mat2 p1 = outer(v);
    const Mat2 p2 = Mat2::identity() - p1;
    return ensemble.prior(0) * expectation(ensemble.state(0).amplitudes(), p2) +
           ensemble.prior(1) * expectation(ensemble.state(1).amplitudes(), p1);
  };

  double best = 1.0, best_beta = 0.0, best_phi = 0.0;
  for (int ib = 0; ib <= 180; ++ib) {
    for (int ip = 0; ip < 90; ++ip) {
      const double beta = 3.14159265358979323846 * ib / 180;
      const double phi = 2.0 * 3.14159265358979323846 * ip / 90;
      const double pe = pe_for(beta, phi);
      if (pe < best) {
        best = pe;
        best_beta = beta;
        best_phi = phi;
      }
    }
  }
  double step = 0.03;
  for (int round = 0; round < 60; ++round) {
    bool moved = false;
    for (const auto& [db, dp] : {std::pair{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}) {
      const double pe = pe_for(best_beta + db, best_phi + dp);
      if (pe < best) {
        best = pe;
        best_beta += db;
        best_phi += dp;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

inline double max_entry_diff(const Mat2& a, const Mat2& b) { return max_abs_entry(a - b); }

}  // namespace frio::test
