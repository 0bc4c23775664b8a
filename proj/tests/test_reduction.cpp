#include <doctest.h>

#include "frio/closedform.hpp"
#include "frio/reduction.hpp"
#include "helpers.hpp"

using namespace frio;

TEST_CASE("reduce with a zero inconclusive operator is the identity transform") {
  test::Rng rng(3);
  const Ensemble ens = test::random_two_state_ensemble(rng);
  const ReducedProblem red = reduce(ens, Mat2::zero());
  CHECK(std::abs(red.q) < 1e-12);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(test::max_entry_diff(red.ensemble.state(i).projector(), ens.state(i).projector()) <
          1e-12);
    CHECK(red.ensemble.prior(i) == doctest::Approx(ens.prior(i)).epsilon(1e-13));
  }
}

TEST_CASE("reduce shrinks the overlap for the symmetric half-overlap pair") {
  // States at +-theta/2 around the inconclusive axis, xi = 0.4.
  const TwoPureProblem p(0.5, 0.5);
  const Ensemble ens = two_pure_ensemble(p);
  const ReducedProblem red = reduce(ens, Mat2::diag(0.4, 0.0));
  const double overlap =
      std::abs(dot(red.ensemble.state(0).amplitudes(), red.ensemble.state(1).amplitudes()));
  // (xi_bar c^2 - s^2)/(xi_bar c^2 + s^2) at c = cos(pi/6): exactly 2/7.
  CHECK(overlap == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
  CHECK(overlap < 0.5);
}

TEST_CASE("reduce maps trine states to trine states") {
  const double theta = 0.6;
  const double xi = 0.35;
  const Ensemble trine = trine_ensemble(theta);
  const ReducedProblem red = reduce(trine, Mat2::diag(xi, 0.0));

  const double c = std::cos(theta), s = std::sin(theta);
  const double xi_bar = 1.0 - xi;
  CHECK(red.q == doctest::Approx(xi * c * c).epsilon(1e-13));

  const double cos_tilde = std::sqrt(xi_bar) * c / std::sqrt(xi_bar * c * c + s * s);
  const double theta_tilde = std::acos(cos_tilde);
  const Ensemble expected = trine_ensemble(theta_tilde);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(red.ensemble.prior(k) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(test::max_entry_diff(red.ensemble.state(k).projector(),
                               expected.state(k).projector()) < 1e-12);
  }
}

TEST_CASE("reduce rejects annihilated states and a saturated rate") {
  const Ensemble ens({QubitState(1.0, 0.0), QubitState(0.0, 1.0)}, {0.5, 0.5});
  // pi0 = |0><0| leaves no conclusive amplitude for the first state.
  CHECK_THROWS_AS(reduce(ens, Mat2::diag(1.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(reduce(ens, Mat2::identity()), std::domain_error);
  CHECK_THROWS_AS(reduce(ens, Mat2::diag(1.5, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(reduce(ens, Mat2::diag(-0.1, 0.0)), std::invalid_argument);
}

TEST_CASE("tilde priors always renormalize to one") {
  test::Rng rng(17);
  for (int it = 0; it < 200; ++it) {
    const Ensemble ens = test::random_two_state_ensemble(rng);
    const double xi = test::uniform(rng, 0.0, 0.95);
    const Mat2 pi0 = xi * test::random_state(rng).projector();
    const ReducedProblem red = reduce(ens, pi0);
    CHECK(red.ensemble.prior(0) + red.ensemble.prior(1) ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("frio_error_for_pi0 at zero inconclusive rate is the minimum-error value") {
  test::Rng rng(23);
  for (int it = 0; it < 50; ++it) {
    const Ensemble ens = test::random_two_state_ensemble(rng);
    CHECK(frio_error_for_pi0(ens, Mat2::zero()) ==
          doctest::Approx(helstrom_error(ens)).epsilon(1e-15));
  }
}

TEST_CASE("frio_error_for_pi0 at the optimal axis reproduces the interior closed form") {
  const TwoPureProblem p(0.5, 0.5);
  const Ensemble ens = two_pure_ensemble(p);
  const Povm optimal = two_pure_optimal_povm(p, 0.3);
  const Mat2 pi0 = optimal.elements[optimal.inconclusive_index()];

  const double expected = 0.5 * (0.7 - std::sqrt(0.45));  // interior value at q = 0.3
  CHECK(expected == doctest::Approx(0.0145898033750316).epsilon(1e-12));
  CHECK(frio_error_for_pi0(ens, pi0) == doctest::Approx(expected).epsilon(1e-10));

  // Any other axis at the same rate can only do worse; a scan over axis
  // angles brushes the optimum.
  double scan_best = 1.0;
  for (int i = 0; i <= 360; ++i) {
    const double a = std::numbers::pi * i / 360.0;
    const Vec2 axis{std::cos(a), std::sin(a)};
    const double denom = ens.prior(0) * expectation(ens.state(0).amplitudes(), outer(axis)) +
                         ens.prior(1) * expectation(ens.state(1).amplitudes(), outer(axis));
    const double xi = 0.3 / denom;
    if (xi > 1.0) continue;
    const double pe = frio_error_for_pi0(ens, xi * outer(axis));
    CHECK(pe >= expected - 1e-9);
    scan_best = std::min(scan_best, pe);
  }
  CHECK(scan_best == doctest::Approx(expected).epsilon(1e-4));
}

TEST_CASE("lift_povm with a zero pi0 reinstates the reduced POVM") {
  const TwoPureProblem p(0.4, 0.3);
  const Ensemble ens = two_pure_ensemble(p);
  const Povm me = helstrom_povm(ens);
  const Povm lifted = lift_povm(me, Mat2::identity(), Mat2::zero());
  REQUIRE(lifted.size() == me.size());
  for (std::size_t k = 0; k < lifted.size(); ++k) {
    CHECK(test::max_entry_diff(lifted.elements[k], me.elements[k]) < 1e-14);
  }
}

TEST_CASE("lift of the optimal reduced measurement hits the closed-form rate triple") {
  const TwoPureProblem p(0.5, 0.5);
  const Ensemble ens = two_pure_ensemble(p);
  const Povm povm = two_pure_optimal_povm(p, 0.3);
  const RateTriple r = rates(ens, povm);
  CHECK(r.p_success == doctest::Approx(0.685410196624968).epsilon(1e-9));
  CHECK(r.p_error == doctest::Approx(0.014589803375032).epsilon(1e-9));
  CHECK(r.q_inconclusive == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("lift_povm validates its inputs") {
  const TwoPureProblem p(0.5, 0.5);
  const Povm me = helstrom_povm(two_pure_ensemble(p));

  Povm broken = me;
  broken.elements[1] = 1.5 * broken.elements[1];
  CHECK_THROWS_AS(lift_povm(broken, Mat2::identity(), Mat2::zero()), std::invalid_argument);

  // Omega inconsistent with pi0.
  CHECK_THROWS_AS(lift_povm(me, Mat2::diag(0.5, 1.0), Mat2::zero()), std::invalid_argument);

  // Nonzero inconclusive element in the reduced POVM.
  Povm nonzero_inc = me;
  nonzero_inc.elements[0] = Mat2::diag(0.1, 0.1);
  nonzero_inc.elements[1] = nonzero_inc.elements[1] - Mat2::diag(0.1, 0.0);
  nonzero_inc.elements[2] = nonzero_inc.elements[2] - Mat2::diag(0.0, 0.1);
  CHECK_THROWS_AS(lift_povm(nonzero_inc, Mat2::identity(), Mat2::zero()),
                  std::invalid_argument);
}

namespace {

// Random strategy with a prescribed rank-one pi0: conclusive elements split
// omega = I - pi0 by a random 0 <= A <= I.
Povm random_completion(test::Rng& rng, const Mat2& pi0) {
  const Mat2 omega = Mat2::identity() - pi0;
  const Mat2 root = sqrt_psd(omega);
  const Mat2 h = test::random_hermitian(rng);
  const EigH2 eig = eig_hermitian(h);
  const Mat2 a = std::clamp(eig.lambda_max, 0.0, 1.0) * outer(eig.v_max) +
                 std::clamp(eig.lambda_min, 0.0, 1.0) * outer(eig.v_min);
  const Mat2 pi1 = hermitian_part(root * a * root);
  const Mat2 pi2 = omega - pi1;
  return Povm::with_inconclusive(pi0, {pi1, pi2});
}

}  // namespace

TEST_CASE("reduce_povm then lift_povm round-trips the conclusive elements") {
  test::Rng rng(31);
  for (int it = 0; it < 100; ++it) {
    const double xi = test::uniform(rng, 0.0, 0.9);
    const Mat2 pi0 = xi * test::random_state(rng).projector();
    const Povm povm = random_completion(rng, pi0);
    REQUIRE(validate_povm(povm).empty());

    const Mat2 omega = Mat2::identity() - pi0;
    const Povm reduced = reduce_povm(povm, omega);
    const Povm back = lift_povm(reduced, omega, pi0);
    for (std::size_t k = 0; k < povm.size(); ++k) {
      CHECK(test::max_entry_diff(back.elements[k], povm.elements[k]) < 1e-10);
    }
  }
}

TEST_CASE("reduction identity: direct error equals scaled reduced error") {
  test::Rng rng(37);
  for (int it = 0; it < 1000; ++it) {
    const Ensemble ens = test::random_two_state_ensemble(rng);
    const double xi = test::uniform(rng, 0.0, 0.9);
    const Mat2 pi0 = xi * test::random_state(rng).projector();
    const Povm povm = random_completion(rng, pi0);

    const ReducedProblem red = reduce(ens, pi0);
    const Povm reduced_povm = reduce_povm(povm, red.omega);
    const double direct = rates(ens, povm).p_error;
    const double transformed = (1.0 - red.q) * rates(red.ensemble, reduced_povm).p_error;
    CHECK(direct == doctest::Approx(transformed).epsilon(1e-10));
  }
}

TEST_CASE("lifted POVMs are always valid") {
  test::Rng rng(41);
  for (int it = 0; it < 100; ++it) {
    const Ensemble ens = test::random_two_state_ensemble(rng);
    const double xi = test::uniform(rng, 0.0, 0.95);
    const Mat2 pi0 = xi * test::random_state(rng).projector();
    const ReducedProblem red = reduce(ens, pi0);
    const Povm lifted = lift_povm(helstrom_povm(red.ensemble), red.omega, pi0);
    CHECK(validate_povm(lifted).empty());
    CHECK(rates(ens, lifted).q_inconclusive == doctest::Approx(red.q).epsilon(1e-10));
  }
}
