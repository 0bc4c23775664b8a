#pragma once

#include "frio/curve.hpp"
#include "frio/parallel.hpp"
#include "frio/reduction.hpp"

namespace frio {

// Two pure states with overlap cos_theta and prior eta1 on the first state.
struct TwoPureProblem {
  double eta1;
  double cos_theta;

  TwoPureProblem(double eta1_, double cos_theta_) : eta1(eta1_), cos_theta(cos_theta_) {
    if (!(eta1 > 0.0 && eta1 < 1.0)) {
      throw std::invalid_argument("TwoPureProblem: eta1 must be in (0,1)");
    }
    if (!(cos_theta >= 0.0 && cos_theta < 1.0)) {
      throw std::invalid_argument("TwoPureProblem: cos_theta must be in [0,1)");
    }
  }

  double eta2() const { return 1.0 - eta1; }
  double theta() const { return std::acos(cos_theta); }
  double sin_theta() const { return std::sqrt(1.0 - cos_theta * cos_theta); }
};

// The prior axis splits into three regions with distinct critical-rate
// expressions. Boundaries: eta_left = cos^2/(1+cos^2), eta_right = 1/(1+cos^2).
enum class Region { one, two, three };

const char* region_name(Region r);

struct RegionBounds {
  double eta_left;
  double eta_right;
};

RegionBounds region_bounds(double cos_theta);
Region classify_region(const TwoPureProblem& p);

// Critical and threshold rates of an optimal-error curve. q_th and q0 are
// only defined for two-pure-state problems.
struct CriticalData {
  double q_c = 0.0;
  double alpha = 0.0;
  std::optional<double> q_th;
  std::optional<double> q0;
};

// ---- two pure states, arbitrary priors ----

// 2 sqrt(eta1 eta2) cos_theta, the unambiguous failure rate at
// intermediate priors.
double two_pure_q0(const TwoPureProblem& p);

// Critical rate: the unambiguous-discrimination failure probability,
// piecewise over the three prior regions.
double two_pure_qc(const TwoPureProblem& p);

// Threshold rate where the rank-one inconclusive operator saturates into a
// projector: 2 eta1 eta2 sin^2(theta) / (1 - q0).
double two_pure_qth(const TwoPureProblem& p);

// Interior branch, valid for q below the threshold (or below q0 at
// intermediate priors): pe = ( (1-q) - sqrt((1-q)^2 - (q0-q)^2) ) / 2.
double two_pure_interior_error(const TwoPureProblem& p, double q);

// Projector branch of the inconclusive rate as a function of the error
// rate; decreasing from q_c at pe = 0 down to q_th. Extreme prior regions
// only.
double two_pure_projective_q_of_pe(const TwoPureProblem& p, double pe);

// Inverts two_pure_projective_q_of_pe by bisection for q in [q_th, q_c].
double two_pure_projective_error(const TwoPureProblem& p, double q);

// Full piecewise optimal-error value with its regime tag. Total on [0,1].
FrioPoint two_pure_pe_min(const TwoPureProblem& p, double q);

// Canonical ensemble for the problem: real states symmetric about |0>,
// |psi_{1,2}> = cos(theta/2)|0> +- sin(theta/2)|1>.
Ensemble two_pure_ensemble(const TwoPureProblem& p);

// Optimal strategy at rate q <= q_c, expressed in the canonical frame.
// Throws std::domain_error for q > q_c (a mixed strategy is optimal there).
Povm two_pure_optimal_povm(const TwoPureProblem& p, double q);

CriticalData two_pure_critical(const TwoPureProblem& p);

// ---- trine states ----

// Trine ensemble: |psi_k> = cos(theta)|0> + e^{2 pi i k/3} sin(theta)|1>,
// equal priors, theta in (0, pi/4].
Ensemble trine_ensemble(double theta);

double trine_qc(double theta);  // cos(2 theta)

// Optimal-error value for trines: interior branch
// (2/3)((1-q) - sin(theta) sqrt(cos^2(theta) - q)) up to q_c = cos(2 theta),
// then the tangent line (1-q)/3.
FrioPoint trine_pe_min(double theta, double q);

// Square-root measurement for trine states: (2/3)|u_k><u_k| with
// |u_k> = (|0> + e^{2 pi i k/3}|1>)/sqrt(2). Minimum-error optimal for any
// trine angle at equal priors.
Povm trine_me_povm();

// Optimal strategy for q <= q_c: pi0 = (q/cos^2 theta)|0><0| with the
// lifted square-root measurement on the conclusive sector.
Povm trine_optimal_povm(double theta, double q);

CriticalData trine_critical(double theta);

// ---- curve sampling and critical-point detection ----

FrioCurve sample_two_pure_curve(const TwoPureProblem& p, double q_min, double q_max,
                                int steps, ExecMode exec = ExecMode::parallel);

FrioCurve sample_trine_curve(double theta, double q_min, double q_max, int steps,
                             ExecMode exec = ExecMode::parallel);

// Finds the smallest sampled q whose secant to (1, 0) is tangent to the
// curve, i.e. the onset of the linear tail, and the tail slope magnitude
// alpha. The curve must be convex and sampled densely up to q = 1.
CriticalData critical_from_curve(const FrioCurve& curve);

}  // namespace frio
