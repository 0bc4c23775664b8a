#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frio/povm.hpp"

namespace frio {

// Which piece of the optimal-error curve a sample comes from.
enum class Regime {
  me_point,     // q = 0, plain minimum-error discrimination
  interior,     // rank-one pi0 with eigenvalue < 1
  projective,   // pi0 is a projector, two-outcome projective measurement
  linear_tail,  // straight segment alpha*(1-q) past the critical rate
  mixed,        // convex combination of two pure strategies
};

const char* regime_name(Regime r);

// Probabilistic combination of two POVMs: strategy `a` with probability
// `weight`, `b` otherwise.
struct MixedStrategy {
  double weight = 1.0;
  Povm a;
  Povm b;
};

// One sample of an optimal-error curve.
struct FrioPoint {
  double q = 0.0;
  double pe_min = 0.0;
  Regime regime = Regime::interior;
  std::optional<Povm> povm;
  std::optional<MixedStrategy> mixture;

  // Error probability conditioned on a conclusive outcome.
  double pe_conditional() const { return q < 1.0 ? pe_min / (1.0 - q) : 0.0; }
};

// Samples of the minimal-error curve, sorted by q.
struct FrioCurve {
  std::vector<FrioPoint> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

// Shape diagnostics for a sampled curve. All four quantities are maximal
// violations; a well-formed optimal-error curve keeps every one of them
// within tolerance (1e-9 in the checks downstream).
struct CurveShape {
  double convexity_violation = 0.0;    // chord test on consecutive triples
  double monotonicity_violation = 0.0; // increase of pe between neighbors
  double slope_violation = 0.0;        // decrease of successive right slopes
  double endpoint_value = 0.0;         // pe at the largest sampled q (expect q=1 -> 0)
};

CurveShape curve_shape(const FrioCurve& curve);

bool curve_is_convex(const FrioCurve& curve, double tol = 1e-9);

}  // namespace frio
