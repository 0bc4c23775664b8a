#include "frio/curve.hpp"

#include <algorithm>

namespace frio {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::me_point: return "me-point";
    case Regime::interior: return "interior";
    case Regime::projective: return "projective";
    case Regime::linear_tail: return "linear-tail";
    case Regime::mixed: return "mixed";
  }
  return "unknown";
}

CurveShape curve_shape(const FrioCurve& curve) {
  CurveShape shape;
  const auto& pts = curve.points;
  if (pts.empty()) return shape;

  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    shape.monotonicity_violation =
        std::max(shape.monotonicity_violation, pts[i + 1].pe_min - pts[i].pe_min);
  }

  // Chord test: each interior point must lie on or below the segment joining
  // its neighbors. Passing on every consecutive triple is equivalent to
  // slopes being nondecreasing, i.e. convexity of the sampled polyline.
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const double dq = pts[i + 1].q - pts[i - 1].q;
    if (dq <= 0.0) continue;
    const double lam = (pts[i + 1].q - pts[i].q) / dq;
    const double chord = lam * pts[i - 1].pe_min + (1.0 - lam) * pts[i + 1].pe_min;
    shape.convexity_violation = std::max(shape.convexity_violation, pts[i].pe_min - chord);
  }

  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const double dq0 = pts[i].q - pts[i - 1].q;
    const double dq1 = pts[i + 1].q - pts[i].q;
    if (dq0 <= 0.0 || dq1 <= 0.0) continue;
    const double s0 = (pts[i].pe_min - pts[i - 1].pe_min) / dq0;
    const double s1 = (pts[i + 1].pe_min - pts[i].pe_min) / dq1;
    shape.slope_violation = std::max(shape.slope_violation, s0 - s1);
  }

  shape.endpoint_value = pts.back().pe_min;
  return shape;
}

bool curve_is_convex(const FrioCurve& curve, double tol) {
  return curve_shape(curve).convexity_violation <= tol;
}

}  // namespace frio
