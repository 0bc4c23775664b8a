#include "frio/closedform.hpp"

#include <numbers>

namespace frio {

namespace {

constexpr double kPi = std::numbers::pi;

void check_probability(double q, const char* what) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": rate must be in [0,1]");
  }
}

void check_trine_angle(double theta) {
  if (!(theta > 0.0 && theta <= kPi / 4.0 + 1e-12)) {
    throw std::invalid_argument("trine angle must be in (0, pi/4]");
  }
}

}  // namespace

const char* region_name(Region r) {
  switch (r) {
    case Region::one: return "I";
    case Region::two: return "II";
    case Region::three: return "III";
  }
  return "?";
}

RegionBounds region_bounds(double cos_theta) {
  const double c2 = cos_theta * cos_theta;
  return {c2 / (1.0 + c2), 1.0 / (1.0 + c2)};
}

Region classify_region(const TwoPureProblem& p) {
  const RegionBounds b = region_bounds(p.cos_theta);
  if (p.eta1 < b.eta_left) return Region::one;
  if (p.eta1 > b.eta_right) return Region::three;
  return Region::two;
}

double two_pure_q0(const TwoPureProblem& p) {
  return 2.0 * std::sqrt(p.eta1 * p.eta2()) * p.cos_theta;
}

double two_pure_qc(const TwoPureProblem& p) {
  const double c2 = p.cos_theta * p.cos_theta;
  switch (classify_region(p)) {
    case Region::one: return p.eta1 + p.eta2() * c2;
    case Region::three: return p.eta2() + p.eta1 * c2;
    case Region::two: break;
  }
  return two_pure_q0(p);
}

double two_pure_qth(const TwoPureProblem& p) {
  const double s2 = 1.0 - p.cos_theta * p.cos_theta;
  return 2.0 * p.eta1 * p.eta2() * s2 / (1.0 - two_pure_q0(p));
}

double two_pure_interior_error(const TwoPureProblem& p, double q) {
  const double q_bar = 1.0 - q;
  const double gap = two_pure_q0(p) - q;
  const double disc = q_bar * q_bar - gap * gap;
  return 0.5 * (q_bar - std::sqrt(std::max(disc, 0.0)));
}

double two_pure_projective_q_of_pe(const TwoPureProblem& p, double pe) {
  const double eta_min = std::min(p.eta1, p.eta2());
  const double eta_max = std::max(p.eta1, p.eta2());
  if (!(pe >= 0.0 && pe <= eta_min)) {
    throw std::invalid_argument("projective branch: pe must be in [0, min prior]");
  }
  const double s = std::sqrt(pe / eta_min);
  const double c = std::sqrt(std::max(1.0 - pe / eta_min, 0.0));
  const double amp = s * p.cos_theta + c * p.sin_theta;
  return 1.0 - pe - eta_max * amp * amp;
}

double two_pure_projective_error(const TwoPureProblem& p, double q) {
  const double q_c = two_pure_qc(p);
  const double q_th = two_pure_qth(p);
  if (classify_region(p) == Region::two) {
    throw std::domain_error("projective branch does not exist at intermediate priors");
  }
  if (!(q >= q_th - 1e-12 && q <= q_c + 1e-12)) {
    throw std::domain_error("projective branch: q must be in [q_th, q_c]");
  }

  // Branch anchoring: the map must run from q_c at pe = 0 down to q_th at
  // the interior value. Both ends are known in closed form, so a failure
  // here means the sign assignment no longer matches the construction.
  const double pe_th = two_pure_interior_error(p, q_th);
  if (std::abs(two_pure_projective_q_of_pe(p, 0.0) - q_c) > 1e-9 ||
      std::abs(two_pure_projective_q_of_pe(p, pe_th) - q_th) > 1e-9) {
    throw std::logic_error("projective branch failed endpoint anchoring");
  }

  double lo = 0.0, hi = pe_th;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (two_pure_projective_q_of_pe(p, mid) > q) {
      lo = mid;  // q decreases with pe: still right of the target
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

FrioPoint two_pure_pe_min(const TwoPureProblem& p, double q) {
  check_probability(q, "two_pure_pe_min");
  FrioPoint pt;
  pt.q = q;

  const double q_c = two_pure_qc(p);
  if (q >= q_c) {
    pt.pe_min = 0.0;  // unambiguous discrimination is possible: alpha = 0
    pt.regime = Regime::linear_tail;
    return pt;
  }
  if (q == 0.0) {
    pt.pe_min = two_pure_interior_error(p, 0.0);
    pt.regime = Regime::me_point;
    return pt;
  }
  if (classify_region(p) == Region::two || q < two_pure_qth(p)) {
    pt.pe_min = two_pure_interior_error(p, q);
    pt.regime = Regime::interior;
  } else {
    pt.pe_min = two_pure_projective_error(p, q);
    pt.regime = Regime::projective;
  }
  return pt;
}

Ensemble two_pure_ensemble(const TwoPureProblem& p) {
  const double half = 0.5 * p.theta();
  return Ensemble({QubitState::from_angle(half), QubitState::from_angle(-half)},
                  {p.eta1, p.eta2()});
}

namespace {

// Axis angle (in the canonical frame) of the rank-one inconclusive
// operator for the interior regime. The states sit at angles theta_1,
// theta_2 from the axis fixed by the balanced-weight condition
// sqrt(eta1) cos(theta_1) = sqrt(eta2) cos(theta_2).
double interior_axis_angle(const TwoPureProblem& p) {
  const double th = p.theta();
  const double s2 = p.sin_theta() * p.sin_theta();
  const double v = p.eta1 * p.eta2() * s2 / (1.0 - two_pure_q0(p));
  const double c1 = std::sqrt(std::min(v / p.eta1, 1.0));
  const double c2 = std::sqrt(std::min(v / p.eta2(), 1.0));
  const double w = v / std::sqrt(p.eta1 * p.eta2());  // = c1 * c2
  const double sign = (w <= p.cos_theta) ? 1.0 : -1.0;
  double th1 = std::atan2(std::sqrt(1.0 - c1 * c1), c1);
  const double th2 = sign > 0.0 ? std::atan2(std::sqrt(1.0 - c2 * c2), c2)
                                : -std::atan2(std::sqrt(1.0 - c2 * c2), c2);
  // Reflect so the separation comes out as +theta; the axis formula below
  // assumes state 1 sits at theta/2 in the canonical frame.
  if (std::abs((th1 - th2) - th) > std::abs((th1 - th2) + th)) th1 = -th1;
  return 0.5 * th - th1;
}

Povm two_pure_interior_povm(const TwoPureProblem& p, double q) {
  const double xi = q / two_pure_qth(p);
  const Vec2 axis{std::cos(interior_axis_angle(p)), std::sin(interior_axis_angle(p))};
  const Mat2 pi0 = xi * outer(axis);
  const Ensemble ens = two_pure_ensemble(p);
  const ReducedProblem red = reduce(ens, pi0);
  return lift_povm(helstrom_povm(red.ensemble), red.omega, pi0);
}

Povm two_pure_projective_povm(const TwoPureProblem& p, double q) {
  const double q_c = two_pure_qc(p);
  const double pe = (q >= q_c) ? 0.0 : two_pure_projective_error(p, q);
  const double eta_min = std::min(p.eta1, p.eta2());
  const double phi_err = std::asin(std::min(std::sqrt(pe / eta_min), 1.0));
  const double th = p.theta();

  // The conclusive projector identifies the more probable state; the
  // identify element of the other state is zero.
  const bool identify_first = p.eta1 >= p.eta2();
  const double axis_angle = identify_first ? -0.5 * th - phi_err : 0.5 * th + phi_err;
  const Vec2 axis{std::cos(axis_angle), std::sin(axis_angle)};
  const Mat2 pi0 = outer(axis);
  const Mat2 pi_d = outer(perp(axis));
  if (identify_first) {
    return Povm::with_inconclusive(pi0, {pi_d, Mat2::zero()});
  }
  return Povm::with_inconclusive(pi0, {Mat2::zero(), pi_d});
}

}  // namespace

Povm two_pure_optimal_povm(const TwoPureProblem& p, double q) {
  check_probability(q, "two_pure_optimal_povm");
  const double q_c = two_pure_qc(p);
  if (q > q_c + 1e-12) {
    throw std::domain_error("two_pure_optimal_povm: q exceeds the critical rate; "
                            "only mixed strategies are optimal there");
  }
  if (q == 0.0) {
    return helstrom_povm(two_pure_ensemble(p));
  }
  if (classify_region(p) == Region::two || q < two_pure_qth(p)) {
    return two_pure_interior_povm(p, q);
  }
  return two_pure_projective_povm(p, q);
}

CriticalData two_pure_critical(const TwoPureProblem& p) {
  CriticalData c;
  c.q_c = two_pure_qc(p);
  c.alpha = 0.0;
  c.q_th = two_pure_qth(p);
  c.q0 = two_pure_q0(p);
  return c;
}

Ensemble trine_ensemble(double theta) {
  check_trine_angle(theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<QubitState> states;
  states.reserve(3);
  for (int k = 0; k < 3; ++k) {
    const double phase = 2.0 * kPi * k / 3.0;
    states.emplace_back(cplx(c, 0.0), std::polar(s, phase));
  }
  return Ensemble(std::move(states), {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
}

double trine_qc(double theta) {
  check_trine_angle(theta);
  return std::cos(2.0 * theta);
}

FrioPoint trine_pe_min(double theta, double q) {
  check_trine_angle(theta);
  check_probability(q, "trine_pe_min");
  FrioPoint pt;
  pt.q = q;
  const double q_c = trine_qc(theta);
  if (q >= q_c) {
    pt.pe_min = (1.0 - q) / 3.0;
    pt.regime = Regime::linear_tail;
    return pt;
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  pt.pe_min = (2.0 / 3.0) * ((1.0 - q) - s * std::sqrt(std::max(c * c - q, 0.0)));
  pt.regime = (q == 0.0) ? Regime::me_point : Regime::interior;
  return pt;
}

Povm trine_me_povm() {
  std::vector<Mat2> conclusive;
  conclusive.reserve(3);
  for (int k = 0; k < 3; ++k) {
    const double phase = 2.0 * kPi * k / 3.0;
    const Vec2 u{cplx(1.0 / std::numbers::sqrt2, 0.0),
                 std::polar(1.0 / std::numbers::sqrt2, phase)};
    conclusive.push_back((2.0 / 3.0) * outer(u));
  }
  return Povm::with_inconclusive(Mat2::zero(), std::move(conclusive));
}

Povm trine_optimal_povm(double theta, double q) {
  check_trine_angle(theta);
  check_probability(q, "trine_optimal_povm");
  const double q_c = trine_qc(theta);
  if (q > q_c + 1e-12) {
    throw std::domain_error("trine_optimal_povm: q exceeds the critical rate");
  }
  const double c2 = std::cos(theta) * std::cos(theta);
  const double xi = q / c2;  // rho is diagonal, so tr(rho pi0) = xi cos^2
  const Mat2 pi0 = Mat2::diag(xi, 0.0);
  const ReducedProblem red = reduce(trine_ensemble(theta), pi0);
  return lift_povm(trine_me_povm(), red.omega, pi0);
}

CriticalData trine_critical(double theta) {
  CriticalData c;
  c.q_c = trine_qc(theta);
  c.alpha = 1.0 / 3.0;
  return c;
}

namespace {

template <class F>
FrioCurve sample_curve(double q_min, double q_max, int steps, ExecMode exec, F&& eval) {
  if (steps < 2) throw std::invalid_argument("sample curve: steps must be >= 2");
  if (!(q_min >= 0.0 && q_max <= 1.0 && q_min < q_max)) {
    throw std::invalid_argument("sample curve: need 0 <= q_min < q_max <= 1");
  }
  FrioCurve curve;
  curve.points.resize(steps);
  parallel_for(steps, exec, [&](std::int64_t i) {
    const double q = q_min + (q_max - q_min) * static_cast<double>(i) / (steps - 1);
    curve.points[i] = eval(q);
  });
  return curve;
}

}  // namespace

FrioCurve sample_two_pure_curve(const TwoPureProblem& p, double q_min, double q_max,
                                int steps, ExecMode exec) {
  return sample_curve(q_min, q_max, steps, exec,
                      [&](double q) { return two_pure_pe_min(p, q); });
}

FrioCurve sample_trine_curve(double theta, double q_min, double q_max, int steps,
                             ExecMode exec) {
  check_trine_angle(theta);
  return sample_curve(q_min, q_max, steps, exec,
                      [&](double q) { return trine_pe_min(theta, q); });
}

CriticalData critical_from_curve(const FrioCurve& curve) {
  const auto& pts = curve.points;
  if (pts.size() < 3) {
    throw std::invalid_argument("critical_from_curve: need at least 3 samples");
  }
  if (pts.back().q < 1.0 - 1e-6) {
    throw std::invalid_argument("critical_from_curve: curve must reach q = 1");
  }
  const CurveShape shape = curve_shape(curve);
  if (shape.convexity_violation > 1e-9) {
    throw std::invalid_argument("critical_from_curve: curve is not convex");
  }

  // The tail is the first sample where the secant to (1, 0) matches the
  // right derivative. On the exact tail both slopes coincide, so detection
  // lands within one grid step of the true critical rate.
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double remaining = 1.0 - pts[i].q;
    if (remaining < 1e-12) break;
    const double secant = -pts[i].pe_min / remaining;
    const double dq = pts[i + 1].q - pts[i].q;
    if (dq <= 0.0) continue;
    const double right_slope = (pts[i + 1].pe_min - pts[i].pe_min) / dq;
    const double tol = 1e-6 * std::max({1.0, std::abs(secant), std::abs(right_slope)});
    if (std::abs(secant - right_slope) <= tol) {
      CriticalData c;
      c.q_c = pts[i].q;
      c.alpha = pts[i].pe_min / remaining;
      return c;
    }
  }
  throw std::domain_error("critical_from_curve: no tangency found");
}

}  // namespace frio
