#include "frio/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "frio/rng.hpp"

namespace frio {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kInfeasiblePenalty = 1.0e3;

// Fixed RNG streams so that the inner-search starting points do not depend
// on which orientation candidate is being evaluated; the inner value is
// then a smooth deterministic function of the reduced problem.
constexpr std::uint64_t kInnerStream = 0x1a2b3c4d;

Vec2 bloch_vector(double beta, double phi) {
  return {std::cos(0.5 * beta), std::polar(std::sin(0.5 * beta), phi)};
}

struct RawEnsemble {
  int n = 0;
  std::array<Vec2, 3> psi{};
  std::array<double, 3> eta{};
  Mat2 rho;
  double rho_lambda_max = 0.0;
};

RawEnsemble extract(const Ensemble& ensemble) {
  RawEnsemble raw;
  raw.n = static_cast<int>(ensemble.size());
  for (int i = 0; i < raw.n; ++i) {
    raw.psi[i] = ensemble.state(i).amplitudes();
    raw.eta[i] = ensemble.prior(i);
  }
  raw.rho = ensemble.average_state();
  raw.rho_lambda_max = max_eigenvalue(raw.rho);
  return raw;
}

// Exception-free reduction of the raw ensemble by a given pi0. ok = false
// when a state is annihilated or the conclusive sector vanishes.
struct RawReduced {
  bool ok = false;
  double q_bar = 0.0;
  std::array<Vec2, 3> tilde{};
  std::array<double, 3> teta{};
  int n = 0;
};

RawReduced reduce_raw(const RawEnsemble& raw, const Mat2& pi0) {
  RawReduced red;
  red.n = raw.n;
  const Mat2 omega = Mat2::identity() - pi0;
  const EigH2 eig = eig_hermitian(omega);
  if (eig.lambda_min < -1e-10) return red;
  const Mat2 omega_sqrt = std::sqrt(std::max(eig.lambda_max, 0.0)) * outer(eig.v_max) +
                          std::sqrt(std::max(eig.lambda_min, 0.0)) * outer(eig.v_min);
  double q_bar = 0.0;
  std::array<double, 3> weight{};
  for (int i = 0; i < raw.n; ++i) {
    const double t = expectation(raw.psi[i], omega);
    if (t <= 1e-13) return red;
    weight[i] = t;
    q_bar += raw.eta[i] * t;
  }
  if (q_bar <= 1e-12) return red;
  for (int i = 0; i < raw.n; ++i) {
    const Vec2 w = omega_sqrt * raw.psi[i];
    const double inv_norm = 1.0 / std::sqrt(norm2(w));
    red.tilde[i] = {w.c0 * inv_norm, w.c1 * inv_norm};
    red.teta[i] = raw.eta[i] * weight[i] / q_bar;
  }
  red.q_bar = q_bar;
  red.ok = true;
  return red;
}

// Exact minimum-error value for two reduced states.
double me2_value(const RawReduced& red) {
  const Mat2 gamma = red.teta[1] * outer(red.tilde[1]) - red.teta[0] * outer(red.tilde[0]);
  const EigH2 eig = eig_hermitian(gamma);
  return 0.5 * (1.0 - (std::abs(eig.lambda_min) + std::abs(eig.lambda_max)));
}

struct GoldenResult {
  double x = 0.0;
  double value = kInf;
};

template <class F>
GoldenResult golden_min(F&& f, double lo, double hi, int iters) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < iters; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
}

// ---- three-outcome inner problem ----

struct Me3Params {
  // Two free rank-one elements (weight, polar, azimuth); the third element
  // is the completeness residual.
  std::array<double, 6> x{2.0 / 3.0, kPi / 2.0, 0.0, 2.0 / 3.0, kPi / 2.0, 2.0 * kPi / 3.0};
};

struct InnerBudget {
  int restarts = 4;
  int sweeps = 2;
  int golden_iters = 10;
};

double me3_objective(const RawReduced& red, const Me3Params& p) {
  const Mat2 e1 = p.x[0] * outer(bloch_vector(p.x[1], p.x[2]));
  const Mat2 e2 = p.x[3] * outer(bloch_vector(p.x[4], p.x[5]));
  const Mat2 residual = Mat2::identity() - e1 - e2;
  const double lam_min = min_eigenvalue(residual);
  if (lam_min < -1e-10) {
    return kInfeasiblePenalty + std::min(1.0, -lam_min);
  }
  const double p_success = red.teta[0] * expectation(red.tilde[0], e1) +
                           red.teta[1] * expectation(red.tilde[1], e2) +
                           red.teta[2] * expectation(red.tilde[2], residual);
  return 1.0 - p_success;
}

struct Me3Solution {
  double value = kInf;
  Me3Params params;
};

// Coordinate descent with golden-section line minimizations. The first
// sweep searches each coordinate over its full range; later sweeps shrink
// the bracket around the incumbent.
Me3Solution descend_me3(const RawReduced& red, Me3Params start, const InnerBudget& budget) {
  static constexpr std::array<double, 6> lo{0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  static constexpr std::array<double, 6> hi{2.0, kPi, 2.0 * kPi, 2.0, kPi, 2.0 * kPi};

  Me3Params cur = start;
  double cur_value = me3_objective(red, cur);
  for (int sweep = 0; sweep < budget.sweeps; ++sweep) {
    for (int coord = 0; coord < 6; ++coord) {
      const double range = hi[coord] - lo[coord];
      const double width = sweep == 0 ? range : range * std::pow(0.35, sweep);
      const double a = std::max(lo[coord], cur.x[coord] - 0.5 * width);
      const double b = std::min(hi[coord], cur.x[coord] + 0.5 * width);
      const GoldenResult g = golden_min(
          [&](double v) {
            Me3Params trial = cur;
            trial.x[coord] = v;
            return me3_objective(red, trial);
          },
          a, b, budget.golden_iters);
      if (g.value < cur_value) {
        cur.x[coord] = g.x;
        cur_value = g.value;
      }
    }
  }
  return {cur_value, cur};
}

Me3Solution solve_me3(const RawReduced& red, std::uint64_t seed, const InnerBudget& budget) {
  Me3Solution best;
  for (int r = 0; r < budget.restarts; ++r) {
    Me3Params start;  // restart 0 keeps the symmetric default
    if (r > 0) {
      CounterRng rng(seed, mix64(kInnerStream + r));
      start.x = {0.3 + 0.9 * rng.next_u01(), kPi * rng.next_u01(),
                 2.0 * kPi * rng.next_u01(), 0.3 + 0.9 * rng.next_u01(),
                 kPi * rng.next_u01(),       2.0 * kPi * rng.next_u01()};
    }
    const Me3Solution sol = descend_me3(red, start, budget);
    if (sol.value < best.value) best = sol;
  }
  return best;
}

// ---- orientation search ----

struct PureCandidate {
  bool feasible = false;
  double value = kInf;  // q_bar * reduced minimum error
  double beta = 0.0;
  double phi = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;  // second eigenvalue of pi0 (full-rank candidates only)
};

Mat2 pi0_from_candidate(const PureCandidate& c) {
  const Vec2 axis = bloch_vector(c.beta, c.phi);
  Mat2 pi0 = c.xi1 * outer(axis);
  if (c.xi2 > 0.0) pi0 = pi0 + c.xi2 * outer(perp(axis));
  return pi0;
}

class OrientationSearch {
 public:
  OrientationSearch(const RawEnsemble& raw, double q, const OracleConfig& cfg,
                    bool full_rank)
      : raw_(raw), q_(q), cfg_(cfg), full_rank_(full_rank),
        scan_budget_{std::max(2, cfg.random_restarts / 8), 2, 10},
        polish_budget_{cfg.random_restarts, 8, 20} {}

  // Value of the reduced problem for a fully specified pi0 spectrum, or a
  // feasibility penalty. Used for both scanning and refinement.
  double value_for(double beta, double phi, double xi1, double xi2,
                   const InnerBudget& budget) const {
    if (xi1 < -1e-12 || xi1 > 1.0 + 1e-12 || xi2 < -1e-12 || xi2 > 1.0 + 1e-12) {
      return kInfeasiblePenalty + std::abs(xi1) + std::abs(xi2);
    }
    PureCandidate c;
    c.beta = beta;
    c.phi = phi;
    c.xi1 = std::clamp(xi1, 0.0, 1.0);
    c.xi2 = std::clamp(xi2, 0.0, 1.0);
    const RawReduced red = reduce_raw(raw_, pi0_from_candidate(c));
    if (!red.ok) return kInfeasiblePenalty;
    if (raw_.n == 2) return red.q_bar * me2_value(red);
    return red.q_bar * solve_me3(red, cfg_.seed, budget).value;
  }

  // Best candidate at a given axis: rank-one uses the unique xi that meets
  // the q constraint; full-rank minimizes over the feasible second
  // eigenvalue with the first fixed by the constraint.
  PureCandidate candidate_at(double beta, double phi, const InnerBudget& budget) const {
    PureCandidate c;
    c.beta = beta;
    c.phi = phi;
    const Vec2 axis = bloch_vector(beta, phi);
    const double a = expectation(axis, raw_.rho);
    const double b = 1.0 - a;

    if (!full_rank_ || b < 1e-12 || q_ == 0.0) {
      if (a < q_ - 1e-12) {
        c.value = kInfeasiblePenalty + (q_ - a);  // would need xi > 1
        return c;
      }
      c.xi1 = std::min(q_ / std::max(a, 1e-300), 1.0);
      c.value = value_for(beta, phi, c.xi1, 0.0, budget);
      c.feasible = c.value < kInfeasiblePenalty;
      return c;
    }

    const double lo = std::max(0.0, (q_ - a) / b);
    const double hi = std::min(1.0, q_ / b);
    if (lo > hi + 1e-15) {
      c.value = kInfeasiblePenalty + (lo - hi);
      return c;
    }
    const auto value_at_xi2 = [&](double xi2) {
      const double xi1 = (q_ - xi2 * b) / a;
      return value_for(beta, phi, xi1, xi2, budget);
    };
    GoldenResult g = golden_min(value_at_xi2, lo, hi, 16);
    // Always try the rank-one boundary of the bracket as well.
    const double edge = value_at_xi2(lo);
    if (edge <= g.value) g = {lo, edge};
    c.xi2 = g.x;
    c.xi1 = (q_ - g.x * b) / a;
    c.value = g.value;
    c.feasible = c.value < kInfeasiblePenalty;
    return c;
  }

  PureCandidate run() const {
    if (q_ == 0.0) {
      // pi0 = 0 for every orientation; nothing to scan.
      PureCandidate c = candidate_at(0.0, 0.0, polish_budget_);
      return c;
    }

    // Grid scan. Results are stored per cell and reduced serially so the
    // outcome does not depend on the thread count.
    const int n_beta = std::max(3, static_cast<int>(std::sqrt(cfg_.orientation_grid_size / 2.0)));
    const int n_phi = std::max(4, cfg_.orientation_grid_size / n_beta);
    const int cells = n_beta * n_phi;
    std::vector<double> values(cells, kInf);
    parallel_for(cells, cfg_.exec, [&](std::int64_t idx) {
      const int ib = static_cast<int>(idx) / n_phi;
      const int ip = static_cast<int>(idx) % n_phi;
      const double beta = kPi * ib / (n_beta - 1);
      const double phi = 2.0 * kPi * ip / n_phi;
      values[idx] = candidate_at(beta, phi, scan_budget_).value;
    });
    int best_idx = 0;
    for (int i = 1; i < cells; ++i) {
      if (values[i] < values[best_idx]) best_idx = i;
    }
    double beta = kPi * (best_idx / n_phi) / (n_beta - 1);
    double phi = 2.0 * kPi * (best_idx % n_phi) / n_phi;

    // Alternating golden-section refinement with shrinking brackets.
    const int per_coord = std::max(5, cfg_.refinement_iterations / 12);
    double w_beta = kPi / (n_beta - 1);
    double w_phi = 2.0 * kPi / n_phi;
    for (int round = 0; round < 6; ++round) {
      const GoldenResult gb = golden_min(
          [&](double v) {
            return candidate_at(std::clamp(v, 0.0, kPi), phi, scan_budget_).value;
          },
          std::max(0.0, beta - w_beta), std::min(kPi, beta + w_beta), per_coord);
      beta = std::clamp(gb.x, 0.0, kPi);
      const GoldenResult gp = golden_min(
          [&](double v) { return candidate_at(beta, v, scan_budget_).value; },
          phi - w_phi, phi + w_phi, per_coord);
      phi = gp.x;
      w_beta *= 0.12;
      w_phi *= 0.12;
    }

    return candidate_at(beta, phi, polish_budget_);
  }

  const InnerBudget& polish_budget() const { return polish_budget_; }

 private:
  const RawEnsemble& raw_;
  double q_;
  const OracleConfig& cfg_;
  bool full_rank_;
  InnerBudget scan_budget_;
  InnerBudget polish_budget_;
};

struct PureOutcome {
  bool feasible = false;
  double pe = kInf;
  double achieved_q = 0.0;
  Povm povm;
  double pi0_min_eigenvalue = 0.0;
  double residual_rank_excess = 0.0;
};

// Builds the exact POVM for a winning candidate and reads the reported
// numbers back through rates(), so the result is feasible by construction.
PureOutcome finalize_candidate(const Ensemble& ensemble, const RawEnsemble& raw,
                               const PureCandidate& cand, const OracleConfig& cfg,
                               const InnerBudget& polish) {
  PureOutcome out;
  if (!cand.feasible) return out;

  const Mat2 pi0 = pi0_from_candidate(cand);
  Povm povm;
  double residual_excess = 0.0;
  if (raw.n == 2) {
    const ReducedProblem red = reduce(ensemble, pi0);
    povm = lift_povm(helstrom_povm(red.ensemble), red.omega, pi0);
  } else {
    const RawReduced red = reduce_raw(raw, pi0);
    if (!red.ok) return out;
    const Me3Solution sol = solve_me3(red, cfg.seed, polish);
    const Mat2 e1 = sol.params.x[0] * outer(bloch_vector(sol.params.x[1], sol.params.x[2]));
    const Mat2 e2 = sol.params.x[3] * outer(bloch_vector(sol.params.x[4], sol.params.x[5]));
    const Mat2 residual = Mat2::identity() - e1 - e2;
    // The penalty already rejected anything below the POVM tolerance.
    if (min_eigenvalue(residual) < -1e-10) return out;
    residual_excess = std::max(0.0, min_eigenvalue(residual));
    Povm reduced_povm = Povm::with_inconclusive(Mat2::zero(), {e1, e2, residual});
    const Mat2 omega = Mat2::identity() - pi0;
    povm = lift_povm(reduced_povm, omega, pi0);
  }

  const RateTriple triple = rates(ensemble, povm);
  out.feasible = true;
  out.pe = triple.p_error;
  out.achieved_q = triple.q_inconclusive;
  out.povm = std::move(povm);
  out.pi0_min_eigenvalue = std::min(cand.xi1, cand.xi2);
  out.residual_rank_excess = residual_excess;
  return out;
}

PureOutcome search_pure(const Ensemble& ensemble, const RawEnsemble& raw, double q,
                        const OracleConfig& cfg, bool full_rank) {
  OrientationSearch search(raw, q, cfg, full_rank);
  const PureCandidate cand = search.run();
  return finalize_candidate(ensemble, raw, cand, cfg, search.polish_budget());
}

OracleResult result_from_pure(const PureOutcome& pure) {
  OracleResult res;
  res.pe = pure.pe;
  res.povm = pure.povm;
  res.achieved_q = pure.achieved_q;
  res.strategy_kind = StrategyKind::pure;
  res.pi0_min_eigenvalue = pure.pi0_min_eigenvalue;
  res.residual_rank_excess = pure.residual_rank_excess;
  return res;
}

Povm blend_povms(const Povm& a, const Povm& b, double weight) {
  Povm out = a;
  for (std::size_t k = 0; k < out.elements.size(); ++k) {
    out.elements[k] = weight * a.elements[k] + (1.0 - weight) * b.elements[k];
  }
  return out;
}

// Mixed fallback for rates beyond any pure strategy's reach: convexify
// pure anchors over the reachable range together with the trivial
// all-inconclusive point and interpolate the enclosing segment.
OracleResult mixed_fallback(const Ensemble& ensemble, const RawEnsemble& raw, double q,
                            const OracleConfig& cfg) {
  const double q_reach = raw.rho_lambda_max - 1e-9;
  const int n_anchor = 17;
  std::vector<FrioPoint> anchors;
  anchors.reserve(n_anchor + 1);
  for (int j = 0; j < n_anchor; ++j) {
    const double qj = q_reach * j / (n_anchor - 1);
    const PureOutcome pure = search_pure(ensemble, raw, qj, cfg, false);
    if (!pure.feasible) continue;
    FrioPoint pt;
    pt.q = pure.achieved_q;
    pt.pe_min = pure.pe;
    pt.regime = Regime::interior;
    pt.povm = pure.povm;
    anchors.push_back(std::move(pt));
  }
  FrioPoint trivial;
  trivial.q = 1.0;
  trivial.pe_min = 0.0;
  trivial.regime = Regime::linear_tail;
  trivial.povm = Povm::trivial_strategy(ensemble.size());
  anchors.push_back(std::move(trivial));

  const FrioCurve envelope = convexify(anchors);

  // Locate the envelope segment that brackets q.
  const FrioPoint* left = nullptr;
  const FrioPoint* right = nullptr;
  for (const FrioPoint& pt : envelope.points) {
    if (!pt.povm.has_value()) continue;  // mixed sample, not a vertex
    if (pt.q <= q) left = &pt;
    if (pt.q >= q && right == nullptr) right = &pt;
  }
  if (left == nullptr || right == nullptr) {
    throw std::domain_error("optimize_fixed_q: no strategy brackets the requested rate");
  }

  OracleResult res;
  if (left == right || right->q - left->q < 1e-12) {
    res = OracleResult{};
    res.pe = left->pe_min;
    res.povm = *left->povm;
    res.achieved_q = left->q;
    res.strategy_kind = StrategyKind::pure;
    return res;
  }
  const double weight = (right->q - q) / (right->q - left->q);
  res.povm = blend_povms(*left->povm, *right->povm, weight);
  const RateTriple triple = rates(ensemble, res.povm);
  res.pe = triple.p_error;
  res.achieved_q = triple.q_inconclusive;
  res.strategy_kind = StrategyKind::mixed;
  res.mixture = MixedStrategy{weight, *left->povm, *right->povm};
  res.pi0_min_eigenvalue = min_eigenvalue(res.povm.elements[res.povm.inconclusive_index()]);
  return res;
}

}  // namespace

OracleResult optimize_fixed_q(const Ensemble& ensemble, double q, const OracleConfig& cfg) {
  cfg.validate();
  if (!(q >= 0.0 && q < 1.0)) {
    throw std::invalid_argument("optimize_fixed_q: q must be in [0, 1)");
  }
  if (ensemble.size() != 2 && ensemble.size() != 3) {
    throw std::invalid_argument("optimize_fixed_q: two or three states supported");
  }

  const RawEnsemble raw = extract(ensemble);
  if (q > raw.rho_lambda_max) {
    return mixed_fallback(ensemble, raw, q, cfg);
  }

  PureOutcome best = search_pure(ensemble, raw, q, cfg, false);
  if (cfg.allow_full_rank_pi0) {
    const PureOutcome full = search_pure(ensemble, raw, q, cfg, true);
    if (full.feasible && full.pe < best.pe) best = full;
  }
  if (!best.feasible) {
    return mixed_fallback(ensemble, raw, q, cfg);
  }
  if (std::abs(best.achieved_q - q) > cfg.q_constraint_tolerance) {
    throw std::logic_error("optimize_fixed_q: q constraint violated by the search");
  }
  return result_from_pure(best);
}

FrioCurve convexify(const std::vector<FrioPoint>& points) {
  if (points.empty()) throw std::invalid_argument("convexify: no input points");

  std::vector<FrioPoint> sorted = points;
  std::sort(sorted.begin(), sorted.end(),
            [](const FrioPoint& a, const FrioPoint& b) { return a.q < b.q; });
  if (sorted.back().q < 1.0 - 1e-9 || sorted.back().pe_min > 1e-9) {
    throw std::invalid_argument("convexify: input must include the trivial point (1, 0)");
  }

  // Lower hull by monotone chain over (q, pe).
  std::vector<const FrioPoint*> hull;
  for (const FrioPoint& pt : sorted) {
    while (hull.size() >= 2) {
      const FrioPoint& a = *hull[hull.size() - 2];
      const FrioPoint& b = *hull[hull.size() - 1];
      const double cross = (b.q - a.q) * (pt.pe_min - a.pe_min) -
                           (b.pe_min - a.pe_min) * (pt.q - a.q);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    if (!hull.empty() && hull.back()->q == pt.q) {
      if (pt.pe_min < hull.back()->pe_min) hull.back() = &pt;
      continue;
    }
    hull.push_back(&pt);
  }

  const auto envelope_at = [&](double q) -> std::pair<double, std::pair<int, int>> {
    int seg = 0;
    while (seg + 2 < static_cast<int>(hull.size()) && hull[seg + 1]->q < q) ++seg;
    const FrioPoint& a = *hull[seg];
    const FrioPoint& b = *hull[seg + 1];
    const double lam = (b.q - a.q) > 0.0 ? (q - a.q) / (b.q - a.q) : 0.0;
    return {a.pe_min + lam * (b.pe_min - a.pe_min), {seg, seg + 1}};
  };

  FrioCurve out;
  out.points.reserve(sorted.size());
  for (const FrioPoint& pt : sorted) {
    if (hull.size() < 2) {
      out.points.push_back(pt);
      continue;
    }
    const auto [env, seg] = envelope_at(pt.q);
    if (pt.pe_min <= env + 1e-12) {
      out.points.push_back(pt);  // already on the envelope; keep as-is
      continue;
    }
    FrioPoint mixed;
    mixed.q = pt.q;
    mixed.pe_min = env;
    mixed.regime = Regime::mixed;
    const FrioPoint& a = *hull[seg.first];
    const FrioPoint& b = *hull[seg.second];
    if (a.povm.has_value() && b.povm.has_value() && b.q > a.q) {
      mixed.mixture = MixedStrategy{(b.q - pt.q) / (b.q - a.q), *a.povm, *b.povm};
    }
    out.points.push_back(std::move(mixed));
  }
  return out;
}

ZeroEigReport verify_zero_eigenvalue_theorem(const Ensemble& ensemble,
                                             const std::vector<double>& q_samples,
                                             const OracleConfig& cfg) {
  cfg.validate();
  const RawEnsemble raw = extract(ensemble);

  ZeroEigReport report;
  report.checks.reserve(q_samples.size());
  for (double q : q_samples) {
    ZeroEigCheck check;
    check.q = q;
    if (!(q >= 0.0 && q < 1.0) || q > raw.rho_lambda_max) {
      check.skipped = true;
      check.note = "q unreachable by pure strategies";
      report.checks.push_back(std::move(check));
      continue;
    }

    const PureOutcome rank1 = search_pure(ensemble, raw, q, cfg, false);
    if (!rank1.feasible) {
      check.skipped = true;
      check.note = "no feasible pure strategy";
      report.checks.push_back(std::move(check));
      continue;
    }
    check.pe_rank1 = rank1.pe;

    // Tail detection: if the pure value at q sits above the secant from a
    // nearby pure point to (1, 0), the curve is no longer strictly convex
    // at q and the rank-one claim is out of hypothesis.
    if (q >= 0.02) {
      const PureOutcome prev = search_pure(ensemble, raw, q - 0.02, cfg, false);
      if (prev.feasible) {
        const double secant_value = prev.pe * (1.0 - q) / (1.0 - prev.achieved_q);
        if (rank1.pe > secant_value + 1e-5) {
          check.skipped = true;
          check.note = "q lies on the linear tail (mixed strategies win)";
          report.checks.push_back(std::move(check));
          continue;
        }
      }
    }

    const PureOutcome full = search_pure(ensemble, raw, q, cfg, true);
    check.pe_full_rank = full.feasible ? full.pe : kInf;
    check.improvement = check.pe_rank1 - check.pe_full_rank;
    check.winner_min_eigenvalue = (full.feasible && full.pe < rank1.pe)
                                      ? full.pi0_min_eigenvalue
                                      : rank1.pi0_min_eigenvalue;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace frio
