#include "expquad/integrators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace expquad {

namespace {

void check_step_inputs(const SpaceDiscretization& disc, const State& state, double k) {
  if (state.U.size() != disc.dim())
    throw std::invalid_argument("step: state dimension mismatch");
  if (k <= 0.0) throw std::invalid_argument("step: stepsize must be positive");
}

// Accumulates one step as sum_q phi_q(kA0) * (vector part + boundary pairs),
// so every phi order rides a single batched transform.
struct TermSet {
  std::vector<Eigen::VectorXd> vec;
  std::vector<double> bl, br;  // beta_left/beta_right coefficients
  std::vector<double> hl, hr;  // gamma (hook) coefficients

  TermSet(int orders, int m)
      : vec(orders, Eigen::VectorXd::Zero(m)),
        bl(orders, 0.0), br(orders, 0.0), hl(orders, 0.0), hr(orders, 0.0) {}

  void flush(const SpaceDiscretization& disc) {
    for (std::size_t q = 0; q < vec.size(); ++q) {
      if (bl[q] != 0.0 || br[q] != 0.0)
        vec[q] += inject_boundary(disc, bl[q], br[q]);
      if (hl[q] != 0.0 || hr[q] != 0.0)
        vec[q] += boundary_hook(disc, hl[q], hr[q]);
    }
  }
};

}  // namespace

int default_p(const QuadratureRule& rule) {
  if (rule.kind == RuleKind::gauss) return 2 * rule.s;
  return 2 * rule.s - 2;
}

State classical_step(const SpaceDiscretization& disc, const PhiEvaluator& ev,
                     const Problem& prob, const QuadratureRule& rule,
                     const State& state, double k) {
  check_step_inputs(disc, state, k);
  TermSet terms(rule.s + 1, disc.dim());
  terms.vec[0] = state.U;

  for (int i = 0; i < rule.s; ++i) {
    const double ti = state.t + rule.nodes[i] * k;
    const Eigen::VectorXd Pf =
        restrict(disc, [&](double x) { return prob.f(x, ti); });
    const double gl = prob.g(Side::left, ti);
    const double gr = prob.g(Side::right, ti);
    const double hkl = prob.f(0.0, ti) - prob.g_time_deriv(1, Side::left, ti);
    const double hkr = prob.f(1.0, ti) - prob.g_time_deriv(1, Side::right, ti);
    for (int j = 1; j <= rule.s; ++j) {
      const double w = k * rule.coeffs(i, j - 1);
      if (w == 0.0) continue;
      terms.vec[j] += w * Pf;
      terms.bl[j] += w * gl;
      terms.br[j] += w * gr;
      terms.hl[j] += w * hkl;
      terms.hr[j] += w * hkr;
    }
  }
  terms.flush(disc);
  return {state.t + k, ev.apply_combination(k, terms.vec)};
}

State corrected_step(const SpaceDiscretization& disc, const PhiEvaluator& ev,
                     const Problem& prob, const QuadratureRule& rule, int p,
                     const State& state, double k) {
  check_step_inputs(disc, state, k);
  if (p < 1 || p > Problem::p_max)
    throw std::invalid_argument("corrected_step: trace depth p out of range");

  const int orders = p + rule.s + 1;
  TermSet terms(orders, disc.dim());
  terms.vec[0] = state.U;

  // Homogeneous part: traces of u at t_n from the data recurrence.
  std::vector<double> ul(p + 1), ur(p + 1);
  for (int j = 0; j <= p; ++j) {
    ul[j] = trace_from_data(prob, j, Side::left, state.t);
    ur[j] = trace_from_data(prob, j, Side::right, state.t);
  }
  double kj = 1.0;
  for (int j = 1; j <= p; ++j) {
    kj *= k;
    terms.bl[j] += kj * ul[j - 1];
    terms.br[j] += kj * ur[j - 1];
    terms.hl[j] -= kj * ul[j];
    terms.hr[j] -= kj * ur[j];
  }
  terms.bl[p + 1] += kj * k * ul[p];
  terms.br[p + 1] += kj * k * ur[p];

  // Quadrature part over the s nodes.
  const double kp = std::pow(k, p);
  std::vector<double> fl(p), fr(p);
  for (int i = 0; i < rule.s; ++i) {
    const double ti = state.t + rule.nodes[i] * k;
    const Eigen::VectorXd Pf =
        restrict(disc, [&](double x) { return prob.f(x, ti); });
    for (int l = 0; l < p; ++l) {
      fl[l] = prob.trace_Af(l, 0, Side::left, ti);
      fr[l] = prob.trace_Af(l, 0, Side::right, ti);
    }
    for (int j = 1; j <= rule.s; ++j) {
      const double w = k * rule.coeffs(i, j - 1);
      if (w == 0.0) continue;
      terms.vec[j] += w * Pf;
      double kl = 1.0;
      for (int l = 0; l <= p - 2; ++l) {
        kl *= k;
        terms.bl[j + l + 1] += w * kl * fl[l];
        terms.br[j + l + 1] += w * kl * fr[l];
        terms.hl[j + l + 1] -= w * kl * fl[l + 1];
        terms.hr[j + l + 1] -= w * kl * fr[l + 1];
      }
      terms.bl[p + j] += w * kp * fl[p - 1];
      terms.br[p + j] += w * kp * fr[p - 1];
    }
  }
  terms.flush(disc);
  return {state.t + k, ev.apply_combination(k, terms.vec)};
}

State integrate(const SpaceDiscretization& disc, const PhiEvaluator& ev,
                const Problem& prob, const IntegratorConfig& config,
                const std::function<void(const State&)>& observer) {
  if (config.k <= 0.0) throw std::invalid_argument("integrate: stepsize must be positive");
  const double span = config.T - config.t0;
  if (span < 0.0) throw std::invalid_argument("integrate: T must not precede t0");
  const double steps = span / config.k;
  const long long N = std::llround(steps);
  if (std::abs(steps - static_cast<double>(N)) > 1e-12 * std::max(1.0, steps))
    throw std::invalid_argument("integrate: stepsize must divide the time interval");
  if (config.approach == Approach::corrected &&
      (config.p < 1 || config.p > Problem::p_max))
    throw std::invalid_argument("integrate: corrected approach needs 1 <= p <= 8");

  State state{config.t0, restrict(disc, [&](double x) { return prob.u0(x); })};
  for (long long n = 0; n < N; ++n) {
    state.t = config.t0 + static_cast<double>(n) * config.k;
    state = config.approach == Approach::classical
                ? classical_step(disc, ev, prob, config.rule, state, config.k)
                : corrected_step(disc, ev, prob, config.rule, config.p, state, config.k);
    if (observer) observer(state);
  }
  state.t = config.t0 + static_cast<double>(N) * config.k;
  return state;
}

}  // namespace expquad
