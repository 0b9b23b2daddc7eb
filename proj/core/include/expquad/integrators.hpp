#pragma once

#include <Eigen/Dense>

#include <functional>

#include "expquad/phi.hpp"
#include "expquad/problem.hpp"
#include "expquad/quadrature.hpp"
#include "expquad/space_disc.hpp"

namespace expquad {

enum class Approach { classical, corrected };

struct State {
  double t = 0.0;
  Eigen::VectorXd U;
};

struct IntegratorConfig {
  QuadratureRule rule;
  Approach approach = Approach::classical;
  int p = 0;  // trace depth; corrected only, must be >= 1 there
  double k = 0.0;
  double t0 = 0.0;
  double T = 1.0;
};

// Trace depth paired with the achievable order of each rule family:
// 2s for gauss, 2s-2 otherwise.
int default_p(const QuadratureRule& rule);

// One step of the discretize-space-first scheme:
// U+ = exp(kA0)U + k sum_ij a_ij phi_j(kA0) F(t_n + c_i k), where
// F(t) = P_h f(.,t) + A_h Q_h g(t) + L_h Q_h (f(.,t)|boundary - g'(t)).
State classical_step(const SpaceDiscretization& disc, const PhiEvaluator& ev,
                     const Problem& prob, const QuadratureRule& rule,
                     const State& state, double k);

// One step of the boundary-corrected scheme with trace depth p >= 1.
// Boundary traces of u at t_n come from the data recurrence, never from
// the exact solution.
State corrected_step(const SpaceDiscretization& disc, const PhiEvaluator& ev,
                     const Problem& prob, const QuadratureRule& rule, int p,
                     const State& state, double k);

// Runs (T - t0)/k steps from U0 = restrict(u0). The step count must be an
// integer to 1e-12 relative. The observer, when set, sees every state
// after the initial one.
State integrate(const SpaceDiscretization& disc, const PhiEvaluator& ev,
                const Problem& prob, const IntegratorConfig& config,
                const std::function<void(const State&)>& observer = {});

}  // namespace expquad
