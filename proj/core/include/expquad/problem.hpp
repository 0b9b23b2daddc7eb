#pragma once

#include <memory>
#include <string_view>

namespace expquad {

enum class Side { left, right };

// Linear parabolic problem u_t = u_xx + f on [0,1] with Dirichlet data
// g(side, t) and initial value u0. Implementations supply closed-form
// boundary traces of powers of the Laplacian applied to u and f; the
// corrected integrator and the trace recurrence consume them.
class Problem {
 public:
  static constexpr int p_max = 8;

  virtual ~Problem() = default;

  virtual double f(double x, double t) const = 0;
  virtual double u0(double x) const = 0;

  double g(Side side, double t) const { return g_time_deriv(0, side, t); }

  // d^r/dt^r of the boundary data, 0 <= r <= p_max.
  virtual double g_time_deriv(int r, Side side, double t) const = 0;

  // d^r/dt^r of f at fixed x, 0 <= r <= p_max.
  virtual double f_time_deriv(int r, double x, double t) const = 0;

  // Boundary value of (d/dx)^(2l) (d/dt)^r f, 0 <= l <= p_max - 1.
  virtual double trace_Af(int l, int r, Side side, double t) const = 0;

  // Boundary value of (d/dx)^(2j) u, 0 <= j <= p_max.
  virtual double trace_Au(int j, Side side, double t) const = 0;

  virtual bool has_exact() const { return false; }
  virtual double exact(double x, double t) const;
  virtual double exact_dt(double x, double t) const;
  virtual double exact_dxx(double x, double t) const;
};

// Built-in problems:
//   poly  u = x(1-x)e^-t, homogeneous boundary, nonzero source
//   exp   u = e^(x-t), time-dependent boundary on both sides
//   sine  u = sin(pi x)e^(-pi^2 t), source-free, all boundary traces zero
std::unique_ptr<Problem> make_problem(std::string_view name);

// Boundary value of (d/dx)^(2j) u built from g and f data alone:
// g^(j)(t) minus the sum over l < j of the trace of (d/dx)^(2l) f
// differentiated j-1-l times in t. Never touches the exact solution.
double trace_from_data(const Problem& prob, int j, Side side, double t);

}  // namespace expquad
