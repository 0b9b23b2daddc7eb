#include "expquad/problem.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace expquad {

namespace {

void check_order(int value, int max, const char* what) {
  if (value < 0 || value > max)
    throw std::invalid_argument(std::string(what) + ": derivative order out of range");
}

double sign_pow(int r) { return r % 2 == 0 ? 1.0 : -1.0; }

// u = x(1-x)e^-t, f = (2 - x(1-x))e^-t, homogeneous boundary.
class PolyProblem final : public Problem {
 public:
  double f(double x, double t) const override {
    return (2.0 - x * (1.0 - x)) * std::exp(-t);
  }
  double u0(double x) const override { return x * (1.0 - x); }
  double g_time_deriv(int r, Side, double) const override {
    check_order(r, p_max, "PolyProblem::g_time_deriv");
    return 0.0;
  }
  double f_time_deriv(int r, double x, double t) const override {
    check_order(r, p_max, "PolyProblem::f_time_deriv");
    return sign_pow(r) * f(x, t);
  }
  double trace_Af(int l, int r, Side, double t) const override {
    check_order(l, p_max - 1, "PolyProblem::trace_Af");
    check_order(r, p_max, "PolyProblem::trace_Af");
    // d^(2l)/dx^(2l) of 2 - x + x^2: itself, then the constant 2, then 0.
    const double space = l == 0 ? 2.0 : (l == 1 ? 2.0 : 0.0);
    return sign_pow(r) * space * std::exp(-t);
  }
  double trace_Au(int j, Side, double t) const override {
    check_order(j, p_max, "PolyProblem::trace_Au");
    if (j == 0) return 0.0;
    if (j == 1) return -2.0 * std::exp(-t);
    return 0.0;
  }
  bool has_exact() const override { return true; }
  double exact(double x, double t) const override {
    return x * (1.0 - x) * std::exp(-t);
  }
  double exact_dt(double x, double t) const override { return -exact(x, t); }
  double exact_dxx(double, double t) const override { return -2.0 * std::exp(-t); }
};

// u = e^(x-t), f = -2e^(x-t), boundary data moving on both sides.
class ExpProblem final : public Problem {
 public:
  double f(double x, double t) const override { return -2.0 * std::exp(x - t); }
  double u0(double x) const override { return std::exp(x); }
  double g_time_deriv(int r, Side side, double t) const override {
    check_order(r, p_max, "ExpProblem::g_time_deriv");
    const double xb = side == Side::left ? 0.0 : 1.0;
    return sign_pow(r) * std::exp(xb - t);
  }
  double f_time_deriv(int r, double x, double t) const override {
    check_order(r, p_max, "ExpProblem::f_time_deriv");
    return sign_pow(r) * f(x, t);
  }
  double trace_Af(int l, int r, Side side, double t) const override {
    check_order(l, p_max - 1, "ExpProblem::trace_Af");
    check_order(r, p_max, "ExpProblem::trace_Af");
    const double xb = side == Side::left ? 0.0 : 1.0;
    return sign_pow(r) * -2.0 * std::exp(xb - t);
  }
  double trace_Au(int j, Side side, double t) const override {
    check_order(j, p_max, "ExpProblem::trace_Au");
    const double xb = side == Side::left ? 0.0 : 1.0;
    return std::exp(xb - t);
  }
  bool has_exact() const override { return true; }
  double exact(double x, double t) const override { return std::exp(x - t); }
  double exact_dt(double x, double t) const override { return -exact(x, t); }
  double exact_dxx(double x, double t) const override { return exact(x, t); }
};

// u = sin(pi x)e^(-pi^2 t), source-free; every boundary trace vanishes.
class SineProblem final : public Problem {
 public:
  double f(double, double) const override { return 0.0; }
  double u0(double x) const override { return std::sin(std::numbers::pi * x); }
  double g_time_deriv(int r, Side, double) const override {
    check_order(r, p_max, "SineProblem::g_time_deriv");
    return 0.0;
  }
  double f_time_deriv(int r, double, double) const override {
    check_order(r, p_max, "SineProblem::f_time_deriv");
    return 0.0;
  }
  double trace_Af(int l, int r, Side, double) const override {
    check_order(l, p_max - 1, "SineProblem::trace_Af");
    check_order(r, p_max, "SineProblem::trace_Af");
    return 0.0;
  }
  double trace_Au(int j, Side, double) const override {
    check_order(j, p_max, "SineProblem::trace_Au");
    return 0.0;
  }
  bool has_exact() const override { return true; }
  double exact(double x, double t) const override {
    const double pi = std::numbers::pi;
    return std::sin(pi * x) * std::exp(-pi * pi * t);
  }
  double exact_dt(double x, double t) const override {
    const double pi = std::numbers::pi;
    return -pi * pi * exact(x, t);
  }
  double exact_dxx(double x, double t) const override {
    const double pi = std::numbers::pi;
    return -pi * pi * exact(x, t);
  }
};

}  // namespace

double Problem::exact(double, double) const {
  throw std::logic_error("Problem: no exact solution available");
}
double Problem::exact_dt(double, double) const {
  throw std::logic_error("Problem: no exact solution available");
}
double Problem::exact_dxx(double, double) const {
  throw std::logic_error("Problem: no exact solution available");
}

std::unique_ptr<Problem> make_problem(std::string_view name) {
  if (name == "poly") return std::make_unique<PolyProblem>();
  if (name == "exp") return std::make_unique<ExpProblem>();
  if (name == "sine") return std::make_unique<SineProblem>();
  throw std::invalid_argument("make_problem: unknown problem '" + std::string(name) + "'");
}

double trace_from_data(const Problem& prob, int j, Side side, double t) {
  if (j < 0 || j > Problem::p_max)
    throw std::invalid_argument("trace_from_data: order out of range");
  double v = prob.g_time_deriv(j, side, t);
  for (int l = 0; l < j; ++l) v -= prob.trace_Af(l, j - 1 - l, side, t);
  return v;
}

}  // namespace expquad
