#include "expquad/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

#include "expquad/integrators.hpp"
#include "expquad/phi.hpp"
#include "expquad/problem.hpp"
#include "expquad/quadrature.hpp"
#include "expquad/space_disc.hpp"

namespace expquad {

namespace {

constexpr double kPhiGrid[] = {-1e6, -1e3, -10.0, -1.0, -1e-3, -1e-8};

std::string describe(double worst, double tol) {
  std::ostringstream os;
  os.precision(3);
  os << "worst " << std::scientific << worst << ", tol " << tol;
  return os.str();
}

// u = c with matching boundary data; any consistent scheme must hold it.
class ConstantProblem final : public Problem {
 public:
  explicit ConstantProblem(double c) : c_(c) {}
  double f(double, double) const override { return 0.0; }
  double u0(double) const override { return c_; }
  double g_time_deriv(int r, Side, double) const override { return r == 0 ? c_ : 0.0; }
  double f_time_deriv(int, double, double) const override { return 0.0; }
  double trace_Af(int, int, Side, double) const override { return 0.0; }
  double trace_Au(int j, Side, double) const override { return j == 0 ? c_ : 0.0; }
  bool has_exact() const override { return true; }
  double exact(double, double) const override { return c_; }
  double exact_dt(double, double) const override { return 0.0; }
  double exact_dxx(double, double) const override { return 0.0; }

 private:
  double c_;
};

// Base problem scaled by a constant; the step map must scale with it.
class ScaledProblem final : public Problem {
 public:
  ScaledProblem(const Problem& base, double c) : base_(base), c_(c) {}
  double f(double x, double t) const override { return c_ * base_.f(x, t); }
  double u0(double x) const override { return c_ * base_.u0(x); }
  double g_time_deriv(int r, Side side, double t) const override {
    return c_ * base_.g_time_deriv(r, side, t);
  }
  double f_time_deriv(int r, double x, double t) const override {
    return c_ * base_.f_time_deriv(r, x, t);
  }
  double trace_Af(int l, int r, Side side, double t) const override {
    return c_ * base_.trace_Af(l, r, side, t);
  }
  double trace_Au(int j, Side side, double t) const override {
    return c_ * base_.trace_Au(j, side, t);
  }

 private:
  const Problem& base_;
  double c_;
};

Eigen::MatrixXd dense_expm(const Eigen::MatrixXd& A) {
  const double norm = A.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  double scale = 1.0;
  while (norm * scale > 0.25) {
    scale *= 0.5;
    ++s;
  }
  const Eigen::MatrixXd B = scale * A;
  const int n = static_cast<int>(A.rows());
  Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int m = 1; m <= 40; ++m) {
    term = (term * B / m).eval();
    acc += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < s; ++i) acc = (acc * acc).eval();
  return acc;
}

// phi_j(kA)v by composite Gauss quadrature of the defining integral,
// phi_j(kA) = k^-j int_0^k exp((k-tau)A) tau^(j-1)/(j-1)! dtau.
Eigen::VectorXd phi_integral(const Eigen::MatrixXd& A, int j, double k,
                             const Eigen::VectorXd& v, int panels) {
  if (j == 0) return dense_expm(k * A) * v;
  constexpr double gx[] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                           0.5384693101056831, 0.9061798459386640};
  constexpr double gw[] = {0.2369268850561891, 0.4786286704993665,
                           0.5688888888888889, 0.4786286704993665,
                           0.2369268850561891};
  double factj1 = 1.0;
  for (int m = 2; m < j; ++m) factj1 *= m;
  const double width = k / panels;
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(v.size());
  for (int pnl = 0; pnl < panels; ++pnl) {
    const double mid = (pnl + 0.5) * width;
    for (int q = 0; q < 5; ++q) {
      const double tau = mid + 0.5 * width * gx[q];
      const double weight = 0.5 * width * gw[q];
      const double density = std::pow(tau, j - 1) / factj1;
      acc += (weight * density) * (dense_expm((k - tau) * A) * v);
    }
  }
  return acc / std::pow(k, j);
}

double factorial(int n) {
  double f = 1.0;
  for (int m = 2; m <= n; ++m) f *= m;
  return f;
}

void add_check(std::vector<CheckResult>& out, const std::string& name,
               double worst, double tol) {
  out.push_back({name, worst <= tol, describe(worst, tol)});
}

void check_phi_scalar(std::vector<CheckResult>& out) {
  double worst_rec = 0.0;
  double worst_bound = 0.0;
  for (const double z : kPhiGrid) {
    for (int j = 0; j <= 12; ++j) {
      const double pj = phi_scalar(j, z);
      const double pj1 = phi_scalar(j + 1, z);
      const double resid = std::abs(pj1 * z - pj + 1.0 / factorial(j));
      worst_rec = std::max(worst_rec, resid / std::max(1.0, std::abs(pj)));
      const double upper = (1.0 + 1e-13) / factorial(j);
      // exp underflows below about -745, so phi_0 is only nonnegative there.
      const bool positive = j >= 1 || z > -700.0 ? pj > 0.0 : pj >= 0.0;
      if (!(positive && pj <= upper)) worst_bound = std::max(worst_bound, 1.0);
    }
  }
  add_check(out, "phi recursion identity", worst_rec, 1e-12);
  add_check(out, "phi bounds", worst_bound, 0.5);
}

void check_quadrature(std::vector<CheckResult>& out) {
  std::vector<QuadratureRule> rules;
  rules.push_back(make_rule(RuleKind::trapezoidal, 2));
  rules.push_back(make_rule(RuleKind::simpson, 3));
  for (int s = 1; s <= 4; ++s) rules.push_back(make_rule(RuleKind::gauss, s));
  for (int s = 2; s <= 4; ++s) rules.push_back(make_rule(RuleKind::lobatto, s));

  double worst = 0.0;
  for (const auto& rule : rules) {
    for (int r = 0; r < rule.s; ++r) {
      for (int l = 1; l <= rule.s; ++l) {
        double sum = 0.0;
        for (int i = 0; i < rule.s; ++i)
          sum += std::pow(rule.nodes[i], r) * rule.coeffs(i, l - 1);
        const double target = l == r + 1 ? factorial(r) : 0.0;
        worst = std::max(worst, std::abs(sum - target));
      }
    }
    // Lagrange reconstruction at the nodes.
    for (int i = 0; i < rule.s; ++i) {
      for (int m = 0; m < rule.s; ++m) {
        double li = 0.0;
        for (int l = 1; l <= rule.s; ++l)
          li += rule.coeffs(i, l - 1) * std::pow(rule.nodes[m], l - 1) / factorial(l - 1);
        worst = std::max(worst, std::abs(li - (i == m ? 1.0 : 0.0)));
      }
    }
    worst = std::max(worst, std::abs(weights_at_zero(rule).sum() - 1.0));
  }
  add_check(out, "quadrature interpolation identities", worst, 1e-12);

  bool degrees_ok = true;
  for (int s = 1; s <= 4; ++s)
    degrees_ok &= exactness_degree(make_rule(RuleKind::gauss, s)) == 2 * s - 1;
  for (int s = 2; s <= 4; ++s)
    degrees_ok &= exactness_degree(make_rule(RuleKind::lobatto, s)) == 2 * s - 3;
  degrees_ok &= exactness_degree(make_rule(RuleKind::trapezoidal, 2)) == 1;
  degrees_ok &= exactness_degree(make_rule(RuleKind::simpson, 3)) == 3;
  out.push_back({"quadrature exactness degrees", degrees_ok,
                 degrees_ok ? "gauss 2s-1, lobatto 2s-3, trapezoidal 1, simpson 3"
                            : "unexpected degree"});

  double worst_sym = 0.0;
  for (int s = 1; s <= 4; ++s) {
    const auto rule = make_rule(RuleKind::gauss, s);
    for (int i = 0; i < s; ++i)
      worst_sym = std::max(worst_sym,
                           std::abs(rule.nodes[i] + rule.nodes[s - 1 - i] - 1.0));
  }
  add_check(out, "gauss node symmetry", worst_sym, 1e-14);
}

void check_discretizations(std::vector<CheckResult>& out) {
  {
    const auto disc = lgl_collocation(39);
    const Eigen::MatrixXd S =
        disc.d.asDiagonal() * disc.A0 * disc.d.cwiseInverse().asDiagonal();
    const double asym = (S - S.transpose()).cwiseAbs().maxCoeff();
    add_check(out, "lgl symmetrizability", asym,
              1e-9 * S.cwiseAbs().maxCoeff());
  }
  {
    double worst = -1e300;
    for (const auto& disc :
         {finite_difference(10), finite_difference(100), lgl_collocation(8),
          lgl_collocation(39)}) {
      const Eigen::MatrixXd S =
          disc.d.asDiagonal() * disc.A0 * disc.d.cwiseInverse().asDiagonal();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
          (0.5 * (S + S.transpose())).eval());
      worst = std::max(worst, es.eigenvalues().maxCoeff());
    }
    out.push_back({"negative spectrum", worst < 0.0,
                   describe(worst, 0.0) + " (largest eigenvalue)"});
  }
  {
    double worst_orth = 0.0, worst_rec = 0.0;
    for (const auto& disc : {finite_difference(100), lgl_collocation(39)}) {
      const PhiEvaluator ev(disc);
      const int n = ev.dim();
      const Eigen::MatrixXd& V = ev.eigenvectors();
      worst_orth = std::max(
          worst_orth,
          (V * V.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
      const Eigen::MatrixXd rebuilt = ev.symmetrizer().cwiseInverse().asDiagonal() *
                                      V * ev.eigenvalues().asDiagonal() *
                                      V.transpose() * ev.symmetrizer().asDiagonal();
      const double scale = ev.eigenvalues().cwiseAbs().maxCoeff();
      worst_rec = std::max(worst_rec,
                           (rebuilt - disc.A0).cwiseAbs().maxCoeff() / scale);
    }
    add_check(out, "eigenbasis orthogonality", worst_orth, 1e-10);
    add_check(out, "operator reconstruction", worst_rec, 1e-8);
  }
  {
    double worst = 0.0;
    for (const auto& disc : {finite_difference(100), lgl_collocation(39)}) {
      const Eigen::VectorXd resid =
          disc.A0 * Eigen::VectorXd::Ones(disc.dim()) + disc.beta_left +
          disc.beta_right;
      worst = std::max(worst, resid.cwiseAbs().maxCoeff() /
                                  disc.A0.cwiseAbs().maxCoeff());
    }
    add_check(out, "constant state consistency", worst, 1e-8);
  }
}

void check_phi_oracle(std::vector<CheckResult>& out) {
  double worst = 0.0;
  for (const auto& disc :
       {finite_difference(4), finite_difference(6), lgl_collocation(5),
        lgl_collocation(7)}) {
    const PhiEvaluator ev(disc);
    const Eigen::VectorXd v = Eigen::VectorXd::Ones(disc.dim());
    for (int j = 0; j <= 3; ++j) {
      const Eigen::VectorXd got = ev.apply(j, 0.05, v);
      const Eigen::VectorXd want = phi_integral(disc.A0, j, 0.05, v, 1000);
      worst = std::max(worst, (got - want).norm() / want.norm());
    }
  }
  add_check(out, "phi action vs integral oracle", worst, 1e-10);
}

void check_elliptic(std::vector<CheckResult>& out) {
  std::vector<double> errs;
  for (const int M : {50, 100, 200, 400}) {
    const auto disc = finite_difference(M);
    const Eigen::VectorXd F = restrict(disc, [](double x) { return std::exp(x); });
    const Eigen::VectorXd w = elliptic_solve(disc, F, 1.0, std::exp(1.0));
    errs.push_back((w - F).cwiseAbs().maxCoeff());  // exact u equals F here
  }
  double worst_dev = 0.0;
  for (std::size_t i = 1; i < errs.size(); ++i)
    worst_dev = std::max(worst_dev, std::abs(std::log2(errs[i - 1] / errs[i]) - 2.0));
  add_check(out, "elliptic fd order", worst_dev, 0.1);

  const auto disc = lgl_collocation(20);
  const Eigen::VectorXd F = restrict(disc, [](double x) { return std::exp(x); });
  const Eigen::VectorXd w = elliptic_solve(disc, F, 1.0, std::exp(1.0));
  add_check(out, "elliptic lgl accuracy", (w - F).cwiseAbs().maxCoeff(), 1e-10);
}

void check_harmonic_extension(std::vector<CheckResult>& out) {
  double worst = 0.0;
  for (const int M : {10, 100, 1000}) {
    const auto disc = finite_difference(M);
    Eigen::MatrixXd B(M, 2);
    B.col(0) = disc.beta_left;
    B.col(1) = disc.beta_right;
    const Eigen::MatrixXd X = disc.A0.partialPivLu().solve(B);
    const Eigen::MatrixXd W = disc.alpha.cwiseSqrt().asDiagonal() * X;
    worst = std::max(worst, W.jacobiSvd().singularValues()[0]);
  }
  add_check(out, "harmonic extension bound", worst, 2.0);
}

void check_propagator_sum(std::vector<CheckResult>& out) {
  double worst = 0.0;
  for (const auto& disc : {finite_difference(999), lgl_collocation(39)}) {
    const PhiEvaluator ev(disc);
    for (const double k : {1e-3, 1e-2, 1e-1}) {
      const int N = static_cast<int>(std::lround(1.0 / k));
      for (int m = 0; m < ev.dim(); ++m) {
        const double x = k * ev.eigenvalues()[m];
        const double e1 = std::exp(x);
        double en = e1;
        for (int n = 1; n <= N; ++n) {
          worst = std::max(worst, std::abs(x * (e1 - en) / (1.0 - e1)));
          en *= e1;
        }
      }
    }
  }
  add_check(out, "propagator sum bound", worst, 1.1);
}

void check_problems(std::vector<CheckResult>& out) {
  double worst_pde = 0.0, worst_trace = 0.0, worst_bc = 0.0;
  for (const char* name : {"poly", "exp", "sine"}) {
    const auto prob = make_problem(name);
    for (int ix = 0; ix < 20; ++ix) {
      for (int it = 0; it < 20; ++it) {
        const double x = (ix + 0.5) / 20.0;
        const double t = it / 19.0;
        const double resid =
            prob->exact_dt(x, t) - prob->exact_dxx(x, t) - prob->f(x, t);
        worst_pde = std::max(worst_pde, std::abs(resid));
      }
    }
    for (const Side side : {Side::left, Side::right}) {
      for (const double t : {0.0, 0.3, 1.0}) {
        for (int j = 0; j <= Problem::p_max; ++j) {
          const double analytic = prob->trace_Au(j, side, t);
          const double from_data = trace_from_data(*prob, j, side, t);
          worst_trace = std::max(worst_trace, std::abs(from_data - analytic) /
                                                  std::max(1.0, std::abs(analytic)));
        }
        worst_bc = std::max(worst_bc, std::abs(prob->trace_Au(0, side, t) -
                                               prob->g(side, t)));
      }
    }
  }
  add_check(out, "pde residual", worst_pde, 1e-12);
  add_check(out, "trace recurrence", worst_trace, 1e-9);
  add_check(out, "boundary data consistency", worst_bc, 1e-14);
}

void check_integrators(std::vector<CheckResult>& out) {
  const std::vector<std::pair<QuadratureRule, int>> rules = {
      {make_rule(RuleKind::trapezoidal, 2), 2},
      {make_rule(RuleKind::simpson, 3), 4},
      {make_rule(RuleKind::gauss, 2), 4}};

  {
    const ConstantProblem prob(0.7);
    double worst = 0.0;
    for (const auto& disc : {finite_difference(50), lgl_collocation(12)}) {
      const PhiEvaluator ev(disc);
      const Eigen::VectorXd ref = Eigen::VectorXd::Constant(disc.dim(), 0.7);
      for (const auto& [rule, p] : rules) {
        for (const Approach approach : {Approach::classical, Approach::corrected}) {
          IntegratorConfig cfg{rule, approach, p, 1.0 / 20, 0.0, 1.0};
          integrate(disc, ev, prob, cfg, [&](const State& st) {
            worst = std::max(worst, discrete_norm(disc, st.U - ref));
          });
        }
      }
    }
    add_check(out, "constant preservation", worst, 1e-11);
  }
  {
    const auto prob = make_problem("sine");
    double worst = 0.0;
    for (const auto& disc : {finite_difference(100), lgl_collocation(16)}) {
      const PhiEvaluator ev(disc);
      for (const auto& [rule, p] : rules) {
        State a{0.0, restrict(disc, [&](double x) { return prob->u0(x); })};
        State b = a;
        for (int n = 0; n < 16; ++n) {
          a = classical_step(disc, ev, *prob, rule, a, 1.0 / 16);
          b = corrected_step(disc, ev, *prob, rule, p, b, 1.0 / 16);
          worst = std::max(worst, discrete_norm(disc, a.U - b.U));
        }
      }
    }
    add_check(out, "classical corrected equivalence", worst, 1e-12);
  }
  {
    const auto base = make_problem("exp");
    const ScaledProblem twice(*base, 2.0);
    const auto disc = lgl_collocation(12);
    const PhiEvaluator ev(disc);
    const auto rule = make_rule(RuleKind::gauss, 2);
    double worst = 0.0;
    for (const Approach approach : {Approach::classical, Approach::corrected}) {
      State a{0.0, restrict(disc, [&](double x) { return base->u0(x); })};
      State b{0.0, restrict(disc, [&](double x) { return twice.u0(x); })};
      for (int n = 0; n < 8; ++n) {
        if (approach == Approach::classical) {
          a = classical_step(disc, ev, *base, rule, a, 1.0 / 8);
          b = classical_step(disc, ev, twice, rule, b, 1.0 / 8);
        } else {
          a = corrected_step(disc, ev, *base, rule, 4, a, 1.0 / 8);
          b = corrected_step(disc, ev, twice, rule, 4, b, 1.0 / 8);
        }
      }
      worst = std::max(worst, discrete_norm(disc, b.U - 2.0 * a.U) /
                                  discrete_norm(disc, a.U));
    }
    add_check(out, "linearity", worst, 1e-12);
  }
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

VerificationReport run_verification() {
  VerificationReport report;
  check_phi_scalar(report.checks);
  check_quadrature(report.checks);
  check_discretizations(report.checks);
  check_phi_oracle(report.checks);
  check_elliptic(report.checks);
  check_harmonic_extension(report.checks);
  check_propagator_sum(report.checks);
  check_problems(report.checks);
  check_integrators(report.checks);
  return report;
}

void print_report(const VerificationReport& report, std::ostream& out) {
  for (const auto& check : report.checks)
    out << (check.passed ? "PASS" : "FAIL") << "  " << check.name << "  ("
        << check.detail << ")\n";
  const std::size_t failed =
      std::count_if(report.checks.begin(), report.checks.end(),
                    [](const CheckResult& c) { return !c.passed; });
  if (failed == 0)
    out << "all " << report.checks.size() << " checks passed\n";
  else
    out << failed << " of " << report.checks.size() << " checks failed\n";
}

}  // namespace expquad
