#include "legendre.hpp"

#include <cmath>
#include <numbers>

#include "expquad/errors.hpp"

namespace expquad::detail {

namespace {

constexpr int kMaxNewton = 100;
constexpr double kResidualTol = 1e-15;

}  // namespace

std::pair<double, double> legendre_pair(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double pm = 1.0, p = x;
  for (int m = 2; m <= n; ++m) {
    const double pn = ((2 * m - 1) * x * p - (m - 1) * pm) / m;
    pm = p;
    p = pn;
  }
  const double dp = n * (x * p - pm) / (x * x - 1.0);
  return {p, dp};
}

Eigen::VectorXd legendre_roots(int n) {
  Eigen::VectorXd roots(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = -std::cos(std::numbers::pi * (4.0 * i + 3.0) / (4.0 * n + 2.0));
    bool converged = false;
    for (int it = 0; it < kMaxNewton; ++it) {
      const auto [p, dp] = legendre_pair(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= kResidualTol) {
        converged = true;
        break;
      }
    }
    if (!converged) throw NumericalError("Legendre root iteration did not converge");
    roots[i] = x;
    roots[n - 1 - i] = -x;
  }
  if (n % 2 == 1) roots[n / 2] = 0.0;
  return roots;
}

LobattoSet gauss_lobatto(int J) {
  if (J < 1) throw NumericalError("Gauss-Lobatto set needs degree >= 1");
  LobattoSet set;
  set.nodes.resize(J + 1);
  set.weights.resize(J + 1);
  set.nodes[0] = -1.0;
  set.nodes[J] = 1.0;
  const int half = J / 2;
  for (int i = 1; i <= half; ++i) {
    // Interior nodes are the roots of P_J'; Chebyshev-Lobatto start values.
    double x = -std::cos(std::numbers::pi * i / J);
    bool converged = false;
    for (int it = 0; it < kMaxNewton; ++it) {
      const auto [p, dp] = legendre_pair(J, x);
      const double ddp = (2.0 * x * dp - J * (J + 1.0) * p) / (1.0 - x * x);
      const double dx = dp / ddp;
      x -= dx;
      if (std::abs(dx) <= kResidualTol) {
        converged = true;
        break;
      }
    }
    if (!converged) throw NumericalError("Gauss-Lobatto node iteration did not converge");
    set.nodes[i] = x;
    set.nodes[J - i] = -x;
  }
  if (J % 2 == 0) set.nodes[J / 2] = 0.0;
  const double c = 2.0 / (J * (J + 1.0));
  for (int i = 0; i <= J; ++i) {
    const double p = legendre_pair(J, set.nodes[i]).first;
    set.weights[i] = c / (p * p);
  }
  return set;
}

Eigen::MatrixXd differentiation_matrix(const Eigen::VectorXd& nodes) {
  const int n = static_cast<int>(nodes.size());
  Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m)
      if (m != i) w[i] *= nodes[i] - nodes[m];
  w = w.cwiseInverse();

  Eigen::MatrixXd D(n, n);
  for (int i = 0; i < n; ++i) {
    double rowsum = 0.0;
    for (int m = 0; m < n; ++m) {
      if (m == i) continue;
      D(i, m) = (w[m] / w[i]) / (nodes[i] - nodes[m]);
      rowsum += D(i, m);
    }
    D(i, i) = -rowsum;
  }
  return D;
}

}  // namespace expquad::detail
