#pragma once

#include <Eigen/Dense>

#include <utility>

namespace expquad::detail {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x);

// Roots of P_n on (-1,1), ascending.
Eigen::VectorXd legendre_roots(int n);

struct LobattoSet {
  Eigen::VectorXd nodes;    // J+1 points on [-1,1] including the endpoints
  Eigen::VectorXd weights;  // 2/(J(J+1) P_J(x)^2)
};

// Gauss-Lobatto nodes and weights for polynomial degree J >= 1.
LobattoSet gauss_lobatto(int J);

// First-derivative collocation matrix over arbitrary distinct nodes,
// barycentric form with negated row sums on the diagonal.
Eigen::MatrixXd differentiation_matrix(const Eigen::VectorXd& nodes);

}  // namespace expquad::detail
