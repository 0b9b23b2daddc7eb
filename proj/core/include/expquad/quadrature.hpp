#pragma once

#include <Eigen/Dense>

namespace expquad {

enum class RuleKind { trapezoidal, simpson, gauss, lobatto, custom };

// Interpolatory quadrature rule on [0,1] with s distinct nodes c_i and the
// coefficient matrix a_ij that expands each Lagrange basis polynomial as
// l_i(theta) = sum_j a_ij theta^(j-1)/(j-1)!.
struct QuadratureRule {
  RuleKind kind = RuleKind::custom;
  int s = 0;
  Eigen::VectorXd nodes;
  Eigen::MatrixXd coeffs;
};

// Canonical rule families. trapezoidal forces s=2 and simpson s=3;
// gauss needs s>=1, lobatto s>=2.
QuadratureRule make_rule(RuleKind kind, int s);

// Rule over arbitrary distinct nodes in [0,1]. Order guarantees of the
// canonical families do not transfer.
QuadratureRule make_custom_rule(const Eigen::VectorXd& nodes);

// a_ij = (j-1)! times the theta^(j-1) coefficient of the i-th Lagrange
// polynomial over the given nodes.
Eigen::MatrixXd lagrange_coefficients(const Eigen::VectorXd& nodes);

// w_i = integral of l_i over [0,1] = sum_j a_ij / j!.
Eigen::VectorXd weights_at_zero(const QuadratureRule& rule);

// Largest d with sum_i w_i c_i^r = 1/(r+1) for all r <= d.
int exactness_degree(const QuadratureRule& rule);

const char* to_string(RuleKind kind);

}  // namespace expquad
