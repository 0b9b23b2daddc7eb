#pragma once

#include <Eigen/Dense>

#include <functional>

namespace expquad {

enum class DiscKind { fd, lgl };

// Interior-node view of the 1-D Laplacian on [0,1] with Dirichlet boundary.
// A0 acts on interior values; boundary data enters through the injection
// columns, A_h Q_h (g0, g1) = g0 beta_left + g1 beta_right. The gamma
// columns carry the interpolation-derivative term L_h Q_h, which vanishes
// for both discretizations built here but stays wired through the
// integrators. alpha holds the quadrature weights of the discrete L2 norm
// and d the diagonal that symmetrizes A0.
struct SpaceDiscretization {
  DiscKind kind = DiscKind::fd;
  Eigen::VectorXd x;
  Eigen::MatrixXd A0;
  Eigen::VectorXd beta_left, beta_right;
  Eigen::VectorXd gamma_left, gamma_right;
  Eigen::VectorXd alpha;
  Eigen::VectorXd d;

  int dim() const { return static_cast<int>(x.size()); }
};

// Second-order central differences on the uniform grid x_m = m/(M+1).
SpaceDiscretization finite_difference(int M);

// Collocation at the J+1 Legendre-Gauss-Lobatto nodes mapped to [0,1];
// A0 is the interior block of the second-derivative matrix.
SpaceDiscretization lgl_collocation(int J);

// Samples u at the interior nodes.
Eigen::VectorXd restrict(const SpaceDiscretization& disc,
                         const std::function<double(double)>& u);

// sqrt(sum alpha_m v_m^2)
double discrete_norm(const SpaceDiscretization& disc, const Eigen::VectorXd& v);

// A_h Q_h (left, right)
Eigen::VectorXd inject_boundary(const SpaceDiscretization& disc, double left,
                                double right);

// L_h Q_h (left, right); zero for the built-in discretizations.
Eigen::VectorXd boundary_hook(const SpaceDiscretization& disc, double left,
                              double right);

// Solves A0 w + A_h Q_h (g_left, g_right) = rhs. Test utility for the
// elliptic space-accuracy checks; the integrators never call it.
Eigen::VectorXd elliptic_solve(const SpaceDiscretization& disc,
                               const Eigen::VectorXd& rhs, double g_left,
                               double g_right);

}  // namespace expquad
