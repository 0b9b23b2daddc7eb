#include "expquad/space_disc.hpp"

#include <stdexcept>

#include "legendre.hpp"

namespace expquad {

SpaceDiscretization finite_difference(int M) {
  if (M < 2) throw std::invalid_argument("finite_difference: need M >= 2 interior points");
  const double h = 1.0 / (M + 1);
  const double ih2 = 1.0 / (h * h);

  SpaceDiscretization disc;
  disc.kind = DiscKind::fd;
  disc.x = Eigen::VectorXd::LinSpaced(M, h, M * h);
  disc.A0 = Eigen::MatrixXd::Zero(M, M);
  for (int m = 0; m < M; ++m) {
    disc.A0(m, m) = -2.0 * ih2;
    if (m > 0) disc.A0(m, m - 1) = ih2;
    if (m + 1 < M) disc.A0(m, m + 1) = ih2;
  }
  disc.beta_left = Eigen::VectorXd::Zero(M);
  disc.beta_right = Eigen::VectorXd::Zero(M);
  disc.beta_left[0] = ih2;
  disc.beta_right[M - 1] = ih2;
  disc.gamma_left = Eigen::VectorXd::Zero(M);
  disc.gamma_right = Eigen::VectorXd::Zero(M);
  disc.alpha = Eigen::VectorXd::Constant(M, h);
  disc.d = Eigen::VectorXd::Ones(M);
  return disc;
}

SpaceDiscretization lgl_collocation(int J) {
  if (J < 2) throw std::invalid_argument("lgl_collocation: need degree J >= 2");
  const auto set = detail::gauss_lobatto(J);
  const Eigen::VectorXd nodes = (set.nodes.array() + 1.0) / 2.0;
  const Eigen::VectorXd weights = set.weights / 2.0;

  const Eigen::MatrixXd D = detail::differentiation_matrix(nodes);
  const Eigen::MatrixXd D2 = D * D;

  const int M = J - 1;
  SpaceDiscretization disc;
  disc.kind = DiscKind::lgl;
  disc.x = nodes.segment(1, M);
  disc.A0 = D2.block(1, 1, M, M);
  disc.beta_left = D2.block(1, 0, M, 1);
  disc.beta_right = D2.block(1, J, M, 1);
  disc.gamma_left = Eigen::VectorXd::Zero(M);
  disc.gamma_right = Eigen::VectorXd::Zero(M);
  disc.alpha = weights.segment(1, M);
  disc.d = disc.alpha.cwiseSqrt();
  return disc;
}

Eigen::VectorXd restrict(const SpaceDiscretization& disc,
                         const std::function<double(double)>& u) {
  Eigen::VectorXd v(disc.dim());
  for (int m = 0; m < disc.dim(); ++m) v[m] = u(disc.x[m]);
  return v;
}

double discrete_norm(const SpaceDiscretization& disc, const Eigen::VectorXd& v) {
  if (v.size() != disc.dim())
    throw std::invalid_argument("discrete_norm: dimension mismatch");
  return std::sqrt(v.cwiseProduct(disc.alpha.cwiseProduct(v)).sum());
}

Eigen::VectorXd inject_boundary(const SpaceDiscretization& disc, double left,
                                double right) {
  return left * disc.beta_left + right * disc.beta_right;
}

Eigen::VectorXd boundary_hook(const SpaceDiscretization& disc, double left,
                              double right) {
  return left * disc.gamma_left + right * disc.gamma_right;
}

Eigen::VectorXd elliptic_solve(const SpaceDiscretization& disc,
                               const Eigen::VectorXd& rhs, double g_left,
                               double g_right) {
  if (rhs.size() != disc.dim())
    throw std::invalid_argument("elliptic_solve: dimension mismatch");
  const Eigen::VectorXd b = rhs - inject_boundary(disc, g_left, g_right);
  return disc.A0.partialPivLu().solve(b);
}

}  // namespace expquad
