#include "expquad/phi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "expquad/errors.hpp"

namespace expquad {

double phi_scalar(int j, double z) {
  if (j < 0) throw std::invalid_argument("phi_scalar: order must be nonnegative");
  if (z > 0.0) throw std::invalid_argument("phi_scalar: positive arguments unsupported");
  if (j == 0) return std::exp(z);

  // The upward recursion loses roughly j!/|z|^j of precision, so the series
  // takes over below a crossover that grows with j.
  if (-z < std::max(0.5, j / std::numbers::e)) {
    double fact = 1.0;
    for (int m = 2; m <= j; ++m) fact *= m;
    double term = 1.0 / fact;
    double sum = term;
    for (int m = 1; m <= 160; ++m) {
      term *= z / (m + j);
      sum += term;
      if (std::abs(term) <= std::abs(sum) * 1.1e-16) break;
    }
    return sum;
  }

  double v = std::exp(z);
  double fact = 1.0;
  for (int m = 0; m < j; ++m) {
    v = (v - 1.0 / fact) / z;
    fact *= m + 1;
  }
  return v;
}

PhiEvaluator::PhiEvaluator(const SpaceDiscretization& disc)
    : d_(disc.d), dinv_(disc.d.cwiseInverse()) {
  Eigen::MatrixXd S = d_.asDiagonal() * disc.A0 * dinv_.asDiagonal();
  S = 0.5 * (S + S.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  if (es.info() != Eigen::Success)
    throw NumericalError("PhiEvaluator: eigendecomposition failed");
  lam_ = es.eigenvalues();
  V_ = es.eigenvectors();

  const double scale = lam_.cwiseAbs().maxCoeff();
  for (int m = 0; m < lam_.size(); ++m) {
    if (lam_[m] > 1e-10 * scale)
      throw NumericalError("PhiEvaluator: interior operator is not dissipative");
    if (lam_[m] > 0.0) lam_[m] = 0.0;
  }
}

Eigen::VectorXd PhiEvaluator::apply(int j, double k, const Eigen::VectorXd& v) const {
  if (v.size() != lam_.size()) throw std::invalid_argument("phi_apply: dimension mismatch");
  if (k <= 0.0) throw std::invalid_argument("phi_apply: stepsize must be positive");
  Eigen::VectorXd y = V_.transpose() * d_.cwiseProduct(v);
  for (int m = 0; m < lam_.size(); ++m) y[m] *= phi_scalar(j, k * lam_[m]);
  return dinv_.cwiseProduct(V_ * y);
}

Eigen::VectorXd PhiEvaluator::apply_combination(
    double k, const std::vector<Eigen::VectorXd>& terms) const {
  if (k <= 0.0) throw std::invalid_argument("apply_combination: stepsize must be positive");
  const int n = dim();
  const int q = static_cast<int>(terms.size());
  if (q == 0) return Eigen::VectorXd::Zero(n);

  Eigen::MatrixXd W(n, q);
  for (int j = 0; j < q; ++j) {
    if (terms[j].size() != n)
      throw std::invalid_argument("apply_combination: dimension mismatch");
    W.col(j) = d_.cwiseProduct(terms[j]);
  }
  const Eigen::MatrixXd Z = V_.transpose() * W;
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(n);
  for (int m = 0; m < n; ++m) {
    const double z = k * lam_[m];
    for (int j = 0; j < q; ++j) acc[m] += phi_scalar(j, z) * Z(m, j);
  }
  return dinv_.cwiseProduct(V_ * acc);
}

Eigen::VectorXd phi_apply(const PhiEvaluator& ev, int j, double k,
                          const Eigen::VectorXd& v) {
  return ev.apply(j, k, v);
}

}  // namespace expquad
