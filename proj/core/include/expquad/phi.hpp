#pragma once

#include <Eigen/Dense>

#include <vector>

#include "expquad/space_disc.hpp"

namespace expquad {

// phi_0(z) = exp(z); phi_{j+1}(z) = (phi_j(z) - 1/j!)/z; phi_j(0) = 1/j!.
// Requires z <= 0; relative accuracy about 1e-13.
double phi_scalar(int j, double z);

// Applies phi_j(k A0) to interior vectors through the cached spectral
// factorization of the symmetrized operator S = diag(d) A0 diag(d)^-1.
// Immutable after construction; all applies are pure.
class PhiEvaluator {
 public:
  explicit PhiEvaluator(const SpaceDiscretization& disc);

  int dim() const { return static_cast<int>(lam_.size()); }

  // Eigenvalues of S, ascending. All strictly negative for the built-in
  // discretizations.
  const Eigen::VectorXd& eigenvalues() const { return lam_; }
  const Eigen::MatrixXd& eigenvectors() const { return V_; }
  const Eigen::VectorXd& symmetrizer() const { return d_; }

  // phi_j(k A0) v
  Eigen::VectorXd apply(int j, double k, const Eigen::VectorXd& v) const;

  // sum_j phi_j(k A0) terms[j], with terms[0] going through exp(k A0).
  // All columns share one pair of basis transforms.
  Eigen::VectorXd apply_combination(double k,
                                    const std::vector<Eigen::VectorXd>& terms) const;

 private:
  Eigen::VectorXd d_, dinv_, lam_;
  Eigen::MatrixXd V_;
};

Eigen::VectorXd phi_apply(const PhiEvaluator& ev, int j, double k,
                          const Eigen::VectorXd& v);

}  // namespace expquad
