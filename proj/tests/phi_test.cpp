#include "expquad/phi.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "expquad/errors.hpp"
#include "expquad/space_disc.hpp"
#include "oracles.hpp"

namespace {

using expquad::PhiEvaluator;
using expquad::SpaceDiscretization;
using expquad::phi_scalar;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

SpaceDiscretization diagonal_disc(const Eigen::VectorXd& diag) {
  const int n = static_cast<int>(diag.size());
  SpaceDiscretization disc;
  disc.kind = expquad::DiscKind::fd;
  disc.x = Eigen::VectorXd::LinSpaced(n, 1.0 / (n + 1), double(n) / (n + 1));
  disc.A0 = diag.asDiagonal();
  disc.beta_left = Eigen::VectorXd::Zero(n);
  disc.beta_right = Eigen::VectorXd::Zero(n);
  disc.gamma_left = Eigen::VectorXd::Zero(n);
  disc.gamma_right = Eigen::VectorXd::Zero(n);
  disc.alpha = Eigen::VectorXd::Ones(n);
  disc.d = Eigen::VectorXd::Ones(n);
  return disc;
}

TEST(PhiScalar, PinnedValues) {
  EXPECT_DOUBLE_EQ(phi_scalar(1, 0.0), 1.0);
  EXPECT_NEAR(phi_scalar(0, -1.0), 0.36787944117144233, 1e-15);
  EXPECT_NEAR(phi_scalar(1, -1.0), 0.6321205588285577, 1e-14);
  EXPECT_NEAR(phi_scalar(2, -1.0), 0.36787944117144233, 1e-14);
  for (int j = 0; j <= 12; ++j)
    EXPECT_DOUBLE_EQ(phi_scalar(j, 0.0), 1.0 / factorial(j));
}

TEST(PhiScalar, ReferenceTable) {
  for (const auto& row : oracles::phi_reference()) {
    for (int j = 0; j <= 12; ++j) {
      const double expected = row.v[j];
      const double actual = phi_scalar(j, row.z);
      if (expected == 0.0) {
        // true value below the double underflow threshold
        EXPECT_EQ(actual, 0.0) << "j=" << j << " z=" << row.z;
      } else {
        EXPECT_NEAR(actual / expected, 1.0, 1e-12)
            << "j=" << j << " z=" << row.z;
      }
    }
  }
}

TEST(PhiScalar, RecursionIdentity) {
  const double zs[] = {-1e6, -1e3, -10.0, -1.0, -1e-3, -1e-8};
  for (double z : zs) {
    for (int j = 0; j <= 12; ++j) {
      const double pj = phi_scalar(j, z);
      const double pj1 = phi_scalar(j + 1, z);
      const double resid = std::abs(pj1 * z - pj + 1.0 / factorial(j));
      EXPECT_LE(resid, 1e-12 * std::max(1.0, std::abs(pj)))
          << "j=" << j << " z=" << z;
    }
  }
}

TEST(PhiScalar, Bounds) {
  const double zs[] = {-1e6, -1e3, -50.0, -10.0, -1.0, -1e-3, -1e-8, 0.0};
  for (double z : zs) {
    for (int j = 0; j <= 12; ++j) {
      const double pj = phi_scalar(j, z);
      if (j == 0 && z <= -700.0)
        EXPECT_GE(pj, 0.0);
      else
        EXPECT_GT(pj, 0.0) << "j=" << j << " z=" << z;
      EXPECT_LE(pj, (1.0 + 1e-13) / factorial(j)) << "j=" << j << " z=" << z;
    }
  }
}

TEST(PhiScalar, Errors) {
  EXPECT_THROW(phi_scalar(-1, -1.0), std::invalid_argument);
  EXPECT_THROW(phi_scalar(0, 0.5), std::invalid_argument);
}

TEST(PhiEvaluatorTest, DiagonalOperatorMatchesScalar) {
  Eigen::VectorXd diag(3);
  diag << -1.0, -4.0, -9.0;
  const auto disc = diagonal_disc(diag);
  const PhiEvaluator ev(disc);

  const double k = 0.37;
  for (int j = 0; j <= 6; ++j) {
    for (int m = 0; m < 3; ++m) {
      const Eigen::VectorXd unit = Eigen::VectorXd::Unit(3, m);
      const Eigen::VectorXd got = ev.apply(j, k, unit);
      const double expected = phi_scalar(j, k * diag[m]);
      for (int i = 0; i < 3; ++i) {
        const double want = i == m ? expected : 0.0;
        EXPECT_NEAR(got[i], want, 1e-14 * std::max(1.0, std::abs(expected)))
            << "j=" << j << " m=" << m;
      }
    }
  }
}

TEST(PhiEvaluatorTest, SpectrumOfFiniteDifference) {
  const auto disc = expquad::finite_difference(3);
  const PhiEvaluator ev(disc);
  ASSERT_EQ(ev.dim(), 3);
  // eigenvalues of the M=3 stencil are -4/h^2 sin^2(m pi h / 2)
  const double h = 0.25;
  Eigen::Vector3d expected;
  for (int m = 1; m <= 3; ++m) {
    const double s = std::sin(m * std::numbers::pi * h / 2.0);
    expected[3 - m] = -4.0 / (h * h) * s * s;
  }
  EXPECT_LT((ev.eigenvalues() - expected).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT(ev.eigenvalues().maxCoeff(), 0.0);
}

TEST(PhiEvaluatorTest, EigenvectorRelation) {
  const auto disc = expquad::finite_difference(5);
  const PhiEvaluator ev(disc);
  const double k = 0.02;
  for (int m = 0; m < ev.dim(); ++m) {
    const Eigen::VectorXd v =
        ev.symmetrizer().cwiseInverse().asDiagonal() * ev.eigenvectors().col(m);
    const Eigen::VectorXd got = ev.apply(0, k, v);
    const Eigen::VectorXd want = std::exp(k * ev.eigenvalues()[m]) * v;
    EXPECT_LT((got - want).norm(), 1e-12 * want.norm()) << "m=" << m;
  }
}

TEST(PhiEvaluatorTest, PhiOneNearIdentityForTinyStep) {
  const auto disc = expquad::finite_difference(3);
  const PhiEvaluator ev(disc);
  // k max|lambda| is about 5.5e-9 here
  const double k = 1e-10;
  Eigen::VectorXd v(3);
  v << 0.3, -1.2, 0.7;
  const Eigen::VectorXd got = ev.apply(1, k, v);
  EXPECT_LT((got - v).norm(), 1e-7 * v.norm());
}

TEST(PhiEvaluatorTest, MatchesIntegralOracleFiniteDifference) {
  const auto disc = expquad::finite_difference(5);
  const PhiEvaluator ev(disc);
  const double k = 0.1;
  const Eigen::VectorXd v = Eigen::VectorXd::Ones(5);
  const auto ref = oracles::phi_integral(disc.A0, k, v, 4, 10000);
  for (int j = 1; j <= 4; ++j) {
    const Eigen::VectorXd got = ev.apply(j, k, v);
    EXPECT_LT((got - ref[j]).norm(), 1e-10 * ref[j].norm()) << "j=" << j;
  }
}

TEST(PhiEvaluatorTest, MatchesIntegralOracleCollocation) {
  const auto disc = expquad::lgl_collocation(7);
  const PhiEvaluator ev(disc);
  ASSERT_EQ(ev.dim(), 6);
  const double k = 0.05;
  Eigen::VectorXd v(6);
  v << 1.0, -0.5, 0.25, 0.8, -1.1, 0.4;
  const auto ref = oracles::phi_integral(disc.A0, k, v, 3, 4000);
  for (int j = 0; j <= 3; ++j) {
    const Eigen::VectorXd got = ev.apply(j, k, v);
    EXPECT_LT((got - ref[j]).norm(), 1e-10 * ref[j].norm()) << "j=" << j;
  }
}

TEST(PhiEvaluatorTest, CombinationMatchesSeparateApplies) {
  const auto disc = expquad::lgl_collocation(9);
  const PhiEvaluator ev(disc);
  const double k = 0.03;
  const int n = ev.dim();
  std::vector<Eigen::VectorXd> terms;
  for (int j = 0; j <= 4; ++j) {
    Eigen::VectorXd t(n);
    for (int i = 0; i < n; ++i)
      t[i] = std::sin(1.0 + 0.7 * i + 1.3 * j);
    terms.push_back(t);
  }
  Eigen::VectorXd expected = Eigen::VectorXd::Zero(n);
  for (int j = 0; j <= 4; ++j) expected += ev.apply(j, k, terms[j]);
  const Eigen::VectorXd got = ev.apply_combination(k, terms);
  EXPECT_LT((got - expected).norm(), 1e-12 * expected.norm());
}

TEST(PhiEvaluatorTest, Errors) {
  const auto disc = expquad::finite_difference(4);
  const PhiEvaluator ev(disc);
  EXPECT_THROW(ev.apply(0, 0.1, Eigen::VectorXd::Ones(3)),
               std::invalid_argument);
  EXPECT_THROW(ev.apply(0, -0.1, Eigen::VectorXd::Ones(4)),
               std::invalid_argument);

  Eigen::VectorXd bad(2);
  bad << 1.0, 0.5;
  EXPECT_THROW(PhiEvaluator(diagonal_disc(bad)), expquad::NumericalError);
}

}  // namespace
