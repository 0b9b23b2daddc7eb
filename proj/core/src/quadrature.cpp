#include "expquad/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "legendre.hpp"

namespace expquad {

namespace {

Eigen::VectorXd gauss_nodes(int s) {
  const Eigen::VectorXd r = detail::legendre_roots(s);
  return (r.array() + 1.0) / 2.0;
}

Eigen::VectorXd lobatto_nodes(int s) {
  const auto set = detail::gauss_lobatto(s - 1);
  return (set.nodes.array() + 1.0) / 2.0;
}

}  // namespace

Eigen::MatrixXd lagrange_coefficients(const Eigen::VectorXd& nodes) {
  const int s = static_cast<int>(nodes.size());
  if (s < 1) throw std::invalid_argument("lagrange_coefficients: need at least one node");
  for (int i = 0; i < s; ++i)
    for (int m = i + 1; m < s; ++m)
      if (nodes[i] == nodes[m])
        throw std::invalid_argument("lagrange_coefficients: duplicate nodes");

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(s, s);
  for (int i = 0; i < s; ++i) {
    // Expand prod_{m != i} (theta - c_m)/(c_i - c_m) in monomials.
    Eigen::VectorXd poly = Eigen::VectorXd::Zero(s);
    poly[0] = 1.0;
    int deg = 0;
    for (int m = 0; m < s; ++m) {
      if (m == i) continue;
      const double scale = 1.0 / (nodes[i] - nodes[m]);
      for (int q = deg + 1; q > 0; --q)
        poly[q] = (poly[q - 1] - nodes[m] * poly[q]) * scale;
      poly[0] *= -nodes[m] * scale;
      ++deg;
    }
    double fact = 1.0;
    for (int j = 0; j < s; ++j) {
      a(i, j) = poly[j] * fact;
      fact *= j + 1;
    }
  }
  return a;
}

QuadratureRule make_rule(RuleKind kind, int s) {
  if (s < 1) throw std::invalid_argument("make_rule: node count must be positive");
  QuadratureRule rule;
  rule.kind = kind;
  switch (kind) {
    case RuleKind::trapezoidal:
      s = 2;
      rule.nodes = Eigen::Vector2d(0.0, 1.0);
      break;
    case RuleKind::simpson:
      s = 3;
      rule.nodes = Eigen::Vector3d(0.0, 0.5, 1.0);
      break;
    case RuleKind::gauss:
      rule.nodes = gauss_nodes(s);
      break;
    case RuleKind::lobatto:
      if (s < 2) throw std::invalid_argument("make_rule: lobatto needs s >= 2");
      rule.nodes = lobatto_nodes(s);
      break;
    case RuleKind::custom:
      throw std::invalid_argument("make_rule: custom rules come from make_custom_rule");
  }
  rule.s = s;
  rule.coeffs = lagrange_coefficients(rule.nodes);
  return rule;
}

QuadratureRule make_custom_rule(const Eigen::VectorXd& nodes) {
  for (int i = 0; i < nodes.size(); ++i)
    if (nodes[i] < 0.0 || nodes[i] > 1.0)
      throw std::invalid_argument("make_custom_rule: nodes must lie in [0,1]");
  QuadratureRule rule;
  rule.kind = RuleKind::custom;
  rule.s = static_cast<int>(nodes.size());
  rule.nodes = nodes;
  rule.coeffs = lagrange_coefficients(nodes);
  return rule;
}

Eigen::VectorXd weights_at_zero(const QuadratureRule& rule) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(rule.s);
  for (int i = 0; i < rule.s; ++i) {
    double fact = 1.0;
    for (int j = 1; j <= rule.s; ++j) {
      fact *= j;
      w[i] += rule.coeffs(i, j - 1) / fact;
    }
  }
  return w;
}

int exactness_degree(const QuadratureRule& rule) {
  const Eigen::VectorXd w = weights_at_zero(rule);
  const int cap = 4 * rule.s + 8;
  for (int r = 0;; ++r) {
    double sum = 0.0;
    for (int i = 0; i < rule.s; ++i) sum += w[i] * std::pow(rule.nodes[i], r);
    if (std::abs(sum - 1.0 / (r + 1)) > 1e-10) return r - 1;
    if (r > cap) return cap;
  }
}

const char* to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::trapezoidal: return "trapezoidal";
    case RuleKind::simpson: return "simpson";
    case RuleKind::gauss: return "gauss";
    case RuleKind::lobatto: return "lobatto";
    case RuleKind::custom: return "custom";
  }
  return "unknown";
}

}  // namespace expquad
