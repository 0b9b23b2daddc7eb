#include "expquad/harness.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "expquad/errors.hpp"
#include "expquad/integrators.hpp"
#include "test_problems.hpp"

namespace {

using expquad::Approach;
using expquad::ConvergenceRecord;
using expquad::IntegratorConfig;
using expquad::PhiEvaluator;
using expquad::Rational;
using expquad::RuleKind;

IntegratorConfig template_config(const expquad::QuadratureRule& rule,
                                 Approach approach, int p) {
  IntegratorConfig cfg;
  cfg.rule = rule;
  cfg.approach = approach;
  cfg.p = p;
  cfg.t0 = 0.0;
  cfg.T = 1.0;
  return cfg;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string drop_last_field(const std::string& line) {
  return line.substr(0, line.rfind(','));
}

TEST(Rational, ParseAndPrint) {
  const Rational r = expquad::parse_rational("1/320");
  EXPECT_EQ(r.num, 1);
  EXPECT_EQ(r.den, 320);
  EXPECT_EQ(r.text(), "1/320");
  EXPECT_DOUBLE_EQ(r.value(), 1.0 / 320.0);

  const Rational whole = expquad::parse_rational("5");
  EXPECT_EQ(whole.num, 5);
  EXPECT_EQ(whole.den, 1);
  EXPECT_EQ(whole.text(), "5");

  const Rational reduced = expquad::parse_rational("6/4");
  EXPECT_EQ(reduced.num, 3);
  EXPECT_EQ(reduced.den, 2);
  EXPECT_EQ(reduced.text(), "3/2");
}

TEST(Rational, ParseErrors) {
  EXPECT_THROW(expquad::parse_rational(""), std::invalid_argument);
  EXPECT_THROW(expquad::parse_rational("a/b"), std::invalid_argument);
  EXPECT_THROW(expquad::parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(expquad::parse_rational("1/-4"), std::invalid_argument);
  EXPECT_THROW(expquad::parse_rational("1.5"), std::invalid_argument);
}

TEST(EstimateOrder, DyadicRatios) {
  ASSERT_TRUE(expquad::estimate_order(1e-4, 2.5e-5).has_value());
  EXPECT_NEAR(*expquad::estimate_order(1e-4, 2.5e-5), 2.0, 1e-12);
  EXPECT_NEAR(*expquad::estimate_order(8e-6, 1e-6), 3.0, 1e-12);
  EXPECT_NEAR(*expquad::estimate_order(8.0170e-5, 1.2961e-5), 2.63, 0.005);
  EXPECT_FALSE(expquad::estimate_order(0.0, 1e-6).has_value());
  EXPECT_FALSE(expquad::estimate_order(1e-6, -1.0).has_value());
}

TEST(EmitCsv, SingleRecord) {
  ConvergenceRecord rec;
  rec.k = expquad::parse_rational("1/10");
  rec.local_err = 1.23456e-3;
  rec.global_err = 9.87654e-4;
  rec.wall_time_s = 0.5;

  std::ostringstream out;
  expquad::emit_csv({rec}, out);
  const auto lines = split_lines(out.str());
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "k,local_err,local_order,global_err,global_order,wall_time_s");
  EXPECT_EQ(lines[1], "1/10,1.2346e-03,,9.8765e-04,,5.0000e-01");
}

TEST(EmitCsv, OrdersFormatted) {
  ConvergenceRecord rec;
  rec.k = expquad::parse_rational("1/20");
  rec.local_err = 1.0e-5;
  rec.local_order = 2.6290;
  rec.global_err = 2.0e-5;
  rec.global_order = 1.25;
  rec.wall_time_s = 0.125;

  std::ostringstream out;
  expquad::emit_csv({rec}, out);
  const auto lines = split_lines(out.str());
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1], "1/20,1.0000e-05,2.63,2.0000e-05,1.25,1.2500e-01");
}

TEST(EmitCsv, Errors) {
  std::ostringstream out;
  EXPECT_THROW(expquad::emit_csv({}, out), std::invalid_argument);

  ConvergenceRecord rec;
  rec.k = expquad::parse_rational("1/10");
  try {
    expquad::emit_csv({rec}, "/nonexistent-dir-for-test/out.csv");
    FAIL() << "expected IoError";
  } catch (const expquad::IoError& err) {
    EXPECT_NE(std::string(err.what()).find("/nonexistent-dir-for-test/out.csv"),
              std::string::npos);
  }
}

TEST(RunConvergence, RecordShape) {
  const auto disc = expquad::finite_difference(20);
  const PhiEvaluator ev(disc);
  const auto prob = expquad::make_problem("poly");
  const auto tmpl = template_config(
      expquad::make_rule(RuleKind::trapezoidal, 2), Approach::classical, 0);
  const std::vector<Rational> ks = {expquad::parse_rational("1/10"),
                                    expquad::parse_rational("1/20")};
  const auto records = expquad::run_convergence(disc, ev, *prob, tmpl, ks);

  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].k.text(), "1/10");
  EXPECT_EQ(records[1].k.text(), "1/20");
  EXPECT_FALSE(records[0].local_order.has_value());
  EXPECT_FALSE(records[0].global_order.has_value());
  EXPECT_TRUE(records[1].local_order.has_value());
  EXPECT_TRUE(records[1].global_order.has_value());
  for (const auto& r : records) {
    EXPECT_GT(r.local_err, 0.0);
    EXPECT_GT(r.global_err, 0.0);
    EXPECT_GE(r.wall_time_s, 0.0);
  }
}

TEST(RunConvergence, NonDyadicPairGetsNoOrder) {
  const auto disc = expquad::finite_difference(20);
  const PhiEvaluator ev(disc);
  const auto prob = expquad::make_problem("poly");
  const auto tmpl = template_config(
      expquad::make_rule(RuleKind::trapezoidal, 2), Approach::classical, 0);
  const std::vector<Rational> ks = {expquad::parse_rational("1/10"),
                                    expquad::parse_rational("1/30")};
  const auto records = expquad::run_convergence(disc, ev, *prob, tmpl, ks);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_FALSE(records[1].local_order.has_value());
  EXPECT_FALSE(records[1].global_order.has_value());
}

TEST(RunConvergence, RoundoffFloorSuppressesOrders) {
  const auto disc = expquad::lgl_collocation(39);
  const PhiEvaluator ev(disc);
  const auto prob = expquad::make_problem("sine");
  const auto tmpl = template_config(expquad::make_rule(RuleKind::gauss, 2),
                                    Approach::classical, 0);
  const std::vector<Rational> ks = {expquad::parse_rational("1/4"),
                                    expquad::parse_rational("1/8")};
  const auto records = expquad::run_convergence(disc, ev, *prob, tmpl, ks);

  // space is spectrally resolved, so the error sits at the roundoff plateau
  for (const auto& r : records) EXPECT_LE(r.global_err, 1e-10);
  EXPECT_FALSE(records[1].global_order.has_value());
}

TEST(RunConvergence, LocalOrderExceedsGlobalByAboutOne) {
  const auto disc = expquad::lgl_collocation(39);
  const PhiEvaluator ev(disc);
  const auto prob = expquad::make_problem("exp");
  const auto tmpl = template_config(expquad::make_rule(RuleKind::simpson, 3),
                                    Approach::corrected, 4);
  const std::vector<Rational> ks = {expquad::parse_rational("1/32"),
                                    expquad::parse_rational("1/64")};
  const auto records = expquad::run_convergence(disc, ev, *prob, tmpl, ks);
  ASSERT_TRUE(records[1].local_order.has_value());
  ASSERT_TRUE(records[1].global_order.has_value());
  const double gap = *records[1].local_order - *records[1].global_order;
  EXPECT_GE(gap, 0.5);
  EXPECT_LE(gap, 1.6);
}

TEST(RunConvergence, DeterministicUpToTiming) {
  const auto disc = expquad::lgl_collocation(12);
  const PhiEvaluator ev(disc);
  const auto prob = expquad::make_problem("exp");
  const auto tmpl = template_config(expquad::make_rule(RuleKind::gauss, 1),
                                    Approach::corrected, 2);
  const std::vector<Rational> ks = {expquad::parse_rational("1/4"),
                                    expquad::parse_rational("1/8")};

  std::ostringstream first, second;
  expquad::emit_csv(expquad::run_convergence(disc, ev, *prob, tmpl, ks), first);
  expquad::emit_csv(expquad::run_convergence(disc, ev, *prob, tmpl, ks), second);

  const auto a = split_lines(first.str());
  const auto b = split_lines(second.str());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    EXPECT_EQ(drop_last_field(a[i]), drop_last_field(b[i])) << "line " << i;
}

TEST(RunConvergence, Errors) {
  const auto disc = expquad::finite_difference(10);
  const PhiEvaluator ev(disc);
  const auto prob = expquad::make_problem("poly");
  const auto tmpl = template_config(
      expquad::make_rule(RuleKind::trapezoidal, 2), Approach::classical, 0);

  EXPECT_THROW(expquad::run_convergence(disc, ev, *prob, tmpl, {}),
               std::invalid_argument);

  const std::vector<Rational> rising = {expquad::parse_rational("1/20"),
                                        expquad::parse_rational("1/10")};
  EXPECT_THROW(expquad::run_convergence(disc, ev, *prob, tmpl, rising),
               std::invalid_argument);

  const std::vector<Rational> offgrid = {expquad::parse_rational("2/7")};
  EXPECT_THROW(expquad::run_convergence(disc, ev, *prob, tmpl, offgrid),
               std::invalid_argument);

  const test_problems::NoExactProblem data_only;
  const std::vector<Rational> ks = {expquad::parse_rational("1/4")};
  EXPECT_THROW(expquad::run_convergence(disc, ev, data_only, tmpl, ks),
               std::invalid_argument);
}

}  // namespace
