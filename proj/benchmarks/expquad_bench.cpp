#include <benchmark/benchmark.h>

#include <vector>

#include "expquad/expquad.hpp"

namespace {

void BM_PhiScalar(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  double z = -3.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expquad::phi_scalar(j, z));
    z = z < -40.0 ? -3.7 : z - 1e-9;
  }
}
BENCHMARK(BM_PhiScalar)->Arg(1)->Arg(6)->Arg(12);

void BM_EvaluatorSetupFd(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const auto disc = expquad::finite_difference(M);
  for (auto _ : state) {
    expquad::PhiEvaluator ev(disc);
    benchmark::DoNotOptimize(ev.eigenvalues());
  }
}
BENCHMARK(BM_EvaluatorSetupFd)->Arg(99)->Arg(399);

void BM_EvaluatorSetupLgl(benchmark::State& state) {
  const auto disc = expquad::lgl_collocation(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    expquad::PhiEvaluator ev(disc);
    benchmark::DoNotOptimize(ev.eigenvalues());
  }
}
BENCHMARK(BM_EvaluatorSetupLgl)->Arg(39);

void BM_ApplyCombination(benchmark::State& state) {
  const auto disc = expquad::lgl_collocation(39);
  const expquad::PhiEvaluator ev(disc);
  const int orders = static_cast<int>(state.range(0));
  std::vector<Eigen::VectorXd> terms;
  for (int j = 0; j <= orders; ++j)
    terms.push_back(Eigen::VectorXd::Constant(ev.dim(), 1.0 / (j + 1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(ev.apply_combination(0.05, terms));
}
BENCHMARK(BM_ApplyCombination)->Arg(3)->Arg(7);

void BM_ClassicalStep(benchmark::State& state) {
  const auto disc = expquad::lgl_collocation(39);
  const expquad::PhiEvaluator ev(disc);
  const auto prob = expquad::make_problem("exp");
  const auto rule = expquad::make_rule(expquad::RuleKind::gauss,
                                       static_cast<int>(state.range(0)));
  expquad::State s{0.0, expquad::restrict(disc, [&](double x) {
                     return prob->u0(x);
                   })};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        expquad::classical_step(disc, ev, *prob, rule, s, 0.05));
}
BENCHMARK(BM_ClassicalStep)->Arg(1)->Arg(3);

void BM_CorrectedStep(benchmark::State& state) {
  const auto disc = expquad::lgl_collocation(39);
  const expquad::PhiEvaluator ev(disc);
  const auto prob = expquad::make_problem("exp");
  const int s_nodes = static_cast<int>(state.range(0));
  const auto rule = expquad::make_rule(expquad::RuleKind::gauss, s_nodes);
  expquad::State s{0.0, expquad::restrict(disc, [&](double x) {
                     return prob->u0(x);
                   })};
  for (auto _ : state)
    benchmark::DoNotOptimize(expquad::corrected_step(disc, ev, *prob, rule,
                                                     2 * s_nodes, s, 0.05));
}
BENCHMARK(BM_CorrectedStep)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
