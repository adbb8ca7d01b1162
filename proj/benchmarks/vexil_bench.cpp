#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "vexil/constants.hpp"
#include "vexil/constructions.hpp"
#include "vexil/eval.hpp"
#include "vexil/flagspec/lower.hpp"
#include "vexil/flagspec/parser.hpp"
#include "vexil/render.hpp"

namespace {

using namespace vexil;

void BM_GoldenMultiplyInverse(benchmark::State& state) {
  GoldenNumber x(Rational(3, 7), Rational(-5, 11));
  const GoldenNumber y(Rational(13, 2), Rational(1, 3));
  for (auto _ : state) {
    x = (x * y).inverse() * y;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_GoldenMultiplyInverse);

void BM_ExprEvalNepal(benchmark::State& state) {
  const Expr n = nepal_ratio_expr();
  const int bits = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expr_eval(n, bits));
}
BENCHMARK(BM_ExprEvalNepal)->RangeMultiplier(4)->Range(64, 4096);

void BM_ToDecimalTan36(benchmark::State& state) {
  const Expr t = constants::tan36();
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(to_decimal(t, digits));
}
BENCHMARK(BM_ToDecimalTan36)->Arg(6)->Arg(50)->Arg(500);

void BM_VerifyTan36Forms(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        verify_identity(constants::tan36(), constants::tan36_quartic_form()));
}
BENCHMARK(BM_VerifyTan36Forms);

void BM_AngleConfiguration(benchmark::State& state) {
  const auto layout = build_independence_flag(1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_angle_configuration(layout));
}
BENCHMARK(BM_AngleConfiguration);

void BM_ParseAndLowerIndependenceFile(benchmark::State& state) {
  std::ifstream in(std::string(VEXIL_FLAGS_DIR) + "/chile-1818.flag");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string src = ss.str();
  for (auto _ : state) benchmark::DoNotOptimize(flagspec::lower(flagspec::parse(src)));
}
BENCHMARK(BM_ParseAndLowerIndependenceFile);

void BM_SvgEmit(benchmark::State& state) {
  const auto layout = build_builtin(builtin_names().at(static_cast<std::size_t>(state.range(0))));
  state.SetLabel(layout.name);
  for (auto _ : state) benchmark::DoNotOptimize(svg_emit(layout));
}
BENCHMARK(BM_SvgEmit)->DenseRange(0, 3);

}  // namespace
BENCHMARK_MAIN();
