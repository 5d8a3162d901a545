#include <benchmark/benchmark.h>

#include "xilab/error_bounds.hpp"
#include "xilab/inequalities.hpp"
#include "xilab/kernels.hpp"
#include "xilab/special.hpp"
#include "xilab/xi_family.hpp"
#include "xilab/zeros.hpp"

using namespace xilab;

static void BM_Exp(benchmark::State& state) {
  PrecisionScope scope(state.range(0));
  BigReal x = BigReal::pi();
  for (auto _ : state) benchmark::DoNotOptimize(exp(x));
}
BENCHMARK(BM_Exp)->Arg(128)->Arg(1024)->Arg(5213);

static void BM_GammaHat(benchmark::State& state) {
  PrecisionContext ctx(state.range(0));
  PrecisionScope scope(ctx.mantissa_bits());
  BigComplex s(1.25, 3.0);
  BigReal x(-50L);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_lower_normalized(s, x, ctx));
}
BENCHMARK(BM_GammaHat)->Arg(192)->Arg(1024);

static void BM_Kummer1F1(benchmark::State& state) {
  PrecisionContext ctx(192);
  PrecisionScope scope(ctx.mantissa_bits());
  BigReal y(static_cast<long>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kummer_1f1(BigComplex(1.0), BigComplex(BigReal(402L)), BigComplex(-y), ctx));
}
BENCHMARK(BM_Kummer1F1)->Arg(10)->Arg(100);

static void BM_KernelPhi(benchmark::State& state) {
  PrecisionContext ctx(192);
  PrecisionScope scope(ctx.mantissa_bits());
  BigReal t(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_eval(KernelSpec::exact(), t, ctx));
}
BENCHMARK(BM_KernelPhi);

static void BM_F_Quadrature(benchmark::State& state) {
  PrecisionContext ctx(192);
  Approximant f(ApproximantId::f(state.range(0)), ctx);
  f.prepare(30.0, 0.5);
  BigComplex z(7.5, 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(f(z));
}
BENCHMARK(BM_F_Quadrature)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_W_Sinc(benchmark::State& state) {
  long n = state.range(0);
  PrecisionContext ctx = PrecisionContext::for_n(n);
  uv_table(n, ctx);
  BigComplex z(4.2, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(W_eval(n, z, ctx));
}
BENCHMARK(BM_W_Sinc)->Arg(3)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_BracketZero(benchmark::State& state) {
  PrecisionContext ctx = PrecisionContext::for_n(3);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_zero(ZeroOf::U, 3, state.range(0), ctx));
}
BENCHMARK(BM_BracketZero)->Arg(1)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_ClosedForm(benchmark::State& state) {
  PrecisionContext ctx(192);
  PrecisionScope scope(ctx.mantissa_bits());
  BigReal x(2L), y(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alpha_beta_closed(PairSign::Minus, x, y, 31, ctx));
}
BENCHMARK(BM_ClosedForm)->Arg(3)->Arg(30);

static void BM_DirectSum(benchmark::State& state) {
  PrecisionContext ctx(192);
  PrecisionScope scope(ctx.mantissa_bits());
  BigReal x(2L), y(30L);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_beta_direct(PairSign::Minus, x, y, state.range(0), ctx));
}
BENCHMARK(BM_DirectSum)->Arg(15)->Arg(189);

static void BM_AggregateFG(benchmark::State& state) {
  PrecisionContext ctx = PrecisionContext::for_n(3);
  uv_table(3, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(aggregate_FG(3, BigReal(1L), ctx));
}
BENCHMARK(BM_AggregateFG)->Unit(benchmark::kMillisecond);

static void BM_Nu0Ceiling(benchmark::State& state) {
  PrecisionContext ctx(128);
  PrecisionScope scope(ctx.mantissa_bits());
  BigReal eps(std::string("1e-100"));
  for (auto _ : state) benchmark::DoNotOptimize(nu0_ceiling(eps, ctx));
}
BENCHMARK(BM_Nu0Ceiling);

BENCHMARK_MAIN();
