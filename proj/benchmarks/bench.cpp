#include <benchmark/benchmark.h>

#include <udeform/representation.hpp>
#include <udeform/seminorm.hpp>
#include <udeform/star.hpp>
#include <udeform/twist.hpp>
#include <udeform/uea.hpp>

using namespace udeform;

static void BM_NormalOrderProduct(benchmark::State& state) {
  SpecPtr sl = LieAlgebraSpec::builtin("heis-sl:4");
  UEAContext ctx(sl);
  UEAElement a = UEAElement::one(sl);
  UEAElement b = UEAElement::one(sl);
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
    a = ctx.product(a, UEAElement::generator(sl, i % sl->dim()));
    b = ctx.product(UEAElement::generator(sl, (i + 3) % sl->dim()), b);
  }
  for (auto _ : state) {
    UEAContext fresh(sl);  // cold cache: measures the rewriting itself
    benchmark::DoNotOptimize(fresh.product(a, b));
  }
}
BENCHMARK(BM_NormalOrderProduct)->Arg(3)->Arg(5);

static void BM_TwistGeneration(benchmark::State& state) {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    UEAContext ctx(axb);
    benchmark::DoNotOptimize(
        generate_twist(ctx, TwistFamilyConfig::axb(axb), order));
  }
}
BENCHMARK(BM_TwistGeneration)->Arg(4)->Arg(8);

static void BM_CocycleResidual(benchmark::State& state) {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  UEAContext ctx(axb);
  int n = static_cast<int>(state.range(0));
  TwistSeries F = generate_twist(ctx, TwistFamilyConfig::axb(axb), n);
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_residual(ctx, F, n));
}
BENCHMARK(BM_CocycleResidual)->Arg(3)->Arg(4);

static void BM_StarTerms(benchmark::State& state) {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  UEAContext ctx(axb);
  TwistSeries F = generate_twist(ctx, TwistFamilyConfig::axb(axb), 12);
  Representation rep = Representation::axb(axb);
  int deg = static_cast<int>(state.range(0));
  Poly a = Poly::variable(1, 0, deg);
  Poly b = Poly::variable(1, 0, deg) + Poly::constant(1, Scalar(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(star_terms(ctx, F, rep, a, b));
}
BENCHMARK(BM_StarTerms)->Arg(2)->Arg(4)->Arg(6);

static void BM_SupLadder(benchmark::State& state) {
  SpecPtr sl = LieAlgebraSpec::builtin("heis-sl:3");
  Representation rep = Representation::heis_sl(sl, 3);
  Poly f = Poly::parse("z1*z2 + z3^2 + z1", 3);
  int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sup_unit_ball_ladder(rep, f, BaseSeminorm::polydisk(1.0), k));
}
BENCHMARK(BM_SupLadder)->Arg(8)->Arg(16);

static void BM_AnalyticSeminorm(benchmark::State& state) {
  SpecPtr axb = LieAlgebraSpec::builtin("axb");
  Representation rep = Representation::axb(axb);
  Poly f = Poly::parse("1 + z + z^3 + z^5", 1);
  AnalyticQuery query{1.0, 0.125, BaseSeminorm::polydisk(1.0),
                      static_cast<int>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(analytic_seminorm(rep, f, query));
}
BENCHMARK(BM_AnalyticSeminorm)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
