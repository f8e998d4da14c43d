#include <benchmark/benchmark.h>

#include "ybx/json_io.hpp"

using namespace ybx;

static void BM_AssocOperatorResidual(benchmark::State& state) {
  const FiniteAlgebra a = state.range(0) == 2 ? algebra_dual_numbers() : algebra_m2();
  const auto r = build_r_assoc<Rational>(a, rat(1), rat(-2), rat(1));
  for (auto _ : state) {
    auto rep = yb_residual(r, a.dim, Form::braid);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_AssocOperatorResidual)->Arg(2)->Arg(4);

static void BM_RationalMatmul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Mat<Rational> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rat(i - j, 1 + ((i + j) % 7));
  for (auto _ : state) {
    Mat<Rational> p = m * m;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_RationalMatmul)->RangeMultiplier(2)->Range(8, 64);

static void BM_KroneckerLift(benchmark::State& state) {
  const Mat<Rational> tw = twist_matrix<Rational>(3);
  for (auto _ : state) {
    Mat<Rational> l = kron(tw, Mat<Rational>::identity(9));
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(BM_KroneckerLift);

static void BM_EnumerateSolutions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = enumerate_solutions(n, Form::braid, false);
    benchmark::DoNotOptimize(res);
  }
  state.counters["solutions"] =
      static_cast<double>(enumerate_solutions(n, Form::braid, false).summary.count);
}
BENCHMARK(BM_EnumerateSolutions)->DenseRange(1, 3);

static void BM_CanonicalForm(benchmark::State& state) {
  FiniteMap minmax;
  minmax.n = 3;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) minmax.table.emplace_back(std::min(x, y), std::max(x, y));
  for (auto _ : state) {
    FiniteMap c = canonical_form(minmax);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CanonicalForm);

static void BM_ExponentSolver(benchmark::State& state) {
  const long bound = state.range(0);
  for (auto _ : state) {
    auto sols = solve_exponent_system(bound);
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_ExponentSolver)->Arg(1)->Arg(2);

static void BM_ColoredResidual(benchmark::State& state) {
  const JSpec spec{2.0};
  for (auto _ : state) {
    Norm n = colored_residual(spec, 0.7, -1.3);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_ColoredResidual);

static void BM_ClassifyEndo(benchmark::State& state) {
  const BilinearStructure s = endo_structure(rat(2), rat(3), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    AxiomReport rep = classify(s);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_ClassifyEndo)->Arg(2)->Arg(3);

static void BM_PartialSums(benchmark::State& state) {
  const unsigned long n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    Thm41Result res = thm41_check(n);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_PartialSums)->Arg(100)->Arg(1000);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
