#include <benchmark/benchmark.h>

#include "manyval/eval.hpp"
#include "manyval/logics.hpp"
#include "manyval/mcnaughton.hpp"
#include "manyval/resolution.hpp"
#include "manyval/sequent.hpp"
#include "manyval/tableau.hpp"

using namespace manyval;

namespace {

Matrix chain_matrix(int n) {
  return logics::builtin(logics::BuiltinSpec{logics::Family::lukasiewicz, n});
}

Formula hard_formula(const Matrix& m) {
  // an instance with both valid and refutable subparts
  return parse_formula("((p -> q) -> q) -> ((q -> p) -> (p | (q & ~p)))", m);
}

void BM_TruthTable(benchmark::State& state) {
  Matrix m = chain_matrix(static_cast<int>(state.range(0)));
  Formula f = hard_formula(m);
  for (auto _ : state) benchmark::DoNotOptimize(decide_valid(f, m).affirmative);
}
BENCHMARK(BM_TruthTable)->Arg(3)->Arg(5)->Arg(9);

void BM_Tableau(benchmark::State& state) {
  Matrix m = chain_matrix(static_cast<int>(state.range(0)));
  Formula f = hard_formula(m);
  for (auto _ : state) benchmark::DoNotOptimize(tableau::decide({}, f, m).valid);
}
BENCHMARK(BM_Tableau)->Arg(3)->Arg(5)->Arg(9);

void BM_TableauSingleton(benchmark::State& state) {
  Matrix m = chain_matrix(static_cast<int>(state.range(0)));
  Formula f = hard_formula(m);
  tableau::Options opt;
  opt.set_signs = false;
  for (auto _ : state) benchmark::DoNotOptimize(tableau::decide({}, f, m, opt).valid);
}
BENCHMARK(BM_TableauSingleton)->Arg(3)->Arg(5);

void BM_Sequent(benchmark::State& state) {
  Matrix m = chain_matrix(static_cast<int>(state.range(0)));
  Formula f = hard_formula(m);
  for (auto _ : state) {
    auto r = sequent::decide(sequent::to_sequent({}, f, m), m);
    benchmark::DoNotOptimize(r.valid);
  }
}
BENCHMARK(BM_Sequent)->Arg(3)->Arg(4);

void BM_Resolution(benchmark::State& state) {
  Matrix m = chain_matrix(static_cast<int>(state.range(0)));
  Formula f = hard_formula(m);
  for (auto _ : state) {
    auto r = resolution::resolve_consequence({}, f, m);
    benchmark::DoNotOptimize(r.valid);
  }
}
BENCHMARK(BM_Resolution)->Arg(3)->Arg(4);

void BM_McNaughtonCompile(benchmark::State& state) {
  Matrix m = chain_matrix(3);
  Formula f = parse_formula("((x + x) * (x -> (x * x))) <-> (~x + (x * x * x))", m);
  for (auto _ : state) benchmark::DoNotOptimize(mv::compile(f).cuts.size());
}
BENCHMARK(BM_McNaughtonCompile);

void BM_PostSynthesis(benchmark::State& state) {
  std::vector<int> target = {2, 0, 1, 1, 2, 0, 0, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(logics::post_synthesize(3, 2, target));
}
BENCHMARK(BM_PostSynthesis);

}  // namespace

BENCHMARK_MAIN();
