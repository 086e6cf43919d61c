#include <benchmark/benchmark.h>

#include "dra/relations.hpp"
#include "dra/symmetry.hpp"

using namespace dra;

namespace {

ContextPtr fresh_ctx(int n) { return AlgebraContext::make(n); }

void BM_OraclePair(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ctx = fresh_ctx(n);  // cold caches: measures the real derivation cost
    auto out = ctx->oracle_mul(CosetEl::generator({1, 2}, n), CosetEl::generator({2, 1}, n));
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_OraclePair)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_StructureTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ctx = fresh_ctx(n);
    for (GeneratorId a : all_generators(n))
      for (GeneratorId b : all_generators(n)) benchmark::DoNotOptimize(ctx->structure_entry(a, b));
  }
}
BENCHMARK(BM_StructureTable)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RewriteWord(benchmark::State& state) {
  int n = 3;
  auto ctx = fresh_ctx(n);
  // warm table
  for (GeneratorId a : all_generators(n))
    for (GeneratorId b : all_generators(n)) ctx->structure_entry(a, b);
  ZEl word = ctx->generator({1, 3});
  for (auto _ : state) {
    ZEl out = ctx->mul(ctx->mul(word, ctx->generator({3, 1}), Backend::Rewrite),
                       ctx->generator({2, 1}), Backend::Rewrite);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_RewriteWord)->Unit(benchmark::kMillisecond);

void BM_VerifyFamily3b(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ctx = fresh_ctx(n);
    auto rep = verify_relations(*ctx, {"3b"}, Backend::Oracle);
    if (!rep.ok()) state.SkipWithError("relation failure");
  }
}
BENCHMARK(BM_VerifyFamily3b)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Zhelobenko(benchmark::State& state) {
  int n = 3;
  auto ctx = fresh_ctx(n);
  ZEl x = ctx->mul(ctx->generator({1, 3}), ctx->generator({3, 1}), Backend::Rewrite);
  for (auto _ : state) {
    ZEl out = zhelobenko_fast(*ctx, 1, x);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_Zhelobenko)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
