// Serial reference against OpenMP variant for the three enumeration kernels.

#include "acyclic/auditor.hpp"
#include "acyclic/generators.hpp"
#include "acyclic/path_cover.hpp"
#include "acyclic/smith.hpp"

#include <benchmark/benchmark.h>

using namespace acyclic;

namespace {

PolyMatrix example_char_matrix() {
  RatMatrix a(10, 10);
  for (const auto& [u, v] : figure2_tree().graph().edges()) a(u - 1, v - 1) = a(v - 1, u - 1) = 1;
  return characteristic_matrix(a);
}

void BM_MinorGcd(benchmark::State& state) {
  const PolyMatrix m = example_char_matrix();
  const int k = static_cast<int>(state.range(0));
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(parallel ? minor_gcd_parallel(m, k) : minor_gcd_serial(m, k));
}
BENCHMARK(BM_MinorGcd)->ArgsProduct({{7, 9}, {0, 1}})->ArgNames({"k", "parallel"})->Unit(benchmark::kMillisecond);

void BM_PathEnumeration(benchmark::State& state) {
  const Tree t = random_tree(static_cast<int>(state.range(0)), 17);
  const Exec exec = state.range(1) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(path_cover_number_bruteforce(t, exec));
}
BENCHMARK(BM_PathEnumeration)->ArgsProduct({{12, 14}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

void BM_AuditBatch(benchmark::State& state) {
  BatchOptions o;
  o.seeds = 20;
  o.exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(run_claim("lem-5.3", o));
}
BENCHMARK(BM_AuditBatch)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
