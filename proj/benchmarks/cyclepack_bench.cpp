#include <benchmark/benchmark.h>

#include "cyclepack/builder.hpp"
#include "cyclepack/catalog.hpp"
#include "cyclepack/inside.hpp"
#include "cyclepack/solver.hpp"
#include "cyclepack/verify.hpp"

using namespace cyclepack;

static void BM_EnumerateInside(benchmark::State& state) {
  const OctCycle c = OctCycle::canonicalize({0, 16, 2, 6, 11, 1, 3, 9});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_inside(c));
}
BENCHMARK(BM_EnumerateInside);

static void BM_Build(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build(n));
}
BENCHMARK(BM_Build)->Arg(17)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_VerifyPacking(benchmark::State& state) {
  const Construction c = build(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_packing(c.packing));
}
BENCHMARK(BM_VerifyPacking)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

static void BM_VerifyCertificate(benchmark::State& state) {
  const Construction c = build(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(c.packing, *c.certificate));
}
BENCHMARK(BM_VerifyCertificate)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

static void BM_SolveStrict(benchmark::State& state) {
  const Packing& p = catalog::get(CatalogKey::not_a2p(static_cast<std::size_t>(state.range(0)))).packing;
  for (auto _ : state) benchmark::DoNotOptimize(decide_a2p(p, CertMode::Strict));
}
BENCHMARK(BM_SolveStrict)->Arg(10)->Arg(11)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_SolveRelaxed(benchmark::State& state) {
  const Packing& p = catalog::get(CatalogKey::not_a2p(static_cast<std::size_t>(state.range(0)))).packing;
  for (auto _ : state) benchmark::DoNotOptimize(decide_a2p(p, CertMode::Relaxed));
}
BENCHMARK(BM_SolveRelaxed)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_FindBadSubpacking(benchmark::State& state) {
  const Construction c = build(static_cast<std::size_t>(state.range(0)), Variant::NotA2P);
  for (auto _ : state) benchmark::DoNotOptimize(find_bad_subpacking(c.packing));
}
BENCHMARK(BM_FindBadSubpacking)->Arg(45)->Arg(193)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
