#include <benchmark/benchmark.h>

#include "permlab/conjectures.hpp"
#include "permlab/constructions.hpp"
#include "permlab/numtheory.hpp"
#include "permlab/search.hpp"

using namespace permlab;

namespace {

void BM_TwinPrimeCircle(benchmark::State& state) {
  const auto inst = conj::instance("3.13", {{"n", state.range(0)}});
  for (auto _ : state) {
    const auto out = search(inst.problem);
    benchmark::DoNotOptimize(out.nodes);
    state.counters["nodes"] = double(out.nodes);
  }
}
BENCHMARK(BM_TwinPrimeCircle)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_FilzCircle(benchmark::State& state) {
  const auto inst = conj::instance("filz", {{"n", state.range(0)}});
  for (auto _ : state) benchmark::DoNotOptimize(search(inst.problem).nodes);
}
BENCHMARK(BM_FilzCircle)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMicrosecond);

void BM_ModDiffParity(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  Constraint c;
  c.clauses.push_back(Clause::rainbow(ClauseKind::RainbowDiff, n));
  const Problem p{GroupSpec::integers(), integer_range(1, n), Shape::Linear, c};
  for (auto _ : state) benchmark::DoNotOptimize(search(p).status);
}
BENCHMARK(BM_ModDiffParity)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  const auto inst = conj::instance("3.13", {{"n", state.range(0)}});
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_enumerate(inst.problem).canonical_count);
}
BENCHMARK(BM_BruteForce)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SquareCycle(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cons::qr_cycle(state.range(0), cons::QrOperation::Sum, cons::QrTarget::Squares));
}
BENCHMARK(BM_SquareCycle)->Arg(97)->Arg(1009)->Unit(benchmark::kMicrosecond);

void BM_IsPrime(benchmark::State& state) {
  std::uint64_t x = (std::uint64_t{1} << 61) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nt::is_prime(x));
    x += 2;
  }
}
BENCHMARK(BM_IsPrime);

}  // namespace
BENCHMARK_MAIN();
