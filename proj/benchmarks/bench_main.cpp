#include <benchmark/benchmark.h>

#include "powfree/delta_machine.hpp"
#include "powfree/fixture_io.hpp"
#include "powfree/oracle_lab.hpp"
#include "powfree/power_check.hpp"
#include "powfree/streams.hpp"

using namespace powfree;

namespace {

Word marked_thue_morse(std::size_t n) {
  Word w = thue_morse(0, 1).prefix(n);
  for (std::size_t i = 96; i < n; i += 97) w[i] = 2;
  return w;
}

void BM_MaxExponent(benchmark::State& state) {
  const Word w = marked_thue_morse(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_exponent(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxExponent)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity()->Unit(benchmark::kMillisecond);

void BM_BruteMaxExponent(benchmark::State& state) {
  const Word w = marked_thue_morse(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_max_exponent(w));
}
BENCHMARK(BM_BruteMaxExponent)->Arg(64)->Arg(128)->Arg(256)->Arg(500)->Unit(benchmark::kMicrosecond);

void BM_SuffixViolations(benchmark::State& state) {
  const Word w = marked_thue_morse(static_cast<std::size_t>(state.range(0)));
  const PowerBound bound{Exponent(5), false};
  for (auto _ : state) benchmark::DoNotOptimize(suffix_violations(w, bound, w.size()));
}
BENCHMARK(BM_SuffixViolations)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

void BM_ThueMorseOverlapFree(benchmark::State& state) {
  const Word w = thue_morse(0, 1).prefix(std::size_t{1} << 20);
  const PowerBound bound{Exponent(2), true};
  for (auto _ : state) benchmark::DoNotOptimize(is_power_free(w, bound));
}
BENCHMARK(BM_ThueMorseOverlapFree)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_EnumerateSquareFree(benchmark::State& state) {
  const PowerBound bound{Exponent(2), false};
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_power_free(3, bound, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateSquareFree)->DenseRange(10, 20, 5)->Unit(benchmark::kMillisecond);

void BM_GlueG1(benchmark::State& state) {
  const DeltaTuple t0 = parse_delta_fixture(read_text_file(POWFREE_FIXTURE_DIR "/g1.delta")).tuple;
  const auto tail = thue_morse(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(glue(t0, tail, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GlueG1)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
