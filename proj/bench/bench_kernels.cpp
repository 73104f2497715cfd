// Serial reference loops against their OpenMP counterparts.
//
//   ./bench_kernels --benchmark_filter=Strata
//
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "cogrowth/factors.hpp"
#include "cogrowth/obstructions.hpp"
#include "cogrowth/spec_io.hpp"
#include "cogrowth/verify.hpp"

using namespace cogrowth;

namespace {
  Execution exec_of(benchmark::State const& state) {
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
  }

  void label(benchmark::State& state) {
    state.SetLabel(state.range(0) == 0
                       ? "serial"
                       : "parallel/" + std::to_string(available_threads()));
  }

  void BM_Strata(benchmark::State& state) {
    auto const spec  = builtin::thue_morse();
    auto const k_max = static_cast<std::size_t>(state.range(1));
    auto const text  = expand_prefix(spec, 16 * k_max);
    for (auto _ : state) {
      FactorLanguage fl(spec.alphabet(), text, k_max, spec.name(), true,
                        exec_of(state));
      benchmark::DoNotOptimize(fl.complexity(k_max));
    }
    label(state);
  }
  BENCHMARK(BM_Strata)
      ->ArgsProduct({{0, 1}, {200, 1000}})
      ->Unit(benchmark::kMillisecond);

  void BM_Obstructions(benchmark::State& state) {
    auto const n  = static_cast<std::size_t>(state.range(1));
    auto const fl = extract_factors(builtin::fibonacci(), n);
    for (auto _ : state) {
      auto obs = minimal_forbidden(fl, n, exec_of(state));
      benchmark::DoNotOptimize(obs.words.data());
    }
    label(state);
  }
  BENCHMARK(BM_Obstructions)
      ->ArgsProduct({{0, 1}, {200, 1000}})
      ->Unit(benchmark::kMillisecond);

  void BM_MainLemmaCorpus(benchmark::State& state) {
    auto const spec = corpus_defaults::main_lemma();
    for (auto _ : state) {
      auto r = run_main_lemma(spec, {}, exec_of(state));
      benchmark::DoNotOptimize(r.passes);
    }
    label(state);
  }
  BENCHMARK(BM_MainLemmaCorpus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

  void BM_DelEdgeCorpus(benchmark::State& state) {
    auto const spec = corpus_defaults::del_edge();
    for (auto _ : state) {
      auto r = run_lemma_del_edge(spec, exec_of(state));
      benchmark::DoNotOptimize(r.passes);
    }
    label(state);
  }
  BENCHMARK(BM_DelEdgeCorpus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
}  // namespace

BENCHMARK_MAIN();
