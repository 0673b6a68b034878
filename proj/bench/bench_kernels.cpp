#include <benchmark/benchmark.h>

#include "adolg/hecke.hpp"
#include "adolg/invariant.hpp"
#include "adolg/verify.hpp"

using namespace adolg;

namespace {

const BraidWord& sample_braid() {
  static const BraidWord b = family_check_words(Family::Type9)[517].full;
  return b;
}

template <class Ring>
void run_open_strand(benchmark::State& state, const Representation<Ring>& rep, bool parallel) {
  TraceOptions opt;
  opt.paranoid = state.range(0) != 0;
  for (auto _ : state) {
    auto o = parallel ? open_strand_operator_parallel(sample_braid(), rep, opt)
                      : open_strand_operator_serial(sample_braid(), rep, opt);
    benchmark::DoNotOptimize(o);
  }
  state.SetLabel(sample_braid().to_string());
}

void BM_Ado3Serial(benchmark::State& s) { run_open_strand(s, ado3_representation(), false); }
void BM_Ado3Parallel(benchmark::State& s) { run_open_strand(s, ado3_representation(), true); }
void BM_LgSpecSerial(benchmark::State& s) { run_open_strand(s, lg_specialized_representation(), false); }
void BM_LgSpecParallel(benchmark::State& s) { run_open_strand(s, lg_specialized_representation(), true); }
void BM_LgSerial(benchmark::State& s) { run_open_strand(s, lg_representation(), false); }
void BM_LgParallel(benchmark::State& s) { run_open_strand(s, lg_representation(), true); }

void BM_FamilySweep(benchmark::State& state) {
  auto words = family_check_words(Family::Type3);
  words.resize(64);
  SweepOptions opt;
  opt.audit_fraction = 0;
  opt.use_prefix_cache = state.range(0) != 0;
  opt.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_equality_sweep(words, opt));
}

}  // namespace

BENCHMARK(BM_Ado3Serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ado3Parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LgSpecSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LgSpecParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LgSerial)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LgParallel)->Arg(0)->Unit(benchmark::kMillisecond);
// Args: prefix cache on/off, worker count (0 = default, 1 = serial).
BENCHMARK(BM_FamilySweep)->Args({0, 1})->Args({1, 1})->Args({1, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
