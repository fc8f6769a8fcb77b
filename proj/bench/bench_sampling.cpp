#include <benchmark/benchmark.h>

#include "ckf/sampling.hpp"

namespace {

using ckf::Field;
using ckf::SubgroupFamily;

SubgroupFamily family_for(const benchmark::State& state) {
  const Field f = static_cast<Field>(state.range(0));
  return SubgroupFamily::hprime_sl(f, static_cast<int>(state.range(1)), 3);
}

void run(benchmark::State& state, bool parallel) {
  const auto fam = family_for(state);
  const auto spec = ckf::sampling::batch_for(fam, 2000, 7);
  const ckf::sampling::Sampler sampler = [&fam](std::mt19937_64& eng) { return fam.sample(eng); };
  for (auto _ : state) {
    auto st = parallel ? ckf::sampling::containment_parallel(spec, sampler)
                       : ckf::sampling::containment_serial(spec, sampler);
    benchmark::DoNotOptimize(st);
    if (!st.passed()) state.SkipWithError("containment failed");
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * spec.samples));
  state.SetLabel(fam.describe());
}

void BM_ContainmentSerial(benchmark::State& state) { run(state, false); }
void BM_ContainmentParallel(benchmark::State& state) { run(state, true); }

// range(0): field (0 = R, 1 = C, 2 = H), range(1): n
#define CKF_SIZES ->Args({0, 6})->Args({1, 6})->Args({2, 6})->Args({0, 16})->Args({1, 16})->Unit(benchmark::kMillisecond)
BENCHMARK(BM_ContainmentSerial) CKF_SIZES;
BENCHMARK(BM_ContainmentParallel) CKF_SIZES->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
