// Serial reference vs OpenMP path for the batch kernels.
//   ./bench_kernels --benchmark_filter=E8

#include <benchmark/benchmark.h>

#include "catsys/kernels.hpp"
#include "catsys/milnor.hpp"
#include "catsys/ratio_search.hpp"

using namespace catsys;

namespace {

const RootSystem& e8() {
  static const RootSystem rs = build_root_system(AdeType::make(Family::E, 8));
  return rs;
}

Execution exec_of(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_SampleRatiosE8(benchmark::State& state) {
  SearchConfig cfg;
  cfg.sample_count = 20000;
  for (auto _ : state) benchmark::DoNotOptimize(sample_ratios(e8(), cfg, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.sample_count));
}

void BM_VolumeGapsE8(benchmark::State& state) {
  std::vector<CentralCharge> charges;
  for (std::size_t k = 0; k < 20000; ++k) charges.push_back(draw_charge(8, 1, k));
  for (auto _ : state) benchmark::DoNotOptimize(volume_gaps(e8(), charges, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(charges.size()));
}

void BM_CorrespondenceA8(benchmark::State& state) {
  std::vector<PointConfiguration> configs;
  for (std::size_t k = 0; k < 5000; ++k) configs.push_back(random_configuration(8, 1, k));
  for (auto _ : state) benchmark::DoNotOptimize(verify_correspondence_batch(configs, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(configs.size()));
}

}  // namespace

BENCHMARK(BM_SampleRatiosE8)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VolumeGapsE8)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CorrespondenceA8)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
