#include <benchmark/benchmark.h>

#include <sstream>

#include "portload/ingest.hpp"
#include "portload/numeric.hpp"
#include "portload/profiles.hpp"
#include "portload/scenario.hpp"
#include "portload/synthgen.hpp"

namespace {

using namespace portload;

const std::vector<PortCall>& synthetic_calls() {
  static const auto calls = generate(default_synth_spec());
  return calls;
}

const std::string& synthetic_csv() {
  static const std::string csv = [] {
    std::ostringstream out;
    serialize_port_calls(synthetic_calls(), out);
    return out.str();
  }();
  return csv;
}

void bm_generate(benchmark::State& state) {
  const auto spec = default_synth_spec();
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(spec));
  }
}
BENCHMARK(bm_generate)->Unit(benchmark::kMillisecond);

void bm_parse(benchmark::State& state) {
  for (auto _ : state) {
    std::istringstream in(synthetic_csv());
    benchmark::DoNotOptimize(parse_port_calls(in));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(synthetic_csv().size()));
}
BENCHMARK(bm_parse)->Unit(benchmark::kMillisecond);

void bm_filter(benchmark::State& state) {
  const auto& calls = synthetic_calls();
  const FilterConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(filter_calls(calls, cfg));
  }
}
BENCHMARK(bm_filter)->Unit(benchmark::kMillisecond);

void bm_build_profile(benchmark::State& state) {
  const auto filtered = filter_calls(synthetic_calls(), FilterConfig{});
  const DateRange window = FilterConfig{}.window;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_arrival_profile(filtered.calls, "Sailing ship", window));
  }
}
BENCHMARK(bm_build_profile)->Unit(benchmark::kMicrosecond);

void bm_hourly_energy_vector(benchmark::State& state) {
  const auto profile = slow_charging_default();
  int slot = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hourly_energy_vector(profile, slot));
    slot = (slot + 1) % 24;
  }
}
BENCHMARK(bm_hourly_energy_vector);

void bm_total_demand(benchmark::State& state) {
  const auto filtered = filter_calls(synthetic_calls(), FilterConfig{});
  const DateRange window = FilterConfig{}.window;

  ScenarioConfig cfg;
  cfg.policies = default_policies();
  std::map<std::string, DailyArrivalVector> vectors;
  for (const auto& row : filtered.table) {
    cfg.adoption[row.vessel_class] = 1.0;
    vectors[row.vessel_class] = daily_arrival_vector(
        build_arrival_profile(filtered.calls, row.vessel_class, window),
        Aggregation::all_days());
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_demand(cfg, vectors));
  }
}
BENCHMARK(bm_total_demand)->Unit(benchmark::kMicrosecond);

void bm_exact_sum(benchmark::State& state) {
  std::vector<double> values(static_cast<std::size_t>(state.range(0)));
  double x = 0.1234567;
  for (auto& v : values) {
    v = x;
    x = x * 1.37 + 0.01;
    if (x > 1e6) x *= 1e-7;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_sum(values));
  }
}
BENCHMARK(bm_exact_sum)->Arg(24)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
