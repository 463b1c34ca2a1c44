// Parallel kernels against their serial references.

#include <map>

#include <benchmark/benchmark.h>

#include "polysec/compose.hpp"
#include "polysec/fuzz.hpp"
#include "polysec/slack.hpp"

namespace {

using namespace polysec;

const SectionedPolytope& joined(std::size_t n) {
  static std::map<std::size_t, SectionedPolytope> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Rng rng(case_seed(7, n));
    it = cache.emplace(n, ngon_extension_serial(random_convex_polygon(n, rng))).first;
  }
  return it->second;
}

template <auto Fn>
void BM_Section(benchmark::State& state) {
  const auto& s = joined(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(s.vertices, s.dim, 20'000'000));
}

template <auto Fn>
void BM_Extreme(benchmark::State& state) {
  const auto& s = joined(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(s.vertices, s.dim));
}

template <auto Fn>
void BM_Factorize(benchmark::State& state) {
  const auto& s = joined(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(s.claimed, s));
}

template <auto Fn>
void BM_Ngon(benchmark::State& state) {
  Rng rng(case_seed(11, static_cast<std::uint64_t>(state.range(0))));
  const Polygon p = random_convex_polygon(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(p, ExtensionOptions{}));
}

template <auto Fn>
void BM_Fuzz(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(FuzzTarget::Heptagon, static_cast<std::size_t>(state.range(0)), 3, ExtensionOptions{}));
  }
}

}  // namespace

BENCHMARK(BM_Section<compute_section>)->Name("compute_section/parallel")->Arg(14)->Arg(21);
BENCHMARK(BM_Section<compute_section_serial>)->Name("compute_section/serial")->Arg(14)->Arg(21);
BENCHMARK(BM_Extreme<extreme_points>)->Name("extreme_points/parallel")->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Extreme<extreme_points_serial>)->Name("extreme_points/serial")->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Factorize<factorize_from_section>)->Name("factorize/parallel")->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Factorize<factorize_from_section_serial>)->Name("factorize/serial")->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ngon<ngon_extension>)->Name("ngon_extension/parallel")->Arg(21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ngon<ngon_extension_serial>)->Name("ngon_extension/serial")->Arg(21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fuzz<run_fuzz>)->Name("fuzz_heptagon/parallel")->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fuzz<run_fuzz_serial>)->Name("fuzz_heptagon/serial")->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
