// Microbenchmarks for the hot paths: the per-point PTF kernel, ring cache
// construction, per-pattern profile evaluation out of the cache (the inner
// loop of the exhaustive scan), criteria scoring, and the FFT round used by
// the imaging model.

#include <benchmark/benchmark.h>

#include <memory>

#include "ptfopt/criteria.hpp"
#include "ptfopt/fft.hpp"
#include "ptfopt/optics_config.hpp"
#include "ptfopt/ptf.hpp"
#include "ptfopt/radial_profile.hpp"
#include "ptfopt/search.hpp"

namespace {

ptfopt::OpticsConfig config_for(int grid) {
  ptfopt::OpticsConfig cfg;
  cfg.grid_size = grid;
  return cfg;
}

void BM_point_kernel(benchmark::State& state) {
  const ptfopt::OpticsConfig cfg = config_for(static_cast<int>(state.range(0)));
  ptfopt::Grid2D g(cfg.grid_size);
  for (auto _ : state) {
    ptfopt::accumulate_point_kernel(g, 0.9, 0.1, cfg);
    benchmark::DoNotOptimize(g.v.data());
  }
}
BENCHMARK(BM_point_kernel)->Arg(128)->Arg(256);

void BM_ring_cache_build(benchmark::State& state) {
  const ptfopt::OpticsConfig cfg = config_for(256);
  const int bits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ptfopt::RingPtfCache cache(bits, cfg, 8);
    for (int i = 0; i < bits; ++i) {
      benchmark::DoNotOptimize(&cache.ring(i));
    }
  }
}
BENCHMARK(BM_ring_cache_build)->Arg(4)->Unit(benchmark::kMillisecond);

struct ScanFixtures {
  ptfopt::OpticsConfig cfg = config_for(256);
  ptfopt::RingPtfCache rings{12, cfg, 8};
  ptfopt::RingProfileCache profiles{rings};
};

ScanFixtures& fixtures() {
  static ScanFixtures f;
  return f;
}

void BM_pattern_profile_from_cache(benchmark::State& state) {
  ScanFixtures& f = fixtures();
  ptfopt::RingPattern pat;
  pat.mask = 2048;
  for (auto _ : state) {
    ptfopt::RadialProfile prof = f.profiles.pattern_profile(pat);
    benchmark::DoNotOptimize(prof.values.data());
    pat.mask = pat.mask % 4095 + 1;
  }
}
BENCHMARK(BM_pattern_profile_from_cache);

void BM_criteria_eval(benchmark::State& state) {
  ScanFixtures& f = fixtures();
  ptfopt::RingPattern pat;
  pat.mask = 2048;
  const ptfopt::RadialProfile prof = f.profiles.pattern_profile(pat);
  for (auto _ : state) {
    auto rep = ptfopt::evaluate_profile(prof, pat.mask, pat.bit_depth);
    benchmark::DoNotOptimize(&rep);
  }
}
BENCHMARK(BM_criteria_eval);

void BM_fft_roundtrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ptfopt::Grid2D g(n);
  for (int i = 0; i < n; ++i) {
    g.v[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  for (auto _ : state) {
    auto spec = ptfopt::fft2(g);
    ptfopt::Grid2D back = ptfopt::ifft2_real(spec, n);
    benchmark::DoNotOptimize(back.v.data());
  }
}
BENCHMARK(BM_fft_roundtrip)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
