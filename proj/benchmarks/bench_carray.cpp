// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include <benchmark/benchmark.h>

#include "carray/farfield.hpp"
#include "carray/modes.hpp"
#include "carray/nearfield.hpp"
#include "carray/synthesis.hpp"

using namespace carray;

namespace {

const ArrayGeometry kGeom = default_geometry();
const ElementPatternModel kModel = ElementPatternModel::default_model();

ExcitationVector unicast() { return mix_modes(preset("unicast-a", kGeom, kModel), kGeom); }

void BM_TotalField(benchmark::State& state) {
  const auto w = unicast();
  const Direction d = Direction::from_degrees(80.0, 12.0);
  for (auto _ : state) benchmark::DoNotOptimize(total_field(kGeom, kModel, w, d));
}
BENCHMARK(BM_TotalField);

void BM_SamplePattern(benchmark::State& state) {
  const auto w = unicast();
  const int n_theta = static_cast<int>(state.range(0));
  const auto grid = SphereGrid::gauss_legendre(n_theta, 2 * (n_theta - 1));
  for (auto _ : state) benchmark::DoNotOptimize(sample_pattern(kGeom, kModel, w, grid));
}
BENCHMARK(BM_SamplePattern)->Arg(181)->Arg(361)->Unit(benchmark::kMillisecond);

void BM_Directivity(benchmark::State& state) {
  const auto p = sample_default_pattern(kGeom, kModel, unicast());
  for (auto _ : state) benchmark::DoNotOptimize(directivity(p));
}
BENCHMARK(BM_Directivity)->Unit(benchmark::kMicrosecond);

void BM_BeamPeaks(benchmark::State& state) {
  const auto p = sample_default_pattern(kGeom, kModel,
                                        mix_modes(preset("multicast-120", kGeom, kModel), kGeom));
  for (auto _ : state) benchmark::DoNotOptimize(find_beam_peaks(p, 3.0));
}
BENCHMARK(BM_BeamPeaks)->Unit(benchmark::kMicrosecond);

void BM_NearFieldPlane(benchmark::State& state) {
  const auto w = oam_excitation(1, kGeom);
  const double lambda = kGeom.frequency().wavelength();
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(efield_on_plane(kGeom, kModel, w, 2.0 * lambda, 2.0 * lambda, samples));
  }
}
BENCHMARK(BM_NearFieldPlane)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_Synthesize(benchmark::State& state) {
  SynthesisProblem p;
  p.targets = {{0.0, 1.0}, {deg2rad(120.0), 1.0}, {deg2rad(240.0), 1.0}};
  for (int m = -5; m <= 5; ++m) p.mode_set.push_back(m);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(p));
}
BENCHMARK(BM_Synthesize)->Unit(benchmark::kMicrosecond);

void BM_ModeRoundTrip(benchmark::State& state) {
  const auto s = preset("unicast-b", kGeom, kModel);
  for (auto _ : state) benchmark::DoNotOptimize(mode_decompose(mix_modes(s, kGeom), kGeom));
}
BENCHMARK(BM_ModeRoundTrip);

}  // namespace

BENCHMARK_MAIN();
