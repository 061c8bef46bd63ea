/*
 * Copyright 2026 The softgrip Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/

// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to compare.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "softgrip/grasp_engine.hpp"
#include "softgrip/kernels.hpp"

using namespace softgrip;

namespace {

template <bool Parallel>
void BM_ContactMoments(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto m = Parallel ? kernels::parallel::trapezoid_contact_moments(0.025, n)
                      : kernels::serial::trapezoid_contact_moments(0.025, n);
    benchmark::DoNotOptimize(m);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_ScanBreakpoints(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> strain(n), load(n);
  for (std::size_t i = 0; i < n; ++i) {
    strain[i] = static_cast<double>(i) / (n - 1);
    load[i] = strain[i] <= 0.4 ? 100 * strain[i] : 40 + 400 * (strain[i] - 0.4);
  }
  std::vector<kernels::SegmentCandidate> cands(n - 2);
  for (std::size_t i = 0; i < cands.size(); ++i) cands[i].breakpoint = strain[i + 1];
  for (auto _ : state) {
    if (Parallel)
      kernels::parallel::scan_breakpoints(strain, load, cands);
    else
      kernels::serial::scan_breakpoints(strain, load, cands);
    benchmark::ClobberMemory();
  }
}

std::vector<kernels::Disc> grid_discs(int side, int px) {
  std::vector<kernels::Disc> d;
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c) d.push_back({(c + 0.5) * px / side, (r + 0.5) * px / side, 4.0});
  return d;
}

template <bool Parallel>
void BM_RenderDiscs(benchmark::State& state) {
  const int px = static_cast<int>(state.range(0));
  const auto discs = grid_discs(10, px);
  std::vector<std::uint8_t> out(static_cast<std::size_t>(px) * px);
  for (auto _ : state) {
    if (Parallel)
      kernels::parallel::render_discs(discs, px, px, {}, {8.0, 1}, out);
    else
      kernels::serial::render_discs(discs, px, px, {}, {8.0, 1}, out);
    benchmark::ClobberMemory();
  }
}

template <bool Parallel>
void BM_Threshold(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::uint8_t> in(n), out(n);
  std::mt19937 rng(1);
  for (auto& v : in) v = static_cast<std::uint8_t>(rng());
  for (auto _ : state) {
    if (Parallel)
      kernels::parallel::threshold(in, 128, out);
    else
      kernels::serial::threshold(in, 128, out);
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_Feasibility(benchmark::State& state) {
  std::vector<GraspScenario> batch(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.005, 0.2);
  for (auto& s : batch) {
    s.object = {ShapeClass::Sphere, u(rng), u(rng), 0.1, "x"};
    s.hold_height = 0.2;
  }
  for (auto _ : state) {
    auto out = Parallel ? evaluate_batch(batch) : evaluate_batch_serial(batch);
    benchmark::DoNotOptimize(out);
  }
}

}  // namespace

BENCHMARK(BM_ContactMoments<false>)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_ContactMoments<true>)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_ScanBreakpoints<false>)->Arg(50)->Arg(500);
BENCHMARK(BM_ScanBreakpoints<true>)->Arg(50)->Arg(500);
BENCHMARK(BM_RenderDiscs<false>)->Arg(256)->Arg(1024);
BENCHMARK(BM_RenderDiscs<true>)->Arg(256)->Arg(1024);
BENCHMARK(BM_Threshold<false>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Threshold<true>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Feasibility<false>)->Arg(1000);
BENCHMARK(BM_Feasibility<true>)->Arg(1000);

BENCHMARK_MAIN();
