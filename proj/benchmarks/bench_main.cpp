// Copyright 2026 The Multisurface Gripper Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <string>

#include "gripper/controller.hpp"
#include "gripper/grasp_analysis.hpp"
#include "gripper/mech_model.hpp"
#include "gripper/object_file.hpp"
#include "gripper/sim_engine.hpp"
#include "gripper/units.hpp"

namespace {

using namespace gripper;

ObjectSpec fixture(const std::string& name) {
  return load_object_file(std::string(GRIPPER_FIXTURES_DIR) + "/objects/" + name + ".obj");
}

void BM_DetentPeak(benchmark::State& state) {
  const MagnetDetent m = MagnetDetent::prototype();
  for (auto _ : state) {
    benchmark::DoNotOptimize(detent_peak(m, SurfaceCount{4, 3}));
  }
}
BENCHMARK(BM_DetentPeak);

void BM_SwitchLap(benchmark::State& state) {
  Scenario s;
  s.detent.k_m = kCalibratedMagnetCoefficient;
  s.step_deg = static_cast<double>(state.range(0)) / 10.0;
  s.commands = {PositionMove{deg_to_rad(1296.0)}};
  for (auto _ : state) {
    const SimTrace t = run_scenario(s);
    benchmark::DoNotOptimize(t.rows.size());
  }
}
BENCHMARK(BM_SwitchLap)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GraspRamp(benchmark::State& state) {
  Scenario s;
  s.contact_d_f_mm = 10.0;
  s.commands = {grasp_command(40.0, s.gears)};
  for (auto _ : state) {
    const SimTrace t = run_scenario(s);
    benchmark::DoNotOptimize(t.rows.size());
  }
}
BENCHMARK(BM_GraspRamp);

void BM_Classify(benchmark::State& state, const char* name, int mode) {
  const ObjectSpec obj = fixture(name);
  const GcModeTable table = build_mode_table(SurfaceOrders::prototype());
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_grasp(obj, table.at(mode), obj.mu).cls);
  }
}
BENCHMARK_CAPTURE(BM_Classify, box_flat, "box", 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, large_cylinder_concave, "large_cylinder", 3)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, small_cylinder_concave, "small_cylinder", 3)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Classify, thin_plate_concave, "thin_plate", 3)
    ->Unit(benchmark::kMillisecond);

void BM_CagingDisc(benchmark::State& state) {
  const ObjectSpec disc{Circle{5.0}, 0.5, "disc"};
  const SurfaceShape concave{SurfaceKind::kConcave, 10.0};
  const SurfaceProfile p = surface_profile(concave, 20.0, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(caging_test(disc, p, p, -4.0, 4.0).caged);
  }
}
BENCHMARK(BM_CagingDisc)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
