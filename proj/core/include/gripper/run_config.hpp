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

#pragma once

// Run configuration: mechanism parameters plus planner, grasp and simulator
// settings, read from sectioned key=value text.

#include <string>
#include <string_view>

#include "gripper/controller.hpp"
#include "gripper/gc_mode_table.hpp"
#include "gripper/grasp_analysis.hpp"
#include "gripper/mech_model.hpp"
#include "gripper/mode_planner.hpp"
#include "gripper/sim_engine.hpp"

namespace gripper {

struct SimSettings {
  double stroke_mm = 30.0;
  double friction_Nmm = 0.0;
  double step_deg = 0.1;
  double torque_ramp_Nmm = 10.0;
  int initial_mode = 1;
  std::size_t max_steps = 10'000'000;
};

struct RunConfig {
  GearGeometry gears = GearGeometry::prototype();
  MagnetDetent detent = MagnetDetent::prototype();
  SurfaceOrders surfaces = SurfaceOrders::prototype();
  PlannerThresholds planner;
  GraspSetup grasp;
  SimSettings sim;

  SurfaceCount counts() const { return surfaces.count(); }
  GcModeTable mode_table() const;
  /// Fully-open controller state at the configured initial mode.
  ControllerState controller() const;
  /// Scenario with every mechanism and simulator setting filled, no commands.
  Scenario scenario() const;

  void validate() const;
};

/// Parses and validates; [gears] is required in full, everything else
/// falls back to the defaults above. Errors are ParseError with the line.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// Serializes a config so that parse_config reproduces it.
std::string format_config(const RunConfig& cfg);

}  // namespace gripper
