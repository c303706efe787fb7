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

// Quasi-static state machine of the single-motor gripper.
//
// Conventions: the motor angle grows in the opening direction, so a mode
// switch (which always opens past the stopper) advances theta_m. Finger
// travel d_f is 0 on the stopper and grows while closing. tau_m is the load
// torque the motor delivers along its current drive direction; it only goes
// negative while the next detent pulls a rotating finger body forward.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gripper/error.hpp"
#include "gripper/gc_mode_table.hpp"
#include "gripper/mech_model.hpp"
#include "gripper/motor_command.hpp"
#include "gripper/object.hpp"

namespace gripper {

enum class Phase {
  kTranslatingClose,
  kGrasping,
  kTranslatingOpen,
  kAtStopper,
  kRotating,
  kDetentEngaged,
};

std::string_view to_string(Phase phase);
Phase parse_phase(std::string_view name);

struct GripperState {
  double theta_m = 0.0;
  double tau_m = 0.0;
  double d_f3s = 0.0;
  double d_f4s = 0.0;
  double theta_fb3s = 0.0;
  double theta_fb4s = 0.0;
  int mode_index = 1;
  Phase phase = Phase::kAtStopper;

  /// Motor angle at which both units rest on the stopper.
  double stopper_theta_m = 0.0;
  /// Completed surface switches since the start of the run.
  long switches = 0;
  /// Motor rotation since breakaway onset; meaningful while kRotating.
  double switch_progress = 0.0;

  friend bool operator==(const GripperState&, const GripperState&) = default;
};

struct Scenario {
  GearGeometry gears = GearGeometry::prototype();
  MagnetDetent detent = MagnetDetent::prototype();
  SurfaceOrders surfaces = SurfaceOrders::prototype();

  double stroke_limit_mm = 30.0;  ///< per-finger travel at full closure
  double initial_d_f_mm = 0.0;    ///< start position, 0 = on the stopper
  /// Travel at which the fingers touch the object. Derived from `object`
  /// (fingers meet at the stroke limit) when not given.
  std::optional<double> contact_d_f_mm;
  std::optional<ObjectSpec> object;

  double initial_theta_m = 0.0;
  int initial_mode = 1;
  std::vector<MotorCommand> commands;

  double friction_torque = 0.0;  ///< resisting torque at the body gear [N*mm]
  double step_deg = 0.1;         ///< motor increment per step
  double torque_ramp = 10.0;     ///< torque increment per step [N*mm]
  std::size_t max_steps = 10'000'000;

  void validate() const;
};

/// Scenario constants that would otherwise be recomputed every step.
struct SimModel {
  GearGeometry gears;
  int n_gc = 0;
  int n_3s = 0;
  int n_4s = 0;
  double switch_interval = 0.0;
  double breakaway_torque = 0.0;  ///< motor torque threshold incl. friction
  double friction_torque = 0.0;
  MagnetDetent detent;
  /// The finger with the shorter lever sets the breakaway torque.
  bool controlled_by_3s = true;
  double control_ratio = 0.0;     ///< d(theta_fb)/d(theta_m), that finger
  double control_interval = 0.0;  ///< its inter-surface angle
  double control_peak = 0.0;      ///< its body angle of peak holding torque
  double stroke_limit = 0.0;
  std::optional<double> contact_d_f;
  double step = 0.0;  ///< [rad]
  double ramp = 0.0;

  static SimModel from(const Scenario& scenario);
};

enum class EventType {
  kObjectContact,
  kStopperContact,
  kBreakaway,
  kDetentReengage,
  kModeChanged,
};

std::string_view to_string(EventType type);

struct SimEvent {
  std::size_t step = 0;
  EventType type = EventType::kObjectContact;
  std::string detail;

  friend bool operator==(const SimEvent&, const SimEvent&) = default;
};

struct StepIncrements {
  double dtheta = 0.0;  ///< [rad]
  double dtau = 0.0;    ///< [N*mm]
};

struct StepResult {
  GripperState state;
  std::vector<SimEvent> events;  ///< step fields left at 0
};

/// A command the mechanism cannot carry out from the given state.
class StepRejected : public Error {
 public:
  using Error::Error;
};

GripperState initial_state(const Scenario& scenario, const SimModel& model);

/// True once `cmd` has nothing left to do from `state`.
bool command_done(const GripperState& state, const MotorCommand& cmd,
                  const SimModel& model);

/// Advances the mechanism by one quasi-static increment toward `cmd`.
/// Throws StepRejected on a stroke-limit violation, a position move into
/// the object, a torque-mode opening past the breakaway threshold, or a
/// closing command issued before a rotating body has passed its peak.
StepResult step(const GripperState& state, const MotorCommand& cmd,
                const StepIncrements& inc, const SimModel& model);

StepResult step(const GripperState& state, const MotorCommand& cmd,
                const StepIncrements& inc, const Scenario& scenario);

struct TraceRow {
  std::size_t step = 0;
  double theta_m = 0.0;
  double tau_m = 0.0;
  double d_f3s = 0.0;
  double d_f4s = 0.0;
  double theta_fb3s = 0.0;
  double theta_fb4s = 0.0;
  double f_g = 0.0;
  Phase phase = Phase::kAtStopper;
  int mode_index = 1;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct SimTrace {
  std::vector<TraceRow> rows;
  std::vector<SimEvent> events;
  GripperState final_state;

  std::size_t count(EventType type) const;
  friend bool operator==(const SimTrace&, const SimTrace&) = default;
};

/// Replays every command to completion. Deterministic: equal scenarios give
/// bit-identical traces. Errors surface as SimError with the failing step.
SimTrace run_scenario(const Scenario& scenario);

struct BodyTorqueSample {
  double theta_m = 0.0;
  double tau_3s = 0.0;
};

/// Torque delivered to the 3S finger body for each trace row.
std::vector<BodyTorqueSample> body_torque_trace(const SimTrace& trace,
                                                const GearGeometry& g);

}  // namespace gripper
