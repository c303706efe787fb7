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

// Grasp / release / mode-switch command generation. Closing is torque
// controlled; releasing and switching are position controlled, and every
// switch is an opening-direction move relative to the fully-open angle.

#include <iosfwd>
#include <string>
#include <vector>

#include "gripper/mech_model.hpp"
#include "gripper/motor_command.hpp"

namespace gripper {

struct ControllerState {
  double theta_m_ini = 0.0;     ///< motor angle of the fully-open state [rad]
  int k_now = 1;
  int n_gc = 12;
  double delta_theta_sw = 0.0;  ///< [rad]

  void validate() const;
};

/// Torque ramp that closes on the object with grasp force f_g_goal [N].
MotorCommand grasp_command(double f_g_goal, const GearGeometry& g);

/// Position move back to the fully-open angle.
MotorCommand release_command(const ControllerState& cs);

/// Opening rotation from mode k_now to k_goal, always in [0, (n_gc-1)*sw].
double switch_rotation(const ControllerState& cs, int k_goal);

struct SwitchPlan {
  MotorCommand command;
  ControllerState next;
  double rotation = 0.0;  ///< [rad]
};

/// Position move for the switch and the controller state after it.
SwitchPlan switch_command(const ControllerState& cs, int k_goal);

struct LoggedCommand {
  std::size_t seq = 0;
  MotorCommand command;
};

/// Stateful wrapper that serializes grasp/release/switch requests for one
/// gripper and keeps a log of every command issued.
class Controller {
 public:
  Controller(GearGeometry gears, ControllerState state);

  MotorCommand grasp(double f_g_goal);
  MotorCommand release();
  /// Releases first when holding an object.
  std::vector<MotorCommand> switch_to(int k_goal);

  const ControllerState& state() const { return state_; }
  bool grasping() const { return grasping_; }
  const std::vector<LoggedCommand>& log() const { return log_; }

 private:
  void record(const MotorCommand& cmd);

  GearGeometry gears_;
  ControllerState state_;
  bool grasping_ = false;
  std::vector<LoggedCommand> log_;
};

/// CSV with header `seq,command,target`; torque targets in N*mm, position
/// targets in degrees.
void write_command_log_csv(std::ostream& os,
                           const std::vector<LoggedCommand>& log);

}  // namespace gripper
