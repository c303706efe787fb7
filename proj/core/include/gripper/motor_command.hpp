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

#include <string>
#include <variant>

namespace gripper {

/// Motor turning direction. Opening is the positive motor-angle direction.
enum class Direction { kClose, kOpen };

/// Torque-mode command: ramp the motor torque magnitude to `target` [N*mm]
/// while driving in `direction`.
struct TorqueRamp {
  double target = 0.0;
  Direction direction = Direction::kClose;
};

/// Position-mode command: drive to the absolute motor angle `target` [rad].
struct PositionMove {
  double target = 0.0;
};

using MotorCommand = std::variant<TorqueRamp, PositionMove>;

std::string describe(const MotorCommand& cmd);

}  // namespace gripper
