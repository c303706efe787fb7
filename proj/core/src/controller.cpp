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

#include "gripper/controller.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "gripper/error.hpp"
#include "gripper/trace_io.hpp"
#include "gripper/units.hpp"

namespace gripper {

std::string describe(const MotorCommand& cmd) {
  std::ostringstream os;
  if (const auto* ramp = std::get_if<TorqueRamp>(&cmd)) {
    os << "torque ramp "
       << (ramp->direction == Direction::kClose ? "close" : "open") << " to "
       << format_number(ramp->target) << " N*mm";
  } else {
    os << "position move to "
       << format_number(rad_to_deg(std::get<PositionMove>(cmd).target))
       << " deg";
  }
  return os.str();
}

void ControllerState::validate() const {
  if (n_gc < 1) throw InvalidArgument("n_GC must be >= 1");
  if (k_now < 1 || k_now > n_gc) {
    throw InvalidArgument("k_now outside 1..n_GC");
  }
  if (!(delta_theta_sw > 0.0)) {
    throw InvalidArgument("switch interval must be > 0");
  }
  if (!std::isfinite(theta_m_ini)) {
    throw InvalidArgument("theta_m_ini must be finite");
  }
}

MotorCommand grasp_command(double f_g_goal, const GearGeometry& g) {
  if (!(f_g_goal > 0.0) || !std::isfinite(f_g_goal)) {
    throw InvalidArgument("target grasp force must be > 0");
  }
  return TorqueRamp{g.r_is * f_g_goal, Direction::kClose};
}

MotorCommand release_command(const ControllerState& cs) {
  return PositionMove{cs.theta_m_ini};
}

double switch_rotation(const ControllerState& cs, int k_goal) {
  cs.validate();
  if (k_goal < 1 || k_goal > cs.n_gc) {
    std::ostringstream os;
    os << "target mode " << k_goal << " outside 1.." << cs.n_gc;
    throw InvalidArgument(os.str());
  }
  const int steps =
      k_goal >= cs.k_now ? k_goal - cs.k_now : cs.n_gc + k_goal - cs.k_now;
  return steps * cs.delta_theta_sw;
}

SwitchPlan switch_command(const ControllerState& cs, int k_goal) {
  const double rotation = switch_rotation(cs, k_goal);
  SwitchPlan plan{PositionMove{cs.theta_m_ini + rotation}, cs, rotation};
  plan.next.theta_m_ini = cs.theta_m_ini + rotation;
  plan.next.k_now = k_goal;
  return plan;
}

Controller::Controller(GearGeometry gears, ControllerState state)
    : gears_(gears), state_(state) {
  gears_.validate();
  state_.validate();
}

void Controller::record(const MotorCommand& cmd) {
  log_.push_back({log_.size() + 1, cmd});
}

MotorCommand Controller::grasp(double f_g_goal) {
  MotorCommand cmd = grasp_command(f_g_goal, gears_);
  record(cmd);
  grasping_ = true;
  return cmd;
}

MotorCommand Controller::release() {
  MotorCommand cmd = release_command(state_);
  record(cmd);
  grasping_ = false;
  return cmd;
}

std::vector<MotorCommand> Controller::switch_to(int k_goal) {
  SwitchPlan plan = switch_command(state_, k_goal);
  std::vector<MotorCommand> out;
  if (grasping_) out.push_back(release());
  record(plan.command);
  out.push_back(plan.command);
  state_ = plan.next;
  return out;
}

void write_command_log_csv(std::ostream& os,
                           const std::vector<LoggedCommand>& log) {
  os << "seq,command,target\n";
  for (const LoggedCommand& entry : log) {
    os << entry.seq << ',';
    if (const auto* ramp = std::get_if<TorqueRamp>(&entry.command)) {
      os << (ramp->direction == Direction::kClose ? "torque_close"
                                                  : "torque_open")
         << ',' << format_number(ramp->target);
    } else {
      os << "position," << format_number(rad_to_deg(
                               std::get<PositionMove>(entry.command).target));
    }
    os << '\n';
  }
}

}  // namespace gripper
