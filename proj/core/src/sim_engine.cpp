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

#include "gripper/sim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gripper/units.hpp"

namespace gripper {
namespace {

// Motor angles closer than this are the same position.
constexpr double kAngleTol = 1e-9;
constexpr double kLengthTol = 1e-9;

bool on_stopper(Phase phase) {
  return phase == Phase::kAtStopper || phase == Phase::kDetentEngaged;
}

void set_travel(GripperState& s, double d) {
  s.d_f3s = d;
  s.d_f4s = d;
}

double travel(const GripperState& s) { return s.d_f3s; }

// Motor torque needed to hold the rotating bodies `progress` past onset.
// Only the nearest magnet acts: the previous one until mid-interval, then
// the next one, which pulls the body forward.
double rotation_torque(double progress, const SimModel& m) {
  const double phi = m.control_ratio * progress;
  const double body =
      phi <= 0.5 * m.control_interval
          ? detent_torque(phi, m.detent)
          : -detent_torque(m.control_interval - phi, m.detent);
  return m.gears.r_is * (body + m.friction_torque) / m.gears.min_alpha();
}

void set_body_angles(GripperState& s, const SimModel& m) {
  const AnglePair turn = finger_body_angles(s.switch_progress, m.gears);
  s.theta_fb3s = static_cast<double>(s.switches) * (2.0 * kPi / m.n_3s) +
                 turn.theta_3s;
  s.theta_fb4s = static_cast<double>(s.switches) * (2.0 * kPi / m.n_4s) +
                 turn.theta_4s;
}

void reengage(GripperState& s, const SimModel& m, std::vector<SimEvent>& events,
              const char* how) {
  s.theta_m = s.stopper_theta_m + m.switch_interval;
  s.stopper_theta_m = s.theta_m;
  s.switch_progress = 0.0;
  ++s.switches;
  set_body_angles(s, m);
  s.mode_index = s.mode_index % m.n_gc + 1;
  s.phase = Phase::kDetentEngaged;
  s.tau_m = 0.0;
  events.push_back({0, EventType::kDetentReengage, how});
  events.push_back(
      {0, EventType::kModeChanged, std::to_string(s.mode_index)});
}

// Rotates the bodies by at most `budget` of motor angle. Lands exactly on
// the peak-torque angle and on the next detent so both appear in traces.
void rotate(GripperState& s, double budget, const SimModel& m,
            std::vector<SimEvent>& events) {
  const double left = m.switch_interval - s.switch_progress;
  if (budget >= left - kAngleTol) {
    reengage(s, m, events, "switch");
    return;
  }
  double next = s.switch_progress + budget;
  const double peak = m.control_peak / m.control_ratio;
  if (s.switch_progress < peak && next > peak) {
    next = peak;
  }
  s.switch_progress = next;
  s.theta_m = s.stopper_theta_m + next;
  set_body_angles(s, m);
  s.tau_m = rotation_torque(next, m);
}

void translate_open(GripperState& s, double budget, const SimModel& m,
                    std::vector<SimEvent>& events) {
  const double to_stopper = travel(s) / m.gears.r_is;
  s.tau_m = 0.0;
  if (budget >= to_stopper - kAngleTol) {
    s.theta_m = s.stopper_theta_m;
    set_travel(s, 0.0);
    s.phase = Phase::kAtStopper;
    events.push_back({0, EventType::kStopperContact, ""});
    return;
  }
  s.theta_m += budget;
  set_travel(s, m.gears.r_is * (s.stopper_theta_m - s.theta_m));
  s.phase = Phase::kTranslatingOpen;
}

void translate_close(GripperState& s, double budget, const SimModel& m,
                     std::vector<SimEvent>& events) {
  s.tau_m = 0.0;
  s.phase = Phase::kTranslatingClose;
  const double limit = m.contact_d_f.value_or(m.stroke_limit);
  const double to_limit = (limit - travel(s)) / m.gears.r_is;
  if (budget >= to_limit - kAngleTol) {
    if (!m.contact_d_f) {
      if (budget > to_limit + kAngleTol || to_limit <= kAngleTol) {
        throw StepRejected("closing past the stroke limit with no object");
      }
    }
    s.theta_m = s.stopper_theta_m - limit / m.gears.r_is;
    set_travel(s, limit);
    if (m.contact_d_f) {
      s.phase = Phase::kGrasping;
      events.push_back({0, EventType::kObjectContact, ""});
    }
    return;
  }
  s.theta_m -= budget;
  set_travel(s, m.gears.r_is * (s.stopper_theta_m - s.theta_m));
}

double approach(double value, double target, double increment) {
  if (value < target) return std::min(value + increment, target);
  return std::max(value - increment, target);
}

}  // namespace

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::kTranslatingClose:
      return "TRANSLATING_CLOSE";
    case Phase::kGrasping:
      return "GRASPING";
    case Phase::kTranslatingOpen:
      return "TRANSLATING_OPEN";
    case Phase::kAtStopper:
      return "AT_STOPPER";
    case Phase::kRotating:
      return "ROTATING";
    case Phase::kDetentEngaged:
      return "DETENT_ENGAGED";
  }
  return "?";
}

Phase parse_phase(std::string_view name) {
  for (Phase p : {Phase::kTranslatingClose, Phase::kGrasping,
                  Phase::kTranslatingOpen, Phase::kAtStopper, Phase::kRotating,
                  Phase::kDetentEngaged}) {
    if (to_string(p) == name) return p;
  }
  throw InvalidArgument("unknown phase '" + std::string(name) + "'");
}

std::string_view to_string(EventType type) {
  switch (type) {
    case EventType::kObjectContact:
      return "ObjectContact";
    case EventType::kStopperContact:
      return "StopperContact";
    case EventType::kBreakaway:
      return "Breakaway";
    case EventType::kDetentReengage:
      return "DetentReengage";
    case EventType::kModeChanged:
      return "ModeChanged";
  }
  return "?";
}

void Scenario::validate() const {
  gears.validate();
  detent.validate();
  if (!(step_deg > 0.0) || !std::isfinite(step_deg)) {
    throw InvalidArgument("step size must be > 0");
  }
  if (!(torque_ramp > 0.0) || !std::isfinite(torque_ramp)) {
    throw InvalidArgument("torque ramp must be > 0");
  }
  if (!(stroke_limit_mm > 0.0)) {
    throw InvalidArgument("stroke limit must be > 0");
  }
  if (initial_d_f_mm < 0.0 || initial_d_f_mm > stroke_limit_mm) {
    throw InvalidArgument("initial finger position outside [0, stroke limit]");
  }
  if (friction_torque < 0.0) {
    throw InvalidArgument("friction torque must be >= 0");
  }
  if (object) object->validate();
}

SimModel SimModel::from(const Scenario& scenario) {
  scenario.validate();
  const SurfaceCount count = scenario.surfaces.count();
  SimModel m;
  m.gears = scenario.gears;
  m.detent = scenario.detent;
  m.n_3s = count.n_b;
  m.n_4s = count.n_a;
  m.n_gc = gc_mode_count(count);
  m.switch_interval = gripper::switch_interval(scenario.gears, count);
  m.friction_torque = scenario.friction_torque;

  const GearGeometry& g = scenario.gears;
  m.controlled_by_3s = g.alpha1() <= g.alpha2();
  m.control_ratio = g.r_is / g.min_alpha();
  const int n_control = m.controlled_by_3s ? m.n_3s : m.n_4s;
  m.control_interval = 2.0 * kPi / n_control;
  const DetentPeak peak =
      detent_peak(scenario.detent, detent_search_limit(n_control));
  m.control_peak = peak.theta;
  m.breakaway_torque =
      g.r_is * (peak.torque + scenario.friction_torque) / g.min_alpha();

  m.stroke_limit = scenario.stroke_limit_mm;
  if (scenario.contact_d_f_mm) {
    m.contact_d_f = *scenario.contact_d_f_mm;
  } else if (scenario.object) {
    m.contact_d_f =
        scenario.stroke_limit_mm - 0.5 * scenario.object->closing_width();
  }
  if (m.contact_d_f) {
    if (*m.contact_d_f < 0.0) {
      throw InvalidArgument("object is wider than the jaw opening");
    }
    if (*m.contact_d_f > m.stroke_limit) {
      throw InvalidArgument("object contact lies beyond the stroke limit");
    }
    if (scenario.initial_d_f_mm > *m.contact_d_f) {
      throw InvalidArgument("fingers start inside the object");
    }
  }
  m.step = deg_to_rad(scenario.step_deg);
  m.ramp = scenario.torque_ramp;

  if (scenario.initial_mode < 1 || scenario.initial_mode > m.n_gc) {
    throw InvalidArgument("initial mode outside 1..n_GC");
  }
  return m;
}

GripperState initial_state(const Scenario& scenario, const SimModel& model) {
  GripperState s;
  s.theta_m = scenario.initial_theta_m;
  s.mode_index = scenario.initial_mode;
  set_travel(s, scenario.initial_d_f_mm);
  s.stopper_theta_m =
      scenario.initial_theta_m + scenario.initial_d_f_mm / model.gears.r_is;
  if (scenario.initial_d_f_mm == 0.0) {
    s.phase = Phase::kAtStopper;
  } else if (model.contact_d_f &&
             scenario.initial_d_f_mm == *model.contact_d_f) {
    s.phase = Phase::kGrasping;
  } else {
    s.phase = Phase::kTranslatingClose;
  }
  return s;
}

bool command_done(const GripperState& s, const MotorCommand& cmd,
                  const SimModel&) {
  if (const auto* move = std::get_if<PositionMove>(&cmd)) {
    return std::abs(s.theta_m - move->target) <= kAngleTol;
  }
  const auto& ramp = std::get<TorqueRamp>(cmd);
  if (ramp.direction == Direction::kClose) {
    return s.phase == Phase::kGrasping && s.tau_m == ramp.target;
  }
  return on_stopper(s.phase) && s.tau_m == ramp.target;
}

StepResult step(const GripperState& state, const MotorCommand& cmd,
                const StepIncrements& inc, const SimModel& m) {
  StepResult out{state, {}};
  GripperState& s = out.state;
  auto& events = out.events;

  const auto* move = std::get_if<PositionMove>(&cmd);
  const auto* ramp = std::get_if<TorqueRamp>(&cmd);
  if (move && !std::isfinite(move->target)) {
    throw StepRejected("position target is not finite");
  }
  if (ramp && (!std::isfinite(ramp->target) || ramp->target < 0.0)) {
    throw StepRejected("torque target must be finite and >= 0");
  }

  Direction dir = Direction::kClose;
  double budget = inc.dtheta;
  if (move) {
    dir = move->target > s.theta_m ? Direction::kOpen : Direction::kClose;
    budget = std::min(inc.dtheta, std::abs(move->target - s.theta_m));
  } else {
    dir = ramp->direction;
  }

  if (dir == Direction::kClose) {
    if (s.phase == Phase::kRotating) {
      const double phi = m.control_ratio * s.switch_progress;
      if (phi > m.control_peak) {
        reengage(s, m, events, "snap-forward");
        return out;
      }
      throw StepRejected(
          "closing while a finger body is rotating short of its peak angle; "
          "the ratchet cannot reverse the switch");
    }
    if (s.phase == Phase::kGrasping) {
      if (move) {
        throw StepRejected("position move blocked by the grasped object");
      }
      s.tau_m = approach(s.tau_m, ramp->target, inc.dtau);
      return out;
    }
    translate_close(s, budget, m, events);
    return out;
  }

  // Opening.
  if (s.phase == Phase::kRotating) {
    if (ramp) {
      throw StepRejected("torque-mode opening cannot hold a rotating body");
    }
    rotate(s, budget, m, events);
    return out;
  }
  if (travel(s) > 0.0) {
    translate_open(s, budget, m, events);
    return out;
  }

  // On the stopper: torque builds until the detents let go.
  if (ramp) {
    const double next = approach(s.tau_m, ramp->target, inc.dtau);
    if (next > m.breakaway_torque) {
      std::ostringstream os;
      os << "opening torque " << next << " N*mm exceeds the breakaway torque "
         << m.breakaway_torque << " N*mm; switch modes with a position move";
      throw StepRejected(os.str());
    }
    s.tau_m = next;
    return out;
  }
  const double next = s.tau_m + inc.dtau;
  if (next <= m.breakaway_torque) {
    s.tau_m = next;
    return out;
  }
  s.phase = Phase::kRotating;
  s.switch_progress = 0.0;
  events.push_back({0, EventType::kBreakaway, ""});
  rotate(s, budget, m, events);
  return out;
}

StepResult step(const GripperState& state, const MotorCommand& cmd,
                const StepIncrements& inc, const Scenario& scenario) {
  return step(state, cmd, inc, SimModel::from(scenario));
}

std::size_t SimTrace::count(EventType type) const {
  return static_cast<std::size_t>(
      std::count_if(events.begin(), events.end(),
                    [type](const SimEvent& e) { return e.type == type; }));
}

namespace {

TraceRow make_row(std::size_t index, const GripperState& s,
                  const GearGeometry& g) {
  return TraceRow{index,
                  s.theta_m,
                  s.tau_m,
                  s.d_f3s,
                  s.d_f4s,
                  s.theta_fb3s,
                  s.theta_fb4s,
                  s.phase == Phase::kGrasping ? grasp_forces(s.tau_m, g).f_3s
                                              : 0.0,
                  s.phase,
                  s.mode_index};
}

}  // namespace

SimTrace run_scenario(const Scenario& scenario) {
  const SimModel model = SimModel::from(scenario);
  const StepIncrements inc{model.step, model.ramp};

  SimTrace trace;
  GripperState state = initial_state(scenario, model);
  std::size_t index = 0;
  trace.rows.push_back(make_row(index, state, model.gears));

  for (const MotorCommand& cmd : scenario.commands) {
    while (!command_done(state, cmd, model)) {
      ++index;
      if (index > scenario.max_steps) {
        throw SimError(index, "step budget exhausted before " + describe(cmd) +
                                  " completed");
      }
      StepResult result;
      try {
        result = step(state, cmd, inc, model);
      } catch (const StepRejected& e) {
        throw SimError(index, e.what());
      }
      state = result.state;
      for (SimEvent& e : result.events) {
        e.step = index;
        trace.events.push_back(std::move(e));
      }
      trace.rows.push_back(make_row(index, state, model.gears));
    }
  }
  trace.final_state = state;
  return trace;
}

std::vector<BodyTorqueSample> body_torque_trace(const SimTrace& trace,
                                                const GearGeometry& g) {
  std::vector<BodyTorqueSample> out;
  out.reserve(trace.rows.size());
  for (const TraceRow& row : trace.rows) {
    const double f_rc = chain_tension(row.tau_m, g);
    out.push_back({row.theta_m, body_torques(f_rc, g).tau_3s});
  }
  return out;
}

}  // namespace gripper
