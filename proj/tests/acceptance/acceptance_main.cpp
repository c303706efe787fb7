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

// Acceptance runner: one PASS/FAIL line per criterion. With arguments, runs
// only the listed criteria. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gripper/controller.hpp"
#include "gripper/gc_mode_table.hpp"
#include "gripper/grasp_analysis.hpp"
#include "gripper/mech_model.hpp"
#include "gripper/mode_planner.hpp"
#include "gripper/object_file.hpp"
#include "gripper/sim_engine.hpp"
#include "gripper/trace_io.hpp"
#include "gripper/units.hpp"
#include "oracles.hpp"
#include "sim_scenarios.hpp"

#ifdef GRIPPER_HAVE_CLI
#include "cli.hpp"
#endif

namespace {

using namespace gripper;

// Pinned tolerances and time limits.
constexpr double kSwitchDegTol = 1e-6;
constexpr double kTravelDegTol = 1e-9;
constexpr double kPeakLoDeg = 2.5;
constexpr double kPeakHiDeg = 3.0;
constexpr double kPeakOracleDeg = 0.01;
constexpr double kAngleRelTol = 1e-9;
constexpr double kForceTol = 1e-9;
constexpr double kScalingRelTol = 1e-12;
constexpr int kPropertyScenarios = 1000;
constexpr int kControllerPairs = 200;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects failures; the first few are reported.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) {
      if (!detail_.empty()) detail_ += "; ";
      detail_ += what;
    }
  }
  void note(const std::string& what) { notes_ += (notes_.empty() ? "" : ", ") + what; }
  Outcome outcome() const {
    if (failures_ == 0) return {true, notes_};
    std::string d = detail_;
    if (failures_ > 3) d += "; +" + std::to_string(failures_ - 3) + " more";
    return {false, d};
  }

 private:
  int failures_ = 0;
  std::string detail_;
  std::string notes_;
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

ObjectSpec fixture(const std::string& name) {
  return load_object_file(std::string(GRIPPER_FIXTURES_DIR) + "/objects/" + name + ".obj");
}

const char* const kFixtures[] = {"large_cylinder", "small_cylinder", "box", "thin_plate",
                                 "complex"};

ControllerState prototype_controller(int k_now = 1) {
  ControllerState cs;
  cs.k_now = k_now;
  cs.n_gc = 12;
  cs.delta_theta_sw = switch_interval(GearGeometry::prototype(), {4, 3});
  return cs;
}

/// Motor travel from breakaway onset to the first mode change of a
/// single-interval switch, in degrees.
std::optional<double> simulated_switch_travel(double k_m) {
  Scenario s;
  s.detent.k_m = k_m;
  s.friction_torque = 0.0;
  s.commands = {PositionMove{deg_to_rad(108.0)}};
  const SimTrace t = run_scenario(s);
  std::optional<std::size_t> onset;
  std::optional<std::size_t> changed;
  for (const SimEvent& e : t.events) {
    if (e.type == EventType::kBreakaway && !onset) onset = e.step;
    if (e.type == EventType::kModeChanged && !changed) changed = e.step;
  }
  if (!onset || *onset == 0 || !changed || t.rows[*changed].mode_index != 2) {
    return std::nullopt;
  }
  // The event sits on the first rotating row; onset is the pose before it.
  return rad_to_deg(t.rows[*changed].theta_m - t.rows[*onset - 1].theta_m);
}

Outcome switch_interval_criterion() {
  Check c;
  const double sw = rad_to_deg(switch_interval(GearGeometry::prototype(), {4, 3}));
  c.expect(std::abs(sw - 108.0) <= kSwitchDegTol, "switch_interval " + num(sw));
  const auto travel = simulated_switch_travel(kCalibratedMagnetCoefficient);
  c.expect(travel.has_value(), "no breakaway-to-mode-change span in trace");
  if (travel) {
    c.expect(std::abs(*travel - 108.0) <= kTravelDegTol, "travel to mode change " + num(*travel));
    c.note("travel=" + num(*travel) + " deg");
  }
  c.note("sw=" + num(sw) + " deg");
  return c.outcome();
}

Outcome detent_peak_criterion() {
  Check c;
  const MagnetDetent m = MagnetDetent::prototype();
  const DetentPeak peak = detent_peak(m, SurfaceCount{4, 3});
  const double deg = rad_to_deg(peak.theta);
  c.expect(deg >= kPeakLoDeg && deg <= kPeakHiDeg, "theta_peak " + num(deg));
  const oracle::Peak ref = oracle::brute_force_peak(m.k_m, m.r_fb, m.d_mg, 45.0);
  c.expect(std::abs(deg - ref.theta_deg) <= kPeakOracleDeg,
           "oracle " + num(ref.theta_deg) + " vs " + num(deg));
  c.note("theta_peak=" + num(deg) + " deg, oracle=" + num(ref.theta_deg) + " deg");
  return c.outcome();
}

Outcome coupled_angles_criterion() {
  Check c;
  const AnglePair a = finger_body_angles(deg_to_rad(108.0), GearGeometry::prototype());
  const double a3 = rad_to_deg(a.theta_3s);
  const double a4 = rad_to_deg(a.theta_4s);
  c.expect(std::abs(a3 - 120.0) <= kAngleRelTol * 120.0, "3S " + num(a3));
  c.expect(std::abs(a4 - 90.0) <= kAngleRelTol * 90.0, "4S " + num(a4));
  c.note("(" + num(a3) + ", " + num(a4) + ") deg");
  return c.outcome();
}

Outcome mode_table_criterion() {
  Check c;
  c.expect(gc_mode_count({4, 3}) == 12, "n_GC");
  const GcModeTable table = build_mode_table(SurfaceOrders::prototype());
  c.expect(table.size() == 12, "table size");
  const auto pairs = distinct_shape_pairs(table);
  c.expect(pairs.size() == 9, "distinct pairs " + std::to_string(pairs.size()));
  int checked = 0;
  for (int n_a = 1; n_a <= 12; ++n_a) {
    for (int n_b = 1; n_b <= n_a; ++n_b) {
      const int got = gc_mode_count({n_a, n_b});
      const int want = oracle::sequence_period(n_a, n_b);
      c.expect(got == want, "n_GC(" + std::to_string(n_a) + "," + std::to_string(n_b) + ")");
      ++checked;
    }
  }
  c.note("n_GC=12, pairs=" + std::to_string(pairs.size()) + ", " + std::to_string(checked) +
         " count pairs vs oracle");
  return c.outcome();
}

Outcome statics_criterion() {
  Check c;
  const GearGeometry g = GearGeometry::prototype();
  Scenario s;
  s.detent.k_m = kCalibratedMagnetCoefficient;
  s.contact_d_f_mm = 5.0;
  s.commands = {TorqueRamp{800.0, Direction::kClose}};
  const SimTrace t = run_scenario(s);
  const TraceRow& last = t.rows.back();
  c.expect(last.tau_m == 800.0, "final torque " + num(last.tau_m));
  c.expect(std::abs(last.f_g - 40.0) <= kForceTol, "f_g " + num(last.f_g));
  int overlay = 0;
  for (const TraceRow& r : t.rows) {
    if (r.phase != Phase::kGrasping) continue;
    ++overlay;
    c.expect(r.f_g == chain_tension(r.tau_m, g), "overlay at step " + std::to_string(r.step));
  }
  c.expect(overlay > 10, "too few grasp rows");
  c.note("f_g=" + num(last.f_g) + " N, " + std::to_string(overlay) + " overlay rows");
  return c.outcome();
}

Outcome state_machine_criterion() {
  Check c;
  std::size_t rows = 0;
  for (int i = 0; i < kPropertyScenarios; ++i) {
    const unsigned seed = 1000u + static_cast<unsigned>(i);
    const sim_props::Generated gen = sim_props::generate(seed);
    const SimTrace t = run_scenario(gen.scenario);
    rows += t.rows.size();
    const auto violation = sim_props::check_invariants(gen.scenario, t, gen.expected_final_mode);
    c.expect(!violation, "seed " + std::to_string(seed) + ": " + violation.value_or(""));
    if (i % 10 == 0) {
      c.expect(run_scenario(gen.scenario) == t, "replay differs, seed " + std::to_string(seed));
    }
  }
  c.note(std::to_string(kPropertyScenarios) + " scenarios, " + std::to_string(rows) + " rows");
  return c.outcome();
}

Outcome controller_criterion() {
  Check c;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> mode(1, 12);
  for (int i = 0; i < kControllerPairs; ++i) {
    const int from = mode(rng);
    const int goal = mode(rng);
    const ControllerState cs = prototype_controller(from);
    const SwitchPlan plan = switch_command(cs, goal);
    const double expected = oracle::forward_steps(from, goal, 12) * 108.0;
    Scenario s;
    s.detent.k_m = kCalibratedMagnetCoefficient;
    s.initial_mode = from;
    s.step_deg = 0.5;
    s.commands = {plan.command};
    const SimTrace t = run_scenario(s);
    const std::string tag = std::to_string(from) + "->" + std::to_string(goal);
    c.expect(t.final_state.mode_index == goal, tag + " ended at " +
                                                   std::to_string(t.final_state.mode_index));
    c.expect(std::abs(rad_to_deg(plan.rotation) - expected) <= kTravelDegTol, tag + " rotation");
    c.expect(std::abs(rad_to_deg(t.final_state.theta_m) - expected) <= kTravelDegTol,
             tag + " motor travel");
  }
  Controller ctl(GearGeometry::prototype(), prototype_controller(1));
  std::vector<MotorCommand> lap;
  for (int k = 2; k <= 12; ++k) {
    for (const auto& cmd : ctl.switch_to(k)) lap.push_back(cmd);
  }
  for (const auto& cmd : ctl.switch_to(1)) lap.push_back(cmd);
  Scenario s;
  s.detent.k_m = kCalibratedMagnetCoefficient;
  s.step_deg = 0.5;
  s.commands = lap;
  const SimTrace t = run_scenario(s);
  const double total = rad_to_deg(t.final_state.theta_m);
  c.expect(std::abs(total - 1296.0) <= kTravelDegTol, "lap travel " + num(total));
  c.expect(t.final_state.mode_index == 1 && t.final_state.switches == 12, "lap end state");
  c.note(std::to_string(kControllerPairs) + " pairs, lap=" + num(total) + " deg");
  return c.outcome();
}

/// Wrench points with unit force directions and moments divided by the
/// largest lever arm about the object centre.
std::vector<oracle::Vec> oracle_wrenches(const ContactSet& cs, double mu, bool friction,
                                         bool forces_only) {
  double lever = 0.0;
  for (const Contact& ct : cs) lever = std::max(lever, std::hypot(ct.point.x, ct.point.y));
  if (lever == 0.0) lever = 1.0;
  std::vector<oracle::Vec> out;
  for (const Contact& ct : cs) {
    const double len = std::hypot(ct.normal.x, ct.normal.y);
    const double nx = ct.normal.x / len;
    const double ny = ct.normal.y / len;
    std::vector<std::array<double, 2>> forces;
    if (friction) {
      forces = {{nx - mu * ny, ny + mu * nx}, {nx + mu * ny, ny - mu * nx}};
    } else {
      forces = {{nx, ny}};
    }
    for (auto f : forces) {
      const double fl = std::hypot(f[0], f[1]);
      f = {f[0] / fl, f[1] / fl};
      const double tz = (ct.point.x * f[1] - ct.point.y * f[0]) / lever;
      out.push_back({f[0], f[1], forces_only ? 0.0 : tz});
    }
  }
  return out;
}

enum class Verdict { kAgree, kDisagree, kInconclusive };

// The library asks for a ball of radius `margin` inside the wrench hull; the
// oracle brackets that with cross-polytopes of radius margin and
// margin * sqrt(dim).
Verdict compare_closure(bool closed, const std::vector<oracle::Vec>& w, int dim,
                        double margin) {
  const bool inner = oracle::hull_contains_cross(w, dim, margin);
  const bool outer = oracle::hull_contains_cross(w, dim, margin * std::sqrt(dim));
  if (closed) return inner ? Verdict::kAgree : Verdict::kDisagree;
  if (outer) return Verdict::kDisagree;
  return inner ? Verdict::kInconclusive : Verdict::kAgree;
}

Outcome classification_criterion() {
  Check c;
  const GcModeTable table = build_mode_table(SurfaceOrders::prototype());
  auto classify = [&](const std::string& name, int k) {
    const ObjectSpec obj = fixture(name);
    return classify_grasp(obj, table.at(k), obj.mu);
  };
  for (const char* name : kFixtures) {
    const GraspReport r = classify(name, 1);
    c.expect(r.cls == GraspClass::kForceClosure,
             std::string("flat-flat ") + name + " " + std::string(to_string(r.cls)));
  }
  const GraspReport large = classify("large_cylinder", 3);
  c.expect(large.cls == GraspClass::kFormClosure && large.contacts.size() == 4,
           "large cylinder concave-concave " + std::string(to_string(large.cls)) + " with " +
               std::to_string(large.contacts.size()) + " contacts");
  const GraspReport small = classify("small_cylinder", 3);
  c.expect(small.cls == GraspClass::kCaging,
           "small cylinder concave-concave " + std::string(to_string(small.cls)));
  c.expect(small.caging && small.caging->caged, "small cylinder grid search");
  const GraspReport plate = classify("thin_plate", 4);
  c.expect(plate.cls == GraspClass::kFail, "plate deformable " + std::string(to_string(plate.cls)));

  int cross_checks = 0;
  int inconclusive = 0;
  int margin_sensitive = 0;
  const double margin = GraspSetup{}.closure_margin;
  for (const char* name : kFixtures) {
    const ObjectSpec obj = fixture(name);
    const bool forces_only = wrench_space_for(obj) == WrenchSpace::kForceOnly;
    const int dim = forces_only ? 2 : 3;
    for (int k = 1; k <= table.size(); ++k) {
      const GraspReport r = classify_grasp(obj, table.at(k), obj.mu);
      const std::string tag = std::string(name) + " GC" + std::to_string(k);
      const auto ww = oracle_wrenches(r.contacts, 0.0, false, forces_only);
      const auto fw = oracle_wrenches(r.contacts, obj.mu, true, forces_only);
      for (const auto& [closed, w, what] :
           {std::tuple{r.form.closed, ww, "form"}, std::tuple{r.force.closed, fw, "force"}}) {
        const Verdict v = compare_closure(closed, w, dim, margin);
        c.expect(v != Verdict::kDisagree, tag + " " + what + " closure vs oracle");
        inconclusive += v == Verdict::kInconclusive;
        margin_sensitive += closed != oracle::positively_spans(w, dim);
        if (closed) {
          c.expect(oracle::every_direction_covered(w, dim, static_cast<unsigned>(k), 2000),
                   tag + " " + what + " sampled directions");
        }
        ++cross_checks;
      }
    }
  }
  c.note(std::to_string(cross_checks) + " closure cross-checks, " +
         std::to_string(inconclusive) + " inside the margin band, " +
         std::to_string(margin_sensitive) + " closed only without margin");
  return c.outcome();
}

Outcome planner_criterion() {
  Check c;
  const GcModeTable table = build_mode_table(SurfaceOrders::prototype());
  const ControllerState cs = prototype_controller();
  const PlanResult plate = select_mode(faces_of(fixture("thin_plate")), 1, table, cs);
  c.expect(plate.k_goal == 1, "thin plate -> GC" + std::to_string(plate.k_goal));
  ObjectSpec tall{Circle{15.0}, 0.5, "cylinder"};
  c.expect(tall.height() == 30.0, "cylinder height");
  const PlanResult cyl = select_mode(faces_of(tall), 1, table, cs);
  c.expect(table.at(cyl.k_goal).s3.kind == SurfaceKind::kConcave &&
               table.at(cyl.k_goal).s4.kind == SurfaceKind::kConcave,
           "cylinder -> GC" + std::to_string(cyl.k_goal));
  const PlanResult cx = select_mode(faces_of(fixture("complex")), 1, table, cs);
  c.expect(cx.fallback_used, "complex fallback flag");
  c.expect(table.at(cx.k_goal).s4.is_deformable() || table.at(cx.k_goal).s3.is_deformable(),
           "complex -> deformable mode");

  int checked = 0;
  for (const char* name : kFixtures) {
    const ObjectFaces faces = faces_of(fixture(name));
    for (int k_now = 1; k_now <= 12; ++k_now) {
      const PlanResult p = select_mode(faces, k_now, table, cs);
      std::vector<int> pool = p.feasible;
      if (pool.empty()) {
        for (int k = 1; k <= 12; ++k) {
          if (table.at(k).s4.is_deformable() || table.at(k).s3.is_deformable()) pool.push_back(k);
        }
      }
      ControllerState from = cs;
      from.k_now = k_now;
      bool member = false;
      for (int k : pool) {
        member |= k == p.k_goal;
        c.expect(p.rotation <= switch_rotation(from, k) + 1e-12,
                 std::string(name) + " from GC" + std::to_string(k_now) + " not minimal");
      }
      c.expect(member, std::string(name) + " goal outside candidate pool");
      ++checked;
    }
  }
  c.note("cylinder->GC" + std::to_string(cyl.k_goal) + ", complex->GC" +
         std::to_string(cx.k_goal) + ", " + std::to_string(checked) + " start modes");
  return c.outcome();
}

Outcome breakaway_scaling_criterion() {
  Check c;
  const GearGeometry g = GearGeometry::prototype();
  const SurfaceCount n{4, 3};
  MagnetDetent m = MagnetDetent::prototype();
  m.k_m = kCalibratedMagnetCoefficient;
  MagnetDetent m2 = m;
  m2.k_m *= 2.0;
  const double b1 = breakaway_motor_torque(g, m, n);
  const double b2 = breakaway_motor_torque(g, m2, n);
  c.expect(std::abs(b2 - 2.0 * b1) <= kScalingRelTol * b2, "breakaway " + num(b1) + " -> " + num(b2));
  c.expect(detent_peak(m, n).theta == detent_peak(m2, n).theta, "theta_peak moved");
  const auto t1 = simulated_switch_travel(m.k_m);
  const auto t2 = simulated_switch_travel(m2.k_m);
  c.expect(t1 && t2 && *t1 == *t2, "simulated switch travel changed with k_m");
#ifdef GRIPPER_HAVE_CLI
  auto sweep = [&](const std::string& metric) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = cli::dispatch({"gripper", "sweep", "--param", "k_m", "--range",
                                      "10:100:10", "--metric", metric},
                                     out, err);
    c.expect(status == 0, "sweep " + metric + ": " + err.str());
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(out.str());
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) rows.push_back(split_csv_line(line));
    return rows;
  };
  const auto brk = sweep("breakaway");
  const auto pk = sweep("peak-detent");
  c.expect(brk.size() == 10 && pk.size() == 10, "sweep row count");
  if (brk.size() == 10 && pk.size() == 10) {
    const double unit = parse_number(brk[0][2]) / parse_number(brk[0][1]);
    for (std::size_t i = 0; i < 10; ++i) {
      const double k = parse_number(brk[i][1]);
      c.expect(std::abs(parse_number(brk[i][2]) - unit * k) <= kScalingRelTol * unit * k,
               "breakaway not linear at k_m=" + brk[i][1]);
      c.expect(pk[i][2] == pk[0][2], "peak angle moved at k_m=" + pk[i][1]);
      c.expect(brk[i][3] == "ok", "row status " + brk[i][3]);
    }
    c.note("sweep 10 points, breakaway/k_m=" + num(unit));
  }
#else
  c.expect(false, "built without the CLI; sweep check unavailable");
#endif
  return c.outcome();
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  ///< 0 = no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "switch interval", 1.0, switch_interval_criterion},
      {2, "detent peak", 1.0, detent_peak_criterion},
      {3, "coupled angles", 0.0, coupled_angles_criterion},
      {4, "mode count and table", 1.0, mode_table_criterion},
      {5, "statics linearity", 0.0, statics_criterion},
      {6, "state-machine invariants", 30.0, state_machine_criterion},
      {7, "controller laps", 0.0, controller_criterion},
      {8, "grasp classification", 120.0, classification_criterion},
      {9, "planner fixtures", 1.0, planner_criterion},
      {10, "breakaway scaling", 0.0, breakaway_scaling_criterion},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failed = 0;
  for (const Criterion& cr : all) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), cr.id) == selected.end()) {
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.limit_s > 0.0 && secs > cr.limit_s) {
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit ") +
                  num(cr.limit_s) + " s";
    }
    std::printf("criterion %d: %s %s (%.3f s)%s%s\n", cr.id, o.pass ? "PASS" : "FAIL", cr.name,
                secs, o.detail.empty() ? "" : " ", o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
