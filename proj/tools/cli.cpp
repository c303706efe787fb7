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

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "gripper/controller.hpp"
#include "gripper/error.hpp"
#include "gripper/gc_mode_table.hpp"
#include "gripper/grasp_analysis.hpp"
#include "gripper/mech_model.hpp"
#include "gripper/mode_planner.hpp"
#include "gripper/object_file.hpp"
#include "gripper/run_config.hpp"
#include "gripper/sim_engine.hpp"
#include "gripper/trace_io.hpp"
#include "gripper/units.hpp"

namespace gripper::cli {
namespace {

/// Twelve significant digits: hides last-bit noise in derived quantities.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general, 12);
  std::string s(buf, res.ptr);
  return s == "-0" ? "0" : s;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string pair_label(const ModePair& m) {
  return std::string(to_string(m.s3.kind)) + "/" + std::string(to_string(m.s4.kind));
}

/// Primary output sink: the --out file when given, otherwise `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot write '" + path + "'");
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *os_; }
  bool to_file() const { return !path_.empty(); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  body(f);
}

// Summary lines go to stdout when the CSV went to a file, else to stderr so
// stdout stays a clean CSV stream.
std::ostream& summary_stream(const Sink& sink, std::ostream& out,
                             std::ostream& err) {
  return sink.to_file() ? out : err;
}

void emit_trace(const SimTrace& trace, Sink& sink) {
  write_trace_csv(sink.stream(), trace);
  if (sink.to_file()) {
    write_file(sidecar_path(sink.path()),
               [&](std::ostream& os) { write_events_csv(os, trace); });
  }
}

void cmd_validate_gears(const RunConfig& cfg, Sink& sink) {
  const GearGeometry& g = cfg.gears;
  const SurfaceCount c = cfg.counts();
  const GearingReport rep = validate_antipodal_gearing(g, c);
  const DetentPeak peak = detent_peak(cfg.detent, c);
  std::ostream& os = sink.stream();
  os << "alpha1=" << fmt(g.alpha1()) << '\n'
     << "alpha2=" << fmt(g.alpha2()) << '\n'
     << "gear_ratio=" << fmt(rep.ratio) << '\n'
     << "expected_ratio=" << fmt(rep.expected_ratio) << '\n'
     << "antipodal=" << yes_no(rep.ok) << '\n'
     << "delta_theta_sw_deg=" << fmt(rad_to_deg(switch_interval(g, c))) << '\n'
     << "n_GC=" << gc_mode_count(c) << '\n'
     << "theta_peak_deg=" << fmt(rad_to_deg(peak.theta)) << '\n'
     << "tau_MG_max_Nmm=" << fmt(peak.torque) << '\n'
     << "breakaway_tau_m_Nmm=" << fmt(breakaway_motor_torque(g, cfg.detent, c))
     << '\n';
}

void cmd_modes(const RunConfig& cfg, Sink& sink, std::ostream& out) {
  const GcModeTable table = cfg.mode_table();
  const auto pairs = distinct_shape_pairs(table);
  auto write_table = [&](std::ostream& os) {
    os << "mode,label,surface_3S,surface_4S\n";
    for (int k = 1; k <= table.size(); ++k) {
      const ModePair& m = table.at(k);
      os << k << ',' << mode_label(k) << ',' << to_string(m.s3.kind) << ','
         << to_string(m.s4.kind) << '\n';
    }
  };
  auto write_pairs = [&](std::ostream& os) {
    os << "pair,surface_a,surface_b\n";
    int i = 0;
    for (const auto& [a, b] : pairs) {
      os << ++i << ',' << to_string(a) << ',' << to_string(b) << '\n';
    }
  };
  write_table(sink.stream());
  if (sink.to_file()) {
    write_file(sidecar_path(sink.path(), "_pairs"), write_pairs);
    out << "n_GC=" << table.size() << "\ndistinct_pairs=" << pairs.size() << '\n';
  } else {
    sink.stream() << '\n';
    write_pairs(sink.stream());
  }
}

void cmd_simulate_grasp(const RunConfig& cfg, double force, double gap,
                        const std::string& object_path, Sink& sink,
                        std::ostream& out, std::ostream& err) {
  Scenario s = cfg.scenario();
  if (!(gap >= 0.0)) throw InvalidArgument("--gap must be >= 0");
  if (!object_path.empty()) {
    const ObjectSpec obj = load_object_file(object_path);
    if (gap + 0.5 * obj.closing_width() > cfg.sim.stroke_mm) {
      throw InvalidArgument("object '" + obj.name + "' does not fit: gap " +
                            fmt(gap) + " mm + half width " +
                            fmt(0.5 * obj.closing_width()) +
                            " mm exceeds the stroke " + fmt(cfg.sim.stroke_mm) +
                            " mm");
    }
    s.object = obj;
  }
  s.contact_d_f_mm = gap;
  s.commands = {grasp_command(force, cfg.gears)};
  const SimTrace trace = run_scenario(s);
  emit_trace(trace, sink);
  const TraceRow& last = trace.rows.back();
  summary_stream(sink, out, err)
      << "f_g_N=" << fmt(last.f_g) << " tau_m_Nmm=" << fmt(last.tau_m)
      << " rows=" << trace.rows.size() << '\n';
}

void cmd_simulate_switch(const RunConfig& cfg, int from, int to,
                         std::optional<double> gap, double force, Sink& sink,
                         std::ostream& out, std::ostream& err) {
  Scenario s = cfg.scenario();
  ControllerState cs = cfg.controller();
  cs.k_now = from;
  cs.validate();
  s.initial_mode = from;
  Controller ctl(cfg.gears, cs);
  if (gap) {
    if (!(*gap >= 0.0)) throw InvalidArgument("--gap must be >= 0");
    s.contact_d_f_mm = *gap;
    s.commands.push_back(ctl.grasp(force));
  }
  const double rotation = switch_rotation(cs, to);
  for (const MotorCommand& cmd : ctl.switch_to(to)) s.commands.push_back(cmd);
  const SimTrace trace = run_scenario(s);
  emit_trace(trace, sink);
  summary_stream(sink, out, err)
      << "mode_changes=" << trace.count(EventType::kModeChanged)
      << " final_mode=" << trace.final_state.mode_index
      << " motor_travel_deg=" << fmt(rad_to_deg(rotation)) << '\n';
}

void cmd_plan(const RunConfig& cfg, const std::string& object_path, int current,
              Sink& sink) {
  const ObjectSpec obj = load_object_file(object_path);
  const GcModeTable table = cfg.mode_table();
  ControllerState cs = cfg.controller();
  cs.k_now = current;
  const PlanResult plan = select_mode(faces_of(obj), current, table, cs, cfg.planner);
  sink.stream() << "k_goal=" << plan.k_goal << '\n'
                << "label=" << mode_label(plan.k_goal) << '\n'
                << "surfaces=" << pair_label(table.at(plan.k_goal)) << '\n'
                << "rotation_deg=" << fmt(rad_to_deg(plan.rotation)) << '\n'
                << "fallback_used=" << yes_no(plan.fallback_used) << '\n'
                << "rationale=" << plan.rationale << '\n';
}

void cmd_classify(const RunConfig& cfg, const std::string& object_path, int mode,
                  const std::string& contacts_path, Sink& sink) {
  const ObjectSpec obj = load_object_file(object_path);
  const GcModeTable table = cfg.mode_table();
  const ModePair& pair = table.at(mode);
  const GraspReport r = classify_grasp(obj, pair, obj.mu, cfg.grasp);
  sink.stream() << "object=" << obj.name << " mode=" << mode
                << " surfaces=" << pair_label(pair) << " class=" << to_string(r.cls)
                << " contacts=" << r.contacts.size()
                << " form_closure=" << yes_no(r.form.closed)
                << " force_closure=" << yes_no(r.force.closed) << " caged="
                << (r.caging ? yes_no(r.caging->caged) : std::string("n/a"))
                << " fingers_collide=" << yes_no(r.fingers_collide)
                << " posture_uncertain=" << yes_no(r.posture_uncertain);
  if (!r.note.empty()) sink.stream() << " note=\"" << r.note << '"';
  sink.stream() << '\n';
  if (!contacts_path.empty()) {
    write_file(contacts_path, [&](std::ostream& os) {
      os << "finger,x_mm,y_mm,nx,ny\n";
      for (const Contact& c : r.contacts) {
        os << (c.finger == FingerSide::kLeft ? "3S" : "4S") << ','
           << format_number(c.point.x) << ',' << format_number(c.point.y) << ','
           << format_number(c.normal.x) << ',' << format_number(c.normal.y) << '\n';
      }
    });
  }
}

struct SweepParam {
  std::function<void(RunConfig&, double)> apply;
};

const std::map<std::string, SweepParam>& sweep_params() {
  static const std::map<std::string, SweepParam> params = {
      {"k_m", {[](RunConfig& c, double v) { c.detent.k_m = v; }}},
      {"r_FB", {[](RunConfig& c, double v) { c.detent.r_fb = v; }}},
      {"d_MG", {[](RunConfig& c, double v) { c.detent.d_mg = v; }}},
      {"r_IS", {[](RunConfig& c, double v) { c.gears.r_is = v; }}},
      {"r_sp", {[](RunConfig& c, double v) { c.gears.r_sp = v; }}},
      {"r_g1", {[](RunConfig& c, double v) { c.gears.r_g1 = v; }}},
      {"r_g2", {[](RunConfig& c, double v) { c.gears.r_g2 = v; }}},
      {"r_g3S", {[](RunConfig& c, double v) { c.gears.r_g3s = v; }}},
      {"r_g4S", {[](RunConfig& c, double v) { c.gears.r_g4s = v; }}},
  };
  return params;
}

std::vector<double> parse_range(const std::string& text) {
  const std::size_t c1 = text.find(':');
  const std::size_t c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw InvalidArgument("--range must be start:stop:step, got '" + text + "'");
  }
  const double a = parse_number(text.substr(0, c1));
  const double b = parse_number(text.substr(c1 + 1, c2 - c1 - 1));
  const double st = parse_number(text.substr(c2 + 1));
  if (!(st > 0.0) || !(b >= a)) {
    throw InvalidArgument("--range needs step > 0 and stop >= start");
  }
  const double n = std::floor((b - a) / st + 1e-9) + 1.0;
  if (n > 1e6) throw InvalidArgument("--range has more than 1e6 points");
  std::vector<double> grid;
  for (int i = 0; i < static_cast<int>(n); ++i) grid.push_back(a + i * st);
  return grid;
}

void cmd_sweep(const RunConfig& cfg, const std::string& param,
               const std::string& range, const std::string& metric, Sink& sink) {
  const SweepParam& p = sweep_params().at(param);
  const std::vector<double> grid = parse_range(range);
  std::ostream& os = sink.stream();
  std::vector<std::string> columns;
  if (metric == "peak-detent") {
    columns = {"theta_peak_deg", "tau_MG_max_Nmm"};
  } else if (metric == "breakaway") {
    columns = {"breakaway_tau_m_Nmm"};
  } else {
    columns = {"delta_theta_sw_deg"};
  }
  os << "index," << param;
  for (const auto& c : columns) os << ',' << c;
  os << ",status\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    RunConfig point = cfg;
    p.apply(point, grid[i]);
    std::vector<double> values;
    std::string status = "ok";
    try {
      point.gears.validate();
      point.detent.validate();
      const SurfaceCount c = point.counts();
      if (metric == "peak-detent") {
        const DetentPeak peak = detent_peak(point.detent, c);
        values = {rad_to_deg(peak.theta), peak.torque};
      } else if (metric == "breakaway") {
        values = {breakaway_motor_torque(point.gears, point.detent, c)};
      } else {
        values = {rad_to_deg(switch_interval(point.gears, c))};
      }
    } catch (const Error& e) {
      status = e.what();
      for (char& ch : status) {
        if (ch == ',' || ch == '\n') ch = ';';
      }
    }
    os << i << ',' << format_number(grid[i]);
    for (std::size_t k = 0; k < columns.size(); ++k) {
      os << ',';
      if (k < values.size()) os << format_number(values[k]);
    }
    os << ',' << status << '\n';
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Multi-surface gripper design and simulation toolkit", "gripper"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::string out_path;
  app.add_option("--config", config_path, "Run configuration file");
  app.add_option("--out", out_path, "Write the primary CSV/report here");

  app.add_subcommand("validate-gears", "Check gear ratios, print switch interval and mode count");
  app.add_subcommand("modes", "Print the GC mode table and its distinct surface pairs");

  auto* simulate = app.add_subcommand("simulate", "Run a quasi-static scenario");
  simulate->require_subcommand(1);
  simulate->fallthrough();
  double force = 0.0;
  double gap = 0.0;
  std::string sim_object;
  auto* sim_grasp = simulate->add_subcommand("grasp", "Close on an object with a target force");
  sim_grasp->add_option("--force", force, "Grasp force [N]")->required();
  sim_grasp->add_option("--gap", gap, "Finger travel to object contact [mm]")->required();
  sim_grasp->add_option("--object", sim_object, "Object description file");

  int from = 1;
  int to = 1;
  std::optional<double> switch_gap;
  double switch_force = 10.0;
  auto* sim_switch = simulate->add_subcommand("switch", "Switch GC mode from the open state");
  sim_switch->add_option("--from", from, "Current mode")->required();
  sim_switch->add_option("--to", to, "Goal mode")->required();
  sim_switch->add_option("--gap", switch_gap,
                         "Start by grasping an object this far away [mm]");
  sim_switch->add_option("--force", switch_force, "Grasp force with --gap [N]");

  std::string object_path;
  int current_mode = 1;
  auto* plan = app.add_subcommand("plan", "Choose a GC mode for an object");
  plan->add_option("--object", object_path, "Object description file")->required();
  plan->add_option("--current-mode", current_mode, "Mode the gripper is in")->required();

  int mode = 1;
  std::string contacts_path;
  auto* classify = app.add_subcommand("classify", "Classify the grasp of an object in one mode");
  classify->add_option("--object", object_path, "Object description file")->required();
  classify->add_option("--mode", mode, "GC mode index")->required();
  classify->add_option("--contacts", contacts_path, "Write the contact set as CSV");

  std::string param;
  std::string range;
  std::string metric;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a metric over a parameter grid");
  std::vector<std::string> param_names;
  for (const auto& [name, _] : sweep_params()) param_names.push_back(name);
  sweep->add_option("--param", param, "Parameter to vary")
      ->required()
      ->check(CLI::IsMember(param_names));
  sweep->add_option("--range", range, "start:stop:step")->required();
  sweep->add_option("--metric", metric, "Metric to evaluate")
      ->required()
      ->check(CLI::IsMember({"peak-detent", "breakaway", "switch-interval"}));

  std::vector<const char*> cargv;
  for (const std::string& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (const auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "error: " << msg << '\n';
    return 2;
  }

  try {
    const RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
    cfg.validate();
    Sink sink(out_path, out);
    if (app.got_subcommand("validate-gears")) {
      cmd_validate_gears(cfg, sink);
    } else if (app.got_subcommand("modes")) {
      cmd_modes(cfg, sink, out);
    } else if (sim_grasp->parsed()) {
      cmd_simulate_grasp(cfg, force, gap, sim_object, sink, out, err);
    } else if (sim_switch->parsed()) {
      cmd_simulate_switch(cfg, from, to, switch_gap, switch_force, sink, out, err);
    } else if (plan->parsed()) {
      cmd_plan(cfg, object_path, current_mode, sink);
    } else if (classify->parsed()) {
      cmd_classify(cfg, object_path, mode, contacts_path, sink);
    } else if (sweep->parsed()) {
      cmd_sweep(cfg, param, range, metric, sink);
    }
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (char& ch : msg) {
      if (ch == '\n') ch = ' ';
    }
    err << "error: " << msg << '\n';
    return 1;
  }
  return 0;
}

}  // namespace gripper::cli
