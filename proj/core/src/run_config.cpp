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

#include "gripper/run_config.hpp"

#include <cmath>
#include <sstream>

#include "gripper/error.hpp"
#include "gripper/kv_text.hpp"
#include "gripper/object_file.hpp"
#include "gripper/trace_io.hpp"
#include "gripper/units.hpp"

namespace gripper {
namespace {

std::vector<SurfaceShape> parse_order(const KvEntry& e, double r_f) {
  std::vector<SurfaceShape> out;
  std::string_view rest = e.value;
  while (true) {
    const std::size_t comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
    try {
      out.push_back({parse_surface_kind(item), r_f});
    } catch (const InvalidArgument& err) {
      throw ParseError(e.line, err.what());
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_order(const std::vector<SurfaceShape>& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(order[i].kind);
  }
  return out;
}

bool parse_bool(const KvEntry& e) {
  if (e.value == "true" || e.value == "1") return true;
  if (e.value == "false" || e.value == "0") return false;
  throw ParseError(e.line, e.key + " must be true or false");
}

int parse_int(KvTable& kv, std::string_view section, std::string_view key,
              int fallback) {
  const KvEntry* e = kv.find(section, key);
  if (e == nullptr) return fallback;
  const double v = parse_number(e->value, e->line);
  if (v != std::floor(v) || std::abs(v) > 1e15) {
    throw ParseError(e->line, std::string(key) + " must be an integer");
  }
  return static_cast<int>(v);
}

std::size_t line_of(const KvTable& kv, std::string_view section,
                    std::string_view key) {
  for (const KvEntry& e : kv.entries()) {
    if (e.section == section && e.key == key) return e.line;
  }
  return 0;
}

}  // namespace

GcModeTable RunConfig::mode_table() const { return build_mode_table(surfaces); }

ControllerState RunConfig::controller() const {
  ControllerState cs;
  cs.theta_m_ini = 0.0;
  cs.k_now = sim.initial_mode;
  cs.n_gc = gc_mode_count(counts());
  cs.delta_theta_sw = switch_interval(gears, counts());
  return cs;
}

Scenario RunConfig::scenario() const {
  Scenario s;
  s.gears = gears;
  s.detent = detent;
  s.surfaces = surfaces;
  s.stroke_limit_mm = sim.stroke_mm;
  s.friction_torque = sim.friction_Nmm;
  s.step_deg = sim.step_deg;
  s.torque_ramp = sim.torque_ramp_Nmm;
  s.initial_mode = sim.initial_mode;
  s.max_steps = sim.max_steps;
  return s;
}

void RunConfig::validate() const {
  gears.validate();
  detent.validate();
  const SurfaceCount c = counts();
  c.validate();
  const GearingReport rep = validate_antipodal_gearing(gears, c);
  if (!rep.ok) throw InvalidArgument(rep.message);
  if (sim.initial_mode < 1 || sim.initial_mode > gc_mode_count(c)) {
    throw InvalidArgument("initial_mode must be in 1.." +
                          std::to_string(gc_mode_count(c)));
  }
  if (!(planner.small_object_height >= 0.0)) {
    throw InvalidArgument("small_object_height_mm must be >= 0");
  }
  if (!(grasp.face_width > 0.0) || !(grasp.max_opening > 0.0) ||
      !(grasp.thin_threshold >= 0.0) || !(grasp.grid.cell_mm > 0.0) ||
      !(grasp.grid.cell_deg > 0.0) || !(grasp.resolution > 0.0)) {
    throw InvalidArgument("grasp settings must be positive");
  }
  for (const auto* order : {&surfaces.finger_3s, &surfaces.finger_4s}) {
    for (const SurfaceShape& s : *order) {
      if (s.is_curved() && grasp.face_width > 2.0 * s.r_f * (1.0 + 1e-12)) {
        throw InvalidArgument("face_width_mm exceeds the arc diameter 2*r_f");
      }
    }
  }
  scenario().validate();
}

RunConfig parse_config(std::string_view text) {
  KvTable kv(parse_kv_text(text));
  RunConfig cfg;

  GearGeometry& g = cfg.gears;
  g.r_is = kv.require_number("gears", "r_IS");
  g.r_sp = kv.require_number("gears", "r_sp");
  g.r_g1 = kv.require_number("gears", "r_g1");
  g.r_g2 = kv.require_number("gears", "r_g2");
  g.r_g3s = kv.require_number("gears", "r_g3S");
  g.r_g4s = kv.require_number("gears", "r_g4S");

  if (auto v = kv.number("detent", "k_m")) cfg.detent.k_m = *v;
  if (auto v = kv.number("detent", "r_FB")) cfg.detent.r_fb = *v;
  if (auto v = kv.number("detent", "d_MG")) cfg.detent.d_mg = *v;

  const double r_f = kv.number("surfaces", "r_f").value_or(10.0);
  cfg.surfaces = SurfaceOrders::prototype(r_f);
  if (const KvEntry* e = kv.find("surfaces", "order_3s")) {
    cfg.surfaces.finger_3s = parse_order(*e, r_f);
  }
  if (const KvEntry* e = kv.find("surfaces", "order_4s")) {
    cfg.surfaces.finger_4s = parse_order(*e, r_f);
  }

  if (auto v = kv.number("planner", "small_object_height_mm")) {
    cfg.planner.small_object_height = *v;
  }
  if (const KvEntry* e = kv.find("planner", "flat_face_flat_only")) {
    cfg.planner.flat_face_flat_only = parse_bool(*e);
  }

  if (auto v = kv.number("grasp", "face_width_mm")) cfg.grasp.face_width = *v;
  if (auto v = kv.number("grasp", "resolution_mm")) cfg.grasp.resolution = *v;
  if (auto v = kv.number("grasp", "max_opening_mm")) cfg.grasp.max_opening = *v;
  if (auto v = kv.number("grasp", "thin_threshold_mm")) cfg.grasp.thin_threshold = *v;
  if (auto v = kv.number("grasp", "caging_cell_mm")) cfg.grasp.grid.cell_mm = *v;
  if (auto v = kv.number("grasp", "caging_cell_deg")) cfg.grasp.grid.cell_deg = *v;

  if (auto v = kv.number("sim", "stroke_mm")) cfg.sim.stroke_mm = *v;
  if (auto v = kv.number("sim", "friction_Nmm")) cfg.sim.friction_Nmm = *v;
  if (auto v = kv.number("sim", "step_deg")) cfg.sim.step_deg = *v;
  if (auto v = kv.number("sim", "torque_ramp_Nmm")) cfg.sim.torque_ramp_Nmm = *v;
  cfg.sim.initial_mode = parse_int(kv, "sim", "initial_mode", cfg.sim.initial_mode);
  const int max_steps = parse_int(kv, "sim", "max_steps", 10'000'000);
  if (max_steps <= 0) {
    throw ParseError(line_of(kv, "sim", "max_steps"), "max_steps must be > 0");
  }
  cfg.sim.max_steps = static_cast<std::size_t>(max_steps);

  kv.reject_unread();

  // Attribute validator failures to the most specific line available.
  const GearingReport rep = validate_antipodal_gearing(cfg.gears, cfg.counts());
  try {
    cfg.gears.validate();
    if (!rep.ok) throw InvalidArgument(rep.message);
  } catch (const InvalidArgument& e) {
    throw ParseError(line_of(kv, "gears", "r_g2"), e.what());
  }
  try {
    cfg.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(0, e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  try {
    return parse_config(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

std::string format_config(const RunConfig& cfg) {
  std::ostringstream os;
  const auto n = [](double v) { return format_number(v); };
  os << "[gears]\n"
     << "r_IS = " << n(cfg.gears.r_is) << "\n"
     << "r_sp = " << n(cfg.gears.r_sp) << "\n"
     << "r_g1 = " << n(cfg.gears.r_g1) << "\n"
     << "r_g3S = " << n(cfg.gears.r_g3s) << "\n"
     << "r_g2 = " << n(cfg.gears.r_g2) << "\n"
     << "r_g4S = " << n(cfg.gears.r_g4s) << "\n\n"
     << "[detent]\n"
     << "k_m = " << n(cfg.detent.k_m) << "\n"
     << "r_FB = " << n(cfg.detent.r_fb) << "\n"
     << "d_MG = " << n(cfg.detent.d_mg) << "\n\n"
     << "[surfaces]\n"
     << "r_f = "
     << n(cfg.surfaces.finger_3s.empty() ? 10.0 : cfg.surfaces.finger_3s.front().r_f)
     << "\n"
     << "order_3s = " << format_order(cfg.surfaces.finger_3s) << "\n"
     << "order_4s = " << format_order(cfg.surfaces.finger_4s) << "\n\n"
     << "[planner]\n"
     << "small_object_height_mm = " << n(cfg.planner.small_object_height) << "\n"
     << "flat_face_flat_only = " << (cfg.planner.flat_face_flat_only ? "true" : "false")
     << "\n\n"
     << "[grasp]\n"
     << "face_width_mm = " << n(cfg.grasp.face_width) << "\n"
     << "resolution_mm = " << n(cfg.grasp.resolution) << "\n"
     << "max_opening_mm = " << n(cfg.grasp.max_opening) << "\n"
     << "thin_threshold_mm = " << n(cfg.grasp.thin_threshold) << "\n"
     << "caging_cell_mm = " << n(cfg.grasp.grid.cell_mm) << "\n"
     << "caging_cell_deg = " << n(cfg.grasp.grid.cell_deg) << "\n\n"
     << "[sim]\n"
     << "stroke_mm = " << n(cfg.sim.stroke_mm) << "\n"
     << "friction_Nmm = " << n(cfg.sim.friction_Nmm) << "\n"
     << "step_deg = " << n(cfg.sim.step_deg) << "\n"
     << "torque_ramp_Nmm = " << n(cfg.sim.torque_ramp_Nmm) << "\n"
     << "initial_mode = " << cfg.sim.initial_mode << "\n"
     << "max_steps = " << cfg.sim.max_steps << "\n";
  return os.str();
}

}  // namespace gripper
