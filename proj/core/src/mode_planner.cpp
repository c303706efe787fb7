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

#include "gripper/mode_planner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gripper/error.hpp"
#include "gripper/units.hpp"

namespace gripper {
namespace {

bool contains(const std::vector<SurfaceKind>& set, SurfaceKind kind) {
  return std::find(set.begin(), set.end(), kind) != set.end();
}

std::string join(const std::vector<SurfaceKind>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(set[i]);
  }
  return out + "}";
}

bool pair_fits(const ModePair& m, const std::vector<SurfaceKind>& left,
               const std::vector<SurfaceKind>& right) {
  return (contains(left, m.s3.kind) && contains(right, m.s4.kind)) ||
         (contains(right, m.s3.kind) && contains(left, m.s4.kind));
}

std::vector<SurfaceKind> first_only(const std::vector<SurfaceKind>& set) {
  if (set.empty()) return {};
  return {set.front()};
}

}  // namespace

void ObjectFaces::validate() const {
  if (!(thickness > 0.0) || !(height > 0.0)) {
    throw InvalidArgument("object thickness and height must be > 0");
  }
}

ObjectFaces faces_of(const ObjectSpec& obj) {
  obj.validate();
  return {obj.left_face(), obj.right_face(), obj.closing_width(), obj.height()};
}

std::vector<SurfaceKind> candidate_surfaces(FaceShape face, double /*thickness*/,
                                            double height,
                                            const PlannerThresholds& th) {
  std::vector<SurfaceKind> out;
  switch (face) {
    case FaceShape::kConvex:
      out = {SurfaceKind::kConcave, SurfaceKind::kFlat};
      break;
    case FaceShape::kConcave:
      out = {SurfaceKind::kConvex, SurfaceKind::kFlat};
      break;
    case FaceShape::kFlat:
      out = {SurfaceKind::kFlat};
      if (!th.flat_face_flat_only) out.push_back(SurfaceKind::kConvex);
      break;
    case FaceShape::kComplex:
      break;
  }
  if (height < th.small_object_height) {
    std::erase(out, SurfaceKind::kConvex);
  }
  return out;
}

std::vector<int> feasible_modes(const ObjectFaces& obj, const GcModeTable& table,
                                const PlannerThresholds& th) {
  const auto left = candidate_surfaces(obj.left_face, obj.thickness, obj.height, th);
  const auto right = candidate_surfaces(obj.right_face, obj.thickness, obj.height, th);
  for (int tier = 0; tier < 2; ++tier) {
    const auto l = tier == 0 ? first_only(left) : left;
    const auto r = tier == 0 ? first_only(right) : right;
    std::vector<int> modes;
    for (int k = 1; k <= table.size(); ++k) {
      if (pair_fits(table.at(k), l, r)) modes.push_back(k);
    }
    if (!modes.empty()) return modes;
  }
  return {};
}

PlanResult select_mode(const ObjectFaces& obj, int k_now,
                       const GcModeTable& table, const ControllerState& cs,
                       const PlannerThresholds& th) {
  obj.validate();
  cs.validate();
  if (table.size() != cs.n_gc) {
    throw InvalidArgument("mode table size does not match the controller's n_GC");
  }
  ControllerState from = cs;
  from.k_now = k_now;
  from.validate();

  const auto left = candidate_surfaces(obj.left_face, obj.thickness, obj.height, th);
  const auto right = candidate_surfaces(obj.right_face, obj.thickness, obj.height, th);

  PlanResult result;
  result.feasible = feasible_modes(obj, table, th);
  std::ostringstream why;
  why << "left " << to_string(obj.left_face) << " -> " << join(left) << "; right "
      << to_string(obj.right_face) << " -> " << join(right) << "; ";

  auto pick = [&](const std::vector<int>& modes) {
    int best = modes.front();
    double best_rot = switch_rotation(from, best);
    for (int k : modes) {
      const double rot = switch_rotation(from, k);
      if (rot < best_rot - 1e-12) {
        best = k;
        best_rot = rot;
      }
    }
    result.k_goal = best;
    result.rotation = best_rot;
  };

  if (!result.feasible.empty()) {
    why << "feasible";
    for (int k : result.feasible) why << ' ' << mode_label(k);
    pick(result.feasible);
  } else {
    result.fallback_used = true;
    std::vector<int> soft;
    std::vector<int> soft_matched;
    for (int k = 1; k <= table.size(); ++k) {
      const ModePair& m = table.at(k);
      if (m.s4.is_deformable() || m.s3.is_deformable()) {
        soft.push_back(k);
        const SurfaceKind other = m.s4.is_deformable() ? m.s3.kind : m.s4.kind;
        if (contains(left, other) || contains(right, other)) soft_matched.push_back(k);
      }
    }
    if (soft.empty()) {
      throw InvalidArgument("no feasible mode and no deformable surface to fall back on");
    }
    why << "no feasible mode, deformable fallback";
    pick(soft_matched.empty() ? soft : soft_matched);
  }
  why << "; chose " << mode_label(result.k_goal) << " at " << rad_to_deg(result.rotation)
      << " deg from " << mode_label(k_now);
  result.rationale = why.str();
  return result;
}

}  // namespace gripper
