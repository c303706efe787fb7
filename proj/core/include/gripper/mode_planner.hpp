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

// Rule-based selection of the GC mode that best suits an object.

#include <string>
#include <vector>

#include "gripper/controller.hpp"
#include "gripper/gc_mode_table.hpp"
#include "gripper/object.hpp"

namespace gripper {

struct ObjectFaces {
  FaceShape left_face = FaceShape::kFlat;
  FaceShape right_face = FaceShape::kFlat;
  double thickness = 0.0;  ///< extent along the closing axis [mm]
  double height = 0.0;     ///< extent along the finger face [mm]

  void validate() const;
};

ObjectFaces faces_of(const ObjectSpec& obj);

struct PlannerThresholds {
  /// Convex fingers are dropped for objects lower than this [mm].
  double small_object_height = 10.0;
  /// When false, a convex finger may also point-contact a flat face.
  bool flat_face_flat_only = true;
};

/// Finger surfaces suited to one object face, most preferred first.
std::vector<SurfaceKind> candidate_surfaces(FaceShape face, double thickness,
                                            double height,
                                            const PlannerThresholds& th = {});

struct PlanResult {
  int k_goal = 1;
  std::string rationale;
  bool fallback_used = false;
  double rotation = 0.0;      ///< motor rotation from k_now [rad]
  std::vector<int> feasible;  ///< modes that passed the surface filter
};

/// Modes whose surface pair suits the object. Pairs built from each face's
/// first choice win; otherwise any candidate pair qualifies. Both
/// face-to-finger assignments are considered.
std::vector<int> feasible_modes(const ObjectFaces& obj, const GcModeTable& table,
                                const PlannerThresholds& th = {});

/// Picks the feasible mode reached with the least motor rotation, falling
/// back to the nearest mode that shows a deformable surface.
PlanResult select_mode(const ObjectFaces& obj, int k_now,
                       const GcModeTable& table, const ControllerState& cs,
                       const PlannerThresholds& th = {});

}  // namespace gripper
