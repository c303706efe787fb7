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

// Planar grasp analysis between two opposed finger surfaces.
//
// World frame: x is the closing axis, y runs along the finger faces. The
// object rests centred at the origin. The left (3S) finger sits at -x with
// its face looking toward +x; the right (4S) finger mirrors it.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gripper/gc_mode_table.hpp"
#include "gripper/geometry2d.hpp"
#include "gripper/object.hpp"
#include "gripper/wrench_closure.hpp"

namespace gripper {

/// Face contour in the finger frame: x runs along the face, y is the
/// protrusion toward the object. Endpoints sit at y = 0.
struct SurfaceProfile {
  SurfaceShape shape;
  double width = 0.0;
  std::vector<geom::Vec2> polyline;

  bool deformable() const { return shape.is_deformable(); }
  /// Largest |protrusion| of the contour.
  double sagitta() const;
};

/// Throws GeometryError when an arc face is wider than its diameter and
/// InvalidArgument for non-positive width or resolution.
SurfaceProfile surface_profile(const SurfaceShape& shape, double width,
                               double resolution);

/// Baseline separation at which two opposed faces first touch each other.
double face_touch_gap(const SurfaceProfile& left, const SurfaceProfile& right);

struct CagingGrid {
  double cell_mm = 0.5;
  double cell_deg = 5.0;
};

struct GraspSetup {
  double face_width = 20.0;      ///< finger face span [mm]
  double resolution = 0.25;      ///< arc sampling step [mm]
  double max_opening = 60.0;     ///< widest jaw opening [mm]
  double thin_threshold = 3.0;   ///< objects thinner than this are "thin"
  double contact_tol = 1e-6;     ///< penetration / contact tolerance [mm]
  double merge_radius = 0.1;     ///< contacts closer than this merge [mm]
  /// Hull margin for closure; absorbs the tilt of sampled arc faces.
  double closure_margin = 1e-4;
  CagingGrid grid;
};

/// Object outline in the world frame.
struct ObjectGeometry {
  std::variant<double, geom::Polygon> outline;  ///< disc radius or polygon

  bool is_disc() const { return std::holds_alternative<double>(outline); }
};

ObjectGeometry object_geometry(const ObjectSpec& obj);

/// Solid finger outline with its face baseline at x = baseline.
geom::Polygon finger_polygon(const SurfaceProfile& profile, FingerSide side,
                             double baseline, double depth);

/// First-contact placement of both fingers around the object.
struct ContactResult {
  ContactSet contacts;
  double left_baseline = 0.0;
  double right_baseline = 0.0;

  double separation() const { return right_baseline - left_baseline; }
};

/// Bisects each finger independently to its first contact and collects
/// every touching point, merged within GraspSetup::merge_radius.
ContactResult compute_contacts(const ObjectSpec& obj,
                               const SurfaceProfile& left,
                               const SurfaceProfile& right,
                               const GraspSetup& setup = {});

/// Touching points for fingers placed at the given baselines.
ContactSet contacts_at(const ObjectSpec& obj, const SurfaceProfile& left,
                       const SurfaceProfile& right, double left_baseline,
                       double right_baseline, const GraspSetup& setup = {});

/// Wrench space appropriate for the object (discs drop the spin axis).
WrenchSpace wrench_space_for(const ObjectSpec& obj);

struct CagingResult {
  bool caged = false;
  std::size_t explored = 0;  ///< free grid cells reached from the rest pose
  double clearance = 0.0;    ///< tip opening minus narrowest object width
};

/// Grid search over object poses (x, y and, for non-discs, rotation) for a
/// penetration-free path from the rest pose out of the fingers' bounding
/// box. Throws GeometryError if the escape opening is positive but narrower
/// than two grid cells.
CagingResult caging_test(const ObjectSpec& obj, const SurfaceProfile& left,
                         const SurfaceProfile& right, double left_baseline,
                         double right_baseline, const GraspSetup& setup = {});

enum class GraspClass { kFormClosure, kForceClosure, kCaging, kFail };

std::string_view to_string(GraspClass cls);

struct GraspReport {
  GraspClass cls = GraspClass::kFail;
  ContactSet contacts;
  double left_baseline = 0.0;
  double right_baseline = 0.0;
  bool fingers_collide = false;    ///< closure stopped by finger contact
  bool posture_uncertain = false;  ///< outcome depends on approach posture
  ClosureResult form;
  ClosureResult force;
  std::optional<CagingResult> caging;
  std::string note;
};

/// Closes both fingers on the object and classifies the result with
/// precedence form closure > force closure > caging > fail.
GraspReport classify_grasp(const ObjectSpec& obj, const ModePair& mode,
                           double mu, const GraspSetup& setup = {});

}  // namespace gripper
