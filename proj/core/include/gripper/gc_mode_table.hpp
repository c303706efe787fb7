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

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gripper/mech_model.hpp"

namespace gripper {

enum class SurfaceKind { kFlat, kConvex, kConcave, kDeformableFlat };

/// One finger surface. r_f is the arc radius of convex/concave faces and is
/// carried (but unused) for flat ones so every surface of a finger agrees.
struct SurfaceShape {
  SurfaceKind kind = SurfaceKind::kFlat;
  double r_f = 10.0;

  bool is_curved() const {
    return kind == SurfaceKind::kConvex || kind == SurfaceKind::kConcave;
  }
  bool is_deformable() const { return kind == SurfaceKind::kDeformableFlat; }

  friend bool operator==(const SurfaceShape&, const SurfaceShape&) = default;
};

std::string_view to_string(SurfaceKind kind);
/// Accepts "flat", "convex", "concave", "deformable" / "deformable_flat".
SurfaceKind parse_surface_kind(std::string_view name);

/// Surface pair facing the object in one GC mode.
struct ModePair {
  SurfaceShape s3;  ///< 3S finger (the one with n_b surfaces)
  SurfaceShape s4;  ///< 4S finger (the one with n_a surfaces)
};

/// Surfaces of each finger in the order the rotation presents them.
struct SurfaceOrders {
  std::vector<SurfaceShape> finger_3s;
  std::vector<SurfaceShape> finger_4s;

  SurfaceCount count() const;

  /// 3S: flat, convex, concave. 4S: flat, convex, concave, deformable.
  static SurfaceOrders prototype(double r_f = 10.0);
};

/// Cyclic sequence of surface pairs visited by the coupled rotation.
/// Mode indices are 1-based; mode 1 is the first surface of each finger.
class GcModeTable {
 public:
  GcModeTable() = default;
  explicit GcModeTable(std::vector<ModePair> entries)
      : entries_(std::move(entries)) {}

  int size() const { return static_cast<int>(entries_.size()); }
  const ModePair& at(int mode) const;
  const std::vector<ModePair>& entries() const { return entries_; }

  /// Modes one switch interval after `mode`, wrapping at size().
  int next(int mode) const { return mode % size() + 1; }

 private:
  std::vector<ModePair> entries_;
};

/// Throws InvalidArgument on an empty order or counts violating n_a >= n_b.
GcModeTable build_mode_table(const SurfaceOrders& orders);
/// Same, after checking the orders hold n_b and n_a surfaces.
GcModeTable build_mode_table(const SurfaceCount& count,
                             const SurfaceOrders& orders);

/// Unordered surface-kind pair.
using ShapePair = std::pair<SurfaceKind, SurfaceKind>;

/// Collapses (a, b) and (b, a) into one entry. For the prototype table this
/// yields the nine grasp configurations counted for the physical gripper.
std::set<ShapePair> distinct_shape_pairs(const GcModeTable& table);

/// "GC<k>", the label used for mode k on the bench.
std::string mode_label(int mode);

}  // namespace gripper
