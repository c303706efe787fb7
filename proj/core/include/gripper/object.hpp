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

// Planar primitive objects. The closing axis is x; "width"/"thickness" are
// measured along it, "height"/"length" across it (along the finger face).

#include <string>
#include <string_view>
#include <variant>

namespace gripper {

/// Shape of an object face as seen by one finger.
enum class FaceShape { kFlat, kConvex, kConcave, kComplex };

std::string_view to_string(FaceShape face);
FaceShape parse_face_shape(std::string_view name);

struct Circle {
  double radius = 0.0;
};

struct Box {
  double width = 0.0;
  double height = 0.0;
};

struct ThinPlate {
  double length = 0.0;
  double thickness = 0.0;
};

/// Prism whose two gripped faces have their own contour.
struct CompositeFaces {
  FaceShape left = FaceShape::kFlat;
  FaceShape right = FaceShape::kFlat;
  double height = 0.0;
  double thickness = 0.0;
};

using ObjectShape = std::variant<Circle, Box, ThinPlate, CompositeFaces>;

struct ObjectSpec {
  ObjectShape shape = Circle{};
  double mu = 0.5;
  std::string name;

  /// Extent along the closing axis.
  double closing_width() const;
  /// Extent across the closing axis.
  double height() const;
  FaceShape left_face() const;
  FaceShape right_face() const;
  bool is_circle() const { return std::holds_alternative<Circle>(shape); }

  void validate() const;
};

}  // namespace gripper
