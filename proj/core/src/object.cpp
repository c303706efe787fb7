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

#include "gripper/object.hpp"

#include <cmath>

#include "gripper/error.hpp"

namespace gripper {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidArgument(std::string(what) + " must be > 0");
  }
}

}  // namespace

std::string_view to_string(FaceShape face) {
  switch (face) {
    case FaceShape::kFlat:
      return "flat";
    case FaceShape::kConvex:
      return "convex";
    case FaceShape::kConcave:
      return "concave";
    case FaceShape::kComplex:
      return "complex";
  }
  return "?";
}

FaceShape parse_face_shape(std::string_view name) {
  if (name == "flat") return FaceShape::kFlat;
  if (name == "convex") return FaceShape::kConvex;
  if (name == "concave") return FaceShape::kConcave;
  if (name == "complex") return FaceShape::kComplex;
  throw InvalidArgument("unknown face shape '" + std::string(name) + "'");
}

double ObjectSpec::closing_width() const {
  return std::visit(Overloaded{
                        [](const Circle& c) { return 2.0 * c.radius; },
                        [](const Box& b) { return b.width; },
                        [](const ThinPlate& p) { return p.thickness; },
                        [](const CompositeFaces& f) { return f.thickness; },
                    },
                    shape);
}

double ObjectSpec::height() const {
  return std::visit(Overloaded{
                        [](const Circle& c) { return 2.0 * c.radius; },
                        [](const Box& b) { return b.height; },
                        [](const ThinPlate& p) { return p.length; },
                        [](const CompositeFaces& f) { return f.height; },
                    },
                    shape);
}

FaceShape ObjectSpec::left_face() const {
  if (is_circle()) return FaceShape::kConvex;
  if (const auto* f = std::get_if<CompositeFaces>(&shape)) return f->left;
  return FaceShape::kFlat;
}

FaceShape ObjectSpec::right_face() const {
  if (is_circle()) return FaceShape::kConvex;
  if (const auto* f = std::get_if<CompositeFaces>(&shape)) return f->right;
  return FaceShape::kFlat;
}

void ObjectSpec::validate() const {
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw InvalidArgument("friction coefficient mu must be >= 0");
  }
  std::visit(Overloaded{
                 [](const Circle& c) { require_positive(c.radius, "radius"); },
                 [](const Box& b) {
                   require_positive(b.width, "box width");
                   require_positive(b.height, "box height");
                 },
                 [](const ThinPlate& p) {
                   require_positive(p.length, "plate length");
                   require_positive(p.thickness, "plate thickness");
                 },
                 [](const CompositeFaces& f) {
                   require_positive(f.height, "height");
                   require_positive(f.thickness, "thickness");
                 },
             },
             shape);
}

}  // namespace gripper
