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

// Object description files:
//
//   shape = circle | box | plate | composite
//   radius_mm, width_mm, height_mm, length_mm, thickness_mm
//   left_face, right_face = flat | convex | concave | complex
//   mu = 0.5
//   name = large_cylinder

#include <string>
#include <string_view>

#include "gripper/object.hpp"

namespace gripper {

ObjectSpec parse_object_text(std::string_view text);
/// Reads and parses a file; the default name is the file stem.
ObjectSpec load_object_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace gripper
