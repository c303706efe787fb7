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

#include "gripper/object_file.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gripper/error.hpp"
#include "gripper/kv_text.hpp"

namespace gripper {
namespace {

FaceShape face_value(KvTable& kv, std::string_view key, FaceShape fallback,
                     bool free) {
  const KvEntry* e = kv.find("", key);
  if (e == nullptr) return fallback;
  FaceShape face;
  try {
    face = parse_face_shape(e->value);
  } catch (const InvalidArgument& err) {
    throw ParseError(e->line, err.what());
  }
  if (!free && face != fallback) {
    throw ParseError(e->line, std::string(key) + "=" + e->value +
                                  " contradicts the shape (expected " +
                                  std::string(to_string(fallback)) + ")");
  }
  return face;
}

}  // namespace

ObjectSpec parse_object_text(std::string_view text) {
  KvTable kv(parse_kv_text(text));
  const KvEntry* shape = kv.find("", "shape");
  if (shape == nullptr) throw ParseError(0, "missing required key 'shape'");

  ObjectSpec obj;
  const std::string& s = shape->value;
  if (s == "circle" || s == "cylinder") {
    obj.shape = Circle{kv.require_number("", "radius_mm")};
  } else if (s == "box") {
    obj.shape = Box{kv.require_number("", "width_mm"),
                    kv.require_number("", "height_mm")};
  } else if (s == "plate") {
    obj.shape = ThinPlate{kv.require_number("", "length_mm"),
                          kv.require_number("", "thickness_mm")};
  } else if (s == "composite") {
    CompositeFaces c;
    c.height = kv.require_number("", "height_mm");
    c.thickness = kv.require_number("", "thickness_mm");
    obj.shape = c;
  } else {
    throw ParseError(shape->line, "unknown shape '" + s + "'");
  }

  const bool composite = std::holds_alternative<CompositeFaces>(obj.shape);
  const FaceShape left = face_value(kv, "left_face", obj.left_face(), composite);
  const FaceShape right = face_value(kv, "right_face", obj.right_face(), composite);
  if (composite) {
    auto& c = std::get<CompositeFaces>(obj.shape);
    c.left = left;
    c.right = right;
  }
  if (auto mu = kv.number("", "mu")) obj.mu = *mu;
  if (auto name = kv.text("", "name")) obj.name = *name;
  kv.reject_unread();
  obj.validate();
  return obj;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ObjectSpec load_object_file(const std::string& path) {
  ObjectSpec obj;
  try {
    obj = parse_object_text(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
  if (obj.name.empty()) obj.name = std::filesystem::path(path).stem().string();
  return obj;
}

}  // namespace gripper
