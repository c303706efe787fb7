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

#include "gripper/gc_mode_table.hpp"

#include <algorithm>
#include <sstream>

#include "gripper/error.hpp"

namespace gripper {

std::string_view to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::kFlat:
      return "flat";
    case SurfaceKind::kConvex:
      return "convex";
    case SurfaceKind::kConcave:
      return "concave";
    case SurfaceKind::kDeformableFlat:
      return "deformable";
  }
  return "?";
}

SurfaceKind parse_surface_kind(std::string_view name) {
  if (name == "flat") return SurfaceKind::kFlat;
  if (name == "convex") return SurfaceKind::kConvex;
  if (name == "concave") return SurfaceKind::kConcave;
  if (name == "deformable" || name == "deformable_flat") {
    return SurfaceKind::kDeformableFlat;
  }
  throw InvalidArgument("unknown surface shape '" + std::string(name) + "'");
}

SurfaceCount SurfaceOrders::count() const {
  return SurfaceCount{static_cast<int>(finger_4s.size()),
                      static_cast<int>(finger_3s.size())};
}

SurfaceOrders SurfaceOrders::prototype(double r_f) {
  auto s = [r_f](SurfaceKind k) { return SurfaceShape{k, r_f}; };
  return SurfaceOrders{
      {s(SurfaceKind::kFlat), s(SurfaceKind::kConvex), s(SurfaceKind::kConcave)},
      {s(SurfaceKind::kFlat), s(SurfaceKind::kConvex), s(SurfaceKind::kConcave),
       s(SurfaceKind::kDeformableFlat)}};
}

const ModePair& GcModeTable::at(int mode) const {
  if (mode < 1 || mode > size()) {
    std::ostringstream os;
    os << "mode index " << mode << " outside 1.." << size();
    throw InvalidArgument(os.str());
  }
  return entries_[static_cast<std::size_t>(mode - 1)];
}

GcModeTable build_mode_table(const SurfaceOrders& orders) {
  if (orders.finger_3s.empty() || orders.finger_4s.empty()) {
    throw InvalidArgument("surface order must name at least one surface");
  }
  const SurfaceCount count = orders.count();
  count.validate();
  for (const auto* order : {&orders.finger_3s, &orders.finger_4s}) {
    for (const SurfaceShape& s : *order) {
      if (!(s.r_f > 0.0)) {
        throw InvalidArgument("surface radius r_f must be > 0");
      }
    }
  }

  const int n_gc = gc_mode_count(count);
  std::vector<ModePair> entries;
  entries.reserve(static_cast<std::size_t>(n_gc));
  for (int i = 0; i < n_gc; ++i) {
    entries.push_back(
        {orders.finger_3s[static_cast<std::size_t>(i % count.n_b)],
         orders.finger_4s[static_cast<std::size_t>(i % count.n_a)]});
  }
  return GcModeTable(std::move(entries));
}

GcModeTable build_mode_table(const SurfaceCount& count,
                             const SurfaceOrders& orders) {
  count.validate();
  const SurfaceCount given = orders.count();
  if (given.n_a != count.n_a || given.n_b != count.n_b) {
    throw InvalidArgument("surface orders list " + std::to_string(given.n_b) +
                          " and " + std::to_string(given.n_a) +
                          " surfaces, expected " + std::to_string(count.n_b) +
                          " and " + std::to_string(count.n_a));
  }
  return build_mode_table(orders);
}

std::set<ShapePair> distinct_shape_pairs(const GcModeTable& table) {
  std::set<ShapePair> pairs;
  for (const ModePair& e : table.entries()) {
    pairs.insert(std::minmax(e.s3.kind, e.s4.kind));
  }
  return pairs;
}

std::string mode_label(int mode) { return "GC" + std::to_string(mode); }

}  // namespace gripper
