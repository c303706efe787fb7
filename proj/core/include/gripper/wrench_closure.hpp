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

// First-order closure tests on planar contact sets. A contact set is closed
// when its primitive contact wrenches positively span the wrench space,
// i.e. the origin lies strictly inside their convex hull.

#include <array>
#include <vector>

#include "gripper/geometry2d.hpp"

namespace gripper {

enum class FingerSide { kLeft, kRight };

struct Contact {
  geom::Vec2 point;
  geom::Vec2 normal;  ///< unit, pointing into the object
  FingerSide finger = FingerSide::kLeft;
};

using ContactSet = std::vector<Contact>;

/// Wrench coordinates used by the closure tests.
enum class WrenchSpace {
  kPlanar,     ///< (fx, fy, tz)
  kForceOnly,  ///< (fx, fy); for discs, whose spin about the centre is a
               ///< symmetry rather than a motion
};

using Wrench = std::array<double, 3>;

struct ClosureResult {
  bool closed = false;
  int wrenches = 0;            ///< primitive wrenches generated
  int effective_wrenches = 0;  ///< after merging coincident ones
  bool degenerate = false;     ///< coincident wrenches or rank deficiency

  explicit operator bool() const { return closed; }
};

/// Margin on hull containment.
inline constexpr double kClosureMargin = 1e-9;

/// Brute-force hull check: true iff the points span R^dim and the origin
/// lies more than `margin` inside every supporting hyperplane. dim is 2 or 3.
bool origin_strictly_inside_hull(const std::vector<Wrench>& points, int dim,
                                 double margin = kClosureMargin);

/// Frictionless contact wrenches (n, (p - ref) x n / L) with L the largest
/// moment arm, so the result does not depend on the length unit.
std::vector<Wrench> contact_wrenches(const ContactSet& contacts,
                                     geom::Vec2 reference, WrenchSpace space);

/// Friction-cone edge wrenches: two per contact, along n +/- mu t.
std::vector<Wrench> friction_edge_wrenches(const ContactSet& contacts,
                                           double mu, geom::Vec2 reference,
                                           WrenchSpace space);

ClosureResult form_closure_test(const ContactSet& contacts,
                                geom::Vec2 reference = {},
                                WrenchSpace space = WrenchSpace::kPlanar,
                                double margin = kClosureMargin);

ClosureResult force_closure_test(const ContactSet& contacts, double mu,
                                 geom::Vec2 reference = {},
                                 WrenchSpace space = WrenchSpace::kPlanar,
                                 double margin = kClosureMargin);

}  // namespace gripper
