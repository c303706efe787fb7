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

#include "gripper/grasp_analysis.hpp"

#include <gtest/gtest.h>

#include <string>

#include "gripper/error.hpp"
#include "gripper/object_file.hpp"
#include "oracles.hpp"

namespace gripper {
namespace {

const SurfaceShape kFlat{SurfaceKind::kFlat, 10.0};
const SurfaceShape kConvex{SurfaceKind::kConvex, 10.0};
const SurfaceShape kConcave{SurfaceKind::kConcave, 10.0};
const SurfaceShape kDeformable{SurfaceKind::kDeformableFlat, 10.0};

ObjectSpec fixture(const std::string& name) {
  return load_object_file(std::string(GRIPPER_FIXTURES_DIR) + "/objects/" + name + ".obj");
}

ObjectSpec disc(double r) { return ObjectSpec{Circle{r}, 0.5, "disc"}; }

SurfaceProfile profile(const SurfaceShape& s, double width = 20.0) {
  return surface_profile(s, width, 0.25);
}

TEST(SurfaceProfile, Examples) {
  EXPECT_NEAR(profile(kConvex).sagitta(), 10.0, 1e-12);
  EXPECT_NEAR(profile(kConcave, 16.0).sagitta(), 4.0, 1e-12);
  EXPECT_EQ(profile(kFlat).sagitta(), 0.0);
  const SurfaceProfile p = profile(kConvex, 16.0);
  EXPECT_EQ(p.polyline.front().x, -8.0);
  EXPECT_EQ(p.polyline.back().x, 8.0);
  EXPECT_EQ(p.polyline.front().y, 0.0);
  EXPECT_EQ(p.polyline.size() % 2, 1u);
  EXPECT_NEAR(p.polyline[p.polyline.size() / 2].y, 4.0, 1e-12);
  for (const auto& v : profile(kConcave).polyline) EXPECT_LE(v.y, 0.0);
  EXPECT_THROW(profile(kConvex, 20.5), GeometryError);
  EXPECT_THROW(surface_profile(kFlat, 0.0, 0.25), InvalidArgument);
}

TEST(SurfaceProfile, VerticesLieOnTheArc) {
  const SurfaceProfile p = profile(kConcave, 16.0);
  const double centre_y = -4.0 + 10.0;  // arc centre sits r above the deepest point
  for (const auto& v : p.polyline) {
    EXPECT_NEAR(std::hypot(v.x, v.y - centre_y), 10.0, 1e-9);
  }
}

TEST(FaceTouchGap, Examples) {
  EXPECT_NEAR(face_touch_gap(profile(kFlat), profile(kFlat)), 0.0, 1e-12);
  EXPECT_NEAR(face_touch_gap(profile(kConvex), profile(kFlat)), 10.0, 1e-12);
  EXPECT_NEAR(face_touch_gap(profile(kConvex), profile(kConvex)), 20.0, 1e-12);
  EXPECT_NEAR(face_touch_gap(profile(kConcave), profile(kConcave)), 0.0, 1e-12);
}

TEST(Contacts, Examples) {
  const auto large = compute_contacts(disc(15.0), profile(kConcave), profile(kConcave));
  EXPECT_EQ(large.contacts.size(), 4u);
  const auto small = compute_contacts(disc(5.0), profile(kConcave), profile(kConcave));
  EXPECT_EQ(small.contacts.size(), 2u);
  const auto box = compute_contacts(fixture("box"), profile(kFlat), profile(kFlat));
  EXPECT_EQ(box.contacts.size(), 4u);
  EXPECT_NEAR(box.separation(), 20.0, 1e-5);
  const auto flat_disc = compute_contacts(disc(5.0), profile(kFlat), profile(kFlat));
  ASSERT_EQ(flat_disc.contacts.size(), 2u);
  EXPECT_NEAR(flat_disc.separation(), 10.0, 1e-5);
  EXPECT_THROW(compute_contacts(disc(31.0), profile(kFlat), profile(kFlat)), GeometryError);
}

TEST(Contacts, NormalsAreUnitAndPointIntoObject) {
  for (const ObjectSpec& obj : {disc(15.0), disc(5.0), fixture("box"), fixture("complex")}) {
    for (const SurfaceShape& s : {kFlat, kConvex, kConcave}) {
      const auto r = compute_contacts(obj, profile(s), profile(s));
      for (const Contact& c : r.contacts) {
        EXPECT_NEAR(geom::norm(c.normal), 1.0, 1e-12);
        const double push = c.finger == FingerSide::kLeft ? c.normal.x : -c.normal.x;
        EXPECT_GT(push, 0.0) << obj.name;
      }
    }
  }
}

TEST(Contacts, MirrorSymmetricForSymmetricSetups) {
  for (const ObjectSpec& obj : {disc(15.0), disc(8.0), fixture("box")}) {
    for (const SurfaceShape& s : {kFlat, kConvex, kConcave}) {
      const auto r = compute_contacts(obj, profile(s), profile(s));
      EXPECT_NEAR(r.left_baseline, -r.right_baseline, 1e-6);
      int left = 0;
      for (const Contact& c : r.contacts) {
        left += c.finger == FingerSide::kLeft;
        bool mirrored = false;
        for (const Contact& d : r.contacts) {
          mirrored |= d.finger != c.finger && std::abs(d.point.x + c.point.x) < 1e-6 &&
                      std::abs(d.point.y - c.point.y) < 1e-6 &&
                      std::abs(d.normal.x + c.normal.x) < 1e-6;
        }
        EXPECT_TRUE(mirrored) << obj.name;
      }
      EXPECT_EQ(2 * left, static_cast<int>(r.contacts.size()));
    }
  }
}

struct Expected {
  const char* object;
  int mode;
  GraspClass cls;
};

TEST(Classify, FixtureObjects) {
  const GcModeTable table = build_mode_table(SurfaceOrders::prototype());
  const Expected cases[] = {
      {"large_cylinder", 1, GraspClass::kForceClosure},
      {"large_cylinder", 2, GraspClass::kForceClosure},
      {"large_cylinder", 3, GraspClass::kFormClosure},
      {"large_cylinder", 4, GraspClass::kForceClosure},
      {"small_cylinder", 1, GraspClass::kForceClosure},
      {"small_cylinder", 3, GraspClass::kCaging},
      {"box", 1, GraspClass::kForceClosure},
      {"box", 3, GraspClass::kForceClosure},
      {"thin_plate", 1, GraspClass::kForceClosure},
      {"thin_plate", 3, GraspClass::kCaging},
      {"thin_plate", 4, GraspClass::kFail},
      {"complex", 2, GraspClass::kFormClosure},
      {"complex", 4, GraspClass::kForceClosure},
  };
  for (const Expected& e : cases) {
    const ObjectSpec obj = fixture(e.object);
    const GraspReport r = classify_grasp(obj, table.at(e.mode), obj.mu);
    EXPECT_EQ(r.cls, e.cls) << e.object << " GC" << e.mode << ": " << to_string(r.cls);
  }
  const ObjectSpec small = fixture("small_cylinder");
  EXPECT_TRUE(classify_grasp(small, table.at(3), 0.5).fingers_collide);
  const ObjectSpec plate = fixture("thin_plate");
  EXPECT_TRUE(classify_grasp(plate, table.at(3), 0.5).posture_uncertain);
  EXPECT_EQ(classify_grasp(fixture("large_cylinder"), table.at(3), 0.5).contacts.size(), 4u);
}

TEST(Classify, FormClosedFixturesAreAlsoCaged) {
  const GcModeTable table = build_mode_table(SurfaceOrders::prototype());
  for (const char* name : {"large_cylinder", "complex"}) {
    const ObjectSpec obj = fixture(name);
    for (int k = 1; k <= table.size(); ++k) {
      const GraspReport r = classify_grasp(obj, table.at(k), obj.mu);
      if (r.cls != GraspClass::kFormClosure) continue;
      const ModePair& m = table.at(k);
      const CagingResult c =
          caging_test(obj, profile(m.s3), profile(m.s4), r.left_baseline, r.right_baseline);
      EXPECT_TRUE(c.caged) << name << " GC" << k;
    }
  }
}

TEST(Classify, ForceClosureUsesFriction) {
  const GcModeTable table = build_mode_table(SurfaceOrders::prototype());
  const ObjectSpec box = fixture("box");
  EXPECT_EQ(classify_grasp(box, table.at(1), 0.5).cls, GraspClass::kForceClosure);
  EXPECT_NE(classify_grasp(box, table.at(1), 0.0).cls, GraspClass::kForceClosure);
}

TEST(Caging, FlatJawsReleaseAFreeDisc) {
  const CagingResult r = caging_test(disc(5.0), profile(kFlat), profile(kFlat), -6.0, 6.0);
  EXPECT_FALSE(r.caged);
  EXPECT_NEAR(r.clearance, 2.0, 1e-9);
}

TEST(Caging, RejectsClearanceBelowTwoCells) {
  EXPECT_THROW(caging_test(disc(5.0), profile(kFlat), profile(kFlat), -5.3, 5.3), GeometryError);
  GraspSetup fine;
  fine.grid.cell_mm = 0.1;
  EXPECT_NO_THROW(caging_test(disc(5.0), profile(kFlat), profile(kFlat), -5.3, 5.3, fine));
  fine.grid.cell_mm = 0.0;
  EXPECT_THROW(caging_test(disc(5.0), profile(kFlat), profile(kFlat), -6, 6, fine),
               InvalidArgument);
}

// Rest pose at the origin must not overlap a finger for the comparison to
// mean anything.
bool rest_pose_clear(double r, bool concave, double b) {
  if (std::abs(b) >= r) return true;
  return concave && std::abs(b) + r <= 10.0;
}

TEST(Caging, DiscAgreesWithFloodFillOracle) {
  int compared = 0;
  int caged = 0;
  for (double r : {3.0, 4.0, 5.0, 6.0, 8.0}) {
    for (int pair = 0; pair < 4; ++pair) {
      const bool lc = pair & 1;
      const bool rc = pair & 2;
      for (double s : {4.0, 6.0, 8.0, 9.0, 10.5, 12.0, 14.0, 16.0, 20.0}) {
        const double half = s / 2;
        if (!rest_pose_clear(r, lc, half) || !rest_pose_clear(r, rc, half)) continue;
        const double clearance = s - 2 * r;
        if (std::abs(clearance) < 1.0) continue;
        const CagingResult got =
            caging_test(disc(r), profile(lc ? kConcave : kFlat), profile(rc ? kConcave : kFlat),
                        -half, half);
        const oracle::OracleFinger l{true, lc, -half};
        const oracle::OracleFinger rr{false, rc, half};
        const bool expected = oracle::disc_caged(r, l, rr, 0.5);
        EXPECT_EQ(got.caged, expected) << "r=" << r << " pair=" << pair << " s=" << s;
        ++compared;
        caged += expected;
      }
    }
  }
  EXPECT_GT(compared, 20);
  EXPECT_GT(caged, 3);
}

TEST(Caging, BoxBetweenConcaveJawsIsCaged) {
  const ObjectSpec small_box{Box{8.0, 8.0}, 0.5, "b"};
  const CagingResult r =
      caging_test(small_box, profile(kConcave), profile(kConcave), -3.0, 3.0);
  EXPECT_TRUE(r.caged);
  EXPECT_GT(r.explored, 1u);
}

TEST(WrenchSpace, DiscsUseForcesOnly) {
  EXPECT_EQ(wrench_space_for(disc(5.0)), WrenchSpace::kForceOnly);
  EXPECT_EQ(wrench_space_for(fixture("box")), WrenchSpace::kPlanar);
}

TEST(GraspClass, Names) {
  EXPECT_EQ(to_string(GraspClass::kFormClosure), "FormClosure");
  EXPECT_EQ(to_string(GraspClass::kForceClosure), "ForceClosure");
  EXPECT_EQ(to_string(GraspClass::kCaging), "Caging");
  EXPECT_EQ(to_string(GraspClass::kFail), "Fail");
}

}  // namespace
}  // namespace gripper
