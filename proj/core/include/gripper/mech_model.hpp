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

// Closed-form statics and kinematics of the chain/sprocket/gear drivetrain
// and the magnetic detent that holds each finger body at a surface.
//
// Lengths are in mm, forces in N, torques in N*mm, angles in radians.

#include <string>

namespace gripper {

/// Pitch radii of the drivetrain. The 3S finger body is driven through
/// driving shaft 1 (r_g1 -> r_g3s), the 4S finger body through driving
/// shaft 2 (r_g2 -> r_g4s).
struct GearGeometry {
  double r_is = 0.0;   ///< input-shaft sprocket
  double r_sp = 0.0;   ///< driving-shaft sprocket (same on both shafts)
  double r_g1 = 0.0;   ///< gear on driving shaft 1
  double r_g2 = 0.0;   ///< gear on driving shaft 2
  double r_g3s = 0.0;  ///< gear on the 3S finger body
  double r_g4s = 0.0;  ///< gear on the 4S finger body

  /// Lever length mapping chain tension to 3S body torque [mm].
  double alpha1() const { return r_g3s * r_sp / r_g1; }
  /// Lever length mapping chain tension to 4S body torque [mm].
  double alpha2() const { return r_g4s * r_sp / r_g2; }
  double min_alpha() const;

  /// Throws InvalidArgument unless every radius is finite and positive.
  void validate() const;

  /// r_IS=20, r_sp=15, r_g1=10, r_g3S=12, r_g2=7.5, r_g4S=12.
  static GearGeometry prototype();

  friend bool operator==(const GearGeometry&, const GearGeometry&) = default;
};

/// Point-charge model of one finger-base / finger-body magnet pair.
struct MagnetDetent {
  double k_m = 0.0;   ///< magnet coefficient [N*mm^2]
  double r_fb = 0.0;  ///< radius of the magnet circle in the finger body
  double d_mg = 0.0;  ///< magnet gap at the nominal (aligned) position

  void validate() const;

  /// k_m = 1.07e-5 N*mm^2, r_FB = 14 mm, d_MG = 1 mm.
  static MagnetDetent prototype();

  friend bool operator==(const MagnetDetent&, const MagnetDetent&) = default;
};

/// k_m that puts the breakaway motor torque of the prototype drivetrain in
/// the few-hundred N*mm range seen on the bench. Not a measured value.
inline constexpr double kCalibratedMagnetCoefficient = 50.0;

/// Surface counts of the two fingers; n_a >= n_b >= 1.
struct SurfaceCount {
  int n_a = 4;
  int n_b = 3;

  void validate() const;
};

struct DrivetrainForces {
  double f_rc = 0.0;       ///< roller-chain tension
  double f_g3s = 0.0;      ///< grasp force, object-contact regime
  double f_g4s = 0.0;
  double f_stp3s = 0.0;    ///< stopper force, fully-open regime
  double f_stp4s = 0.0;
  double tau_dr3s = 0.0;   ///< driving-shaft torques
  double tau_dr4s = 0.0;
  double tau_3s = 0.0;     ///< torques delivered to the finger bodies
  double tau_4s = 0.0;
};

struct ForcePair {
  double f_3s = 0.0;
  double f_4s = 0.0;
};

struct TorquePair {
  double tau_3s = 0.0;
  double tau_4s = 0.0;
};

struct AnglePair {
  double theta_3s = 0.0;
  double theta_4s = 0.0;
};

struct DetentPeak {
  double theta = 0.0;   ///< argmax [rad]
  double torque = 0.0;  ///< maximum holding torque [N*mm]
};

/// Outcome of the antipodal gearing check.
struct GearingReport {
  bool ok = false;
  double ratio = 0.0;           ///< (r_g1/r_g3s) / (r_g2/r_g4s)
  double expected_ratio = 0.0;  ///< n_a / n_b
  std::string message;
};

/// Chain tension produced by motor torque tau_m; the sign follows tau_m.
double chain_tension(double tau_m, const GearGeometry& g);

/// Grasp forces of both finger units while they press on an object.
ForcePair grasp_forces(double tau_m, const GearGeometry& g);

/// Torques applied to the 3S and 4S finger bodies by a chain tension f_rc.
TorquePair body_torques(double f_rc, const GearGeometry& g);

/// Every drivetrain quantity for one motor torque. Grasp and stopper forces
/// are both filled; which regime applies is the caller's business.
DrivetrainForces drivetrain_forces(double tau_m, const GearGeometry& g);

/// Restoring torque of one magnet pair with the body rotated theta_fb away
/// from the aligned position. Odd and 2*pi-periodic in theta_fb.
double detent_torque(double theta_fb, const MagnetDetent& m);

/// Half of the angle between neighbouring surfaces on a finger with
/// n_surfaces faces, i.e. the detent search interval upper bound.
double detent_search_limit(int n_surfaces);

/// Location and value of the holding-torque maximum over (0, search_limit).
/// The search is a 0.01 deg sweep followed by golden-section refinement.
/// Throws InvalidArgument if the torque is never positive on the interval.
DetentPeak detent_peak(const MagnetDetent& m, double search_limit);

/// detent_peak over the interval of the finger with the most surfaces.
DetentPeak detent_peak(const MagnetDetent& m, const SurfaceCount& s = {});

/// Smallest |tau_m| that breaks both detents at once:
///   r_IS * tau_MG_max / min(alpha1, alpha2).
double breakaway_motor_torque(const GearGeometry& g, const MagnetDetent& m,
                              const SurfaceCount& s = {});

/// Finger-body rotation produced by motor rotation theta_m while both
/// units are held at the stopper.
AnglePair finger_body_angles(double theta_m, const GearGeometry& g);

/// Checks (r_g1/r_g3s) : (r_g2/r_g4s) == (1/n_b) : (1/n_a) to 1e-9 relative.
GearingReport validate_antipodal_gearing(const GearGeometry& g,
                                         const SurfaceCount& s);

/// Motor rotation that advances both fingers by exactly one surface.
/// Throws InvalidArgument if the gearing is not antipodal.
double switch_interval(const GearGeometry& g, const SurfaceCount& s);

/// Number of distinct detent states in one full cycle.
int gc_mode_count(const SurfaceCount& s);

}  // namespace gripper
