/*
 * Copyright 2026 The softgrip Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/

#pragma once

// Phased grasp procedure and geometric feasibility rules.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softgrip/pressure_model.hpp"

namespace softgrip {

struct GripperGeometry {
  double aperture_diameter = 0.1016;      // m, opening bounded by the petals
  double full_close_angle = kPi;          // rad, base rotation at full coverage
  double rotation_speed = kPi / 2.0;      // rad/s

  /// "2in", "4in" or "8in". Throws DomainError for anything else.
  static GripperGeometry from_preset(std::string_view preset);

  void validate() const;
};

enum class ShapeClass { Sphere, Cylinder, Flat, Elongated, Granular, Deformable };

std::string_view to_string(ShapeClass shape);
std::optional<ShapeClass> shape_from_string(std::string_view name);

struct ObjectDescriptor {
  ShapeClass shape = ShapeClass::Sphere;
  double height = 0.0;    // m
  double diameter = 0.0;  // m
  double mass = 0.0;      // kg
  std::string label;

  void validate() const;
};

struct GraspScenario {
  std::string id;
  GripperGeometry gripper;
  ObjectDescriptor object;
  double submersion_fraction = 0.0;
  double air_support_kpa = 0.0;
  double lift_height = 0.0;  // m
  double hold_height = 0.0;  // m
  double lateral_offset = 0.0;  // m, object axis to gripper axis
  /// Rotate while approaching to push air out of the funnel.
  bool rotate_while_approaching = false;

  void validate() const;
};

struct FeasibilityRules {
  double elongated_ratio = 2.5;           // height / aperture
  double trapped_air_threshold = 0.6;     // submersion fraction
  double trapped_air_threshold_rotating = 0.9;
  int trace_steps = 8;                    // rotation steps from open to closed
};

enum class Phase { Approaching, Lifting, Holding };
enum class Verdict { Feasible, Infeasible };
enum class ReasonCode { OK, Oversized, FlatObject, ElongatedObject, TrappedAir, OutsidePetalRegion };

std::string_view to_string(Phase phase);
std::string_view to_string(Verdict verdict);
std::string_view to_string(ReasonCode reason);

struct GraspState {
  Phase phase = Phase::Approaching;
  double angle = 0.0;  // rad
  bool object_in_region = false;
};

struct PhaseSample {
  Phase phase = Phase::Approaching;
  double angle = 0.0;
  double coverage = 0.0;
  double height = 0.0;  // nominal gripper height for the phase, m
};

struct GraspOutcome {
  std::string scenario_id;
  Verdict verdict = Verdict::Feasible;
  ReasonCode reason = ReasonCode::OK;
  std::vector<PhaseSample> trace;
};

/// Fraction of the object embraced by the skin at base angle `angle`.
/// Linear up to the full-close angle, then saturated.
double coverage(double angle, const GripperGeometry& geom);

/// Advances the grasp by `dt` seconds. Approaching hands over to Lifting as
/// soon as the object sits in the petal region, and the whole step is spent
/// rotating. Lifting becomes Holding once coverage reaches 1.
GraspState step_phase(const GraspState& state, double dt, const GripperGeometry& geom);

/// First matching rule wins: Oversized, OutsidePetalRegion, FlatObject,
/// ElongatedObject, TrappedAir, otherwise Feasible with a full phase trace.
GraspOutcome grasp_feasibility(const GraspScenario& scenario, const FeasibilityRules& rules = {});

/// Line pressure while holding, treating the object as a sphere whose radius
/// is the mean of its half height and half diameter.
double holding_pressure(const GraspScenario& scenario, const FrictionModel& fric, double g = kGravity);

/// Evaluates scenarios in parallel; output order follows input order.
std::vector<GraspOutcome> evaluate_batch(std::span<const GraspScenario> scenarios,
                                         const FeasibilityRules& rules = {});
std::vector<GraspOutcome> evaluate_batch_serial(std::span<const GraspScenario> scenarios,
                                                const FeasibilityRules& rules = {});

// Validation against bundled trial records -----------------------------------

struct ReferenceTrial {
  GraspScenario scenario;
  double success_rate = 0.0;  // 0..1 as published
  std::string provenance;
};

struct ValidationRow {
  std::string label;
  double success_rate = 0.0;
  bool expected_feasible = false;
  GraspOutcome outcome;
  bool agrees = false;
};

struct ValidationReport {
  std::string dataset;
  std::vector<ValidationRow> rows;

  std::size_t agreements() const;
};

/// A trial counts as expected-feasible when its success rate is >= 50%.
ValidationReport validate_trials(std::string dataset, std::span<const ReferenceTrial> trials,
                                 const FeasibilityRules& rules = {});

/// Runs validate_trials on a bundled dataset ("table2_objects" /
/// "table3_submersion", or the short forms "table2" / "table3"). Throws
/// DomainError for unknown ids.
ValidationReport validate_against_reference(std::string_view dataset_id,
                                            const FeasibilityRules& rules = {});

}  // namespace softgrip
