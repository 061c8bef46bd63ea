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

#include "softgrip/grasp_engine.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "softgrip/error.hpp"
#include "softgrip/reference_data.hpp"

namespace softgrip {
namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

double phase_height(Phase phase, const GraspScenario& s) {
  switch (phase) {
    case Phase::Approaching: return 0.0;
    case Phase::Lifting: return s.lift_height;
    case Phase::Holding: return s.hold_height;
  }
  return 0.0;
}

std::vector<PhaseSample> simulate_trace(const GraspScenario& s, int steps) {
  const auto& geom = s.gripper;
  const double dt = geom.full_close_angle / geom.rotation_speed / std::max(1, steps);
  std::vector<PhaseSample> trace;
  GraspState state{Phase::Approaching, 0.0, true};
  trace.push_back({state.phase, state.angle, coverage(state.angle, geom), 0.0});
  // The last step can land a hair short of the closing angle in floating
  // point, so allow one extra step before giving up.
  for (int i = 0; i <= steps && state.phase != Phase::Holding; ++i) {
    state = step_phase(state, dt, geom);
    trace.push_back({state.phase, state.angle, coverage(state.angle, geom), phase_height(state.phase, s)});
  }
  return trace;
}

}  // namespace

GripperGeometry GripperGeometry::from_preset(std::string_view preset) {
  double inches = 0.0;
  if (preset == "2in")
    inches = 2.0;
  else if (preset == "4in")
    inches = 4.0;
  else if (preset == "8in")
    inches = 8.0;
  else
    throw DomainError("unknown gripper preset '" + std::string(preset) + "' (expected 2in, 4in or 8in)");
  GripperGeometry g;
  g.aperture_diameter = inches * kMetersPerInch;
  return g;
}

void GripperGeometry::validate() const {
  if (!positive_finite(aperture_diameter) || !positive_finite(full_close_angle) ||
      !positive_finite(rotation_speed))
    throw ValidationError("gripper aperture, close angle and rotation speed must be positive");
}

std::string_view to_string(ShapeClass shape) {
  switch (shape) {
    case ShapeClass::Sphere: return "sphere";
    case ShapeClass::Cylinder: return "cylinder";
    case ShapeClass::Flat: return "flat";
    case ShapeClass::Elongated: return "elongated";
    case ShapeClass::Granular: return "granular";
    case ShapeClass::Deformable: return "deformable";
  }
  return "sphere";
}

std::optional<ShapeClass> shape_from_string(std::string_view name) {
  for (auto s : {ShapeClass::Sphere, ShapeClass::Cylinder, ShapeClass::Flat, ShapeClass::Elongated,
                 ShapeClass::Granular, ShapeClass::Deformable})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

void ObjectDescriptor::validate() const {
  if (!positive_finite(height) || !positive_finite(diameter))
    throw ValidationError("object '" + label + "' needs positive height and diameter");
  if (!std::isfinite(mass) || mass < 0.0) throw ValidationError("object '" + label + "' has negative mass");
}

void GraspScenario::validate() const {
  gripper.validate();
  object.validate();
  if (!(submersion_fraction >= 0.0 && submersion_fraction <= 1.0))
    throw ValidationError("submersion fraction must lie in [0, 1]");
  if (!std::isfinite(air_support_kpa) || air_support_kpa < 0.0)
    throw ValidationError("air support must be non-negative");
  if (!(lift_height >= 0.0) || !(hold_height >= 0.0) || !std::isfinite(lift_height) ||
      !std::isfinite(hold_height))
    throw ValidationError("lift and hold heights must be non-negative");
  if (!std::isfinite(lateral_offset) || lateral_offset < 0.0)
    throw ValidationError("lateral offset must be non-negative");
}

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::Approaching: return "approaching";
    case Phase::Lifting: return "lifting";
    case Phase::Holding: return "holding";
  }
  return "approaching";
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::Feasible ? "feasible" : "infeasible";
}

std::string_view to_string(ReasonCode reason) {
  switch (reason) {
    case ReasonCode::OK: return "ok";
    case ReasonCode::Oversized: return "oversized";
    case ReasonCode::FlatObject: return "flat_object";
    case ReasonCode::ElongatedObject: return "elongated_object";
    case ReasonCode::TrappedAir: return "trapped_air";
    case ReasonCode::OutsidePetalRegion: return "outside_petal_region";
  }
  return "ok";
}

double coverage(double angle, const GripperGeometry& geom) {
  if (!(angle > 0.0)) return 0.0;
  return std::min(1.0, angle / geom.full_close_angle);
}

GraspState step_phase(const GraspState& state, double dt, const GripperGeometry& geom) {
  if (!positive_finite(dt)) throw DomainError("time step must be positive");
  GraspState next = state;
  if (next.phase == Phase::Approaching) {
    if (!next.object_in_region) return next;
    next.phase = Phase::Lifting;
  }
  next.angle += geom.rotation_speed * dt;
  if (next.phase == Phase::Lifting && coverage(next.angle, geom) >= 1.0) next.phase = Phase::Holding;
  return next;
}

GraspOutcome grasp_feasibility(const GraspScenario& s, const FeasibilityRules& rules) {
  s.validate();
  GraspOutcome out;
  out.scenario_id = s.id;

  const double aperture = s.gripper.aperture_diameter;
  const double air_threshold =
      s.rotate_while_approaching ? rules.trapped_air_threshold_rotating : rules.trapped_air_threshold;

  auto reject = [&](ReasonCode reason) {
    out.verdict = Verdict::Infeasible;
    out.reason = reason;
    out.trace.push_back({Phase::Approaching, 0.0, 0.0, 0.0});
    return out;
  };

  if (s.object.diameter >= aperture) return reject(ReasonCode::Oversized);
  if (s.lateral_offset + 0.5 * s.object.diameter > 0.5 * aperture)
    return reject(ReasonCode::OutsidePetalRegion);
  if (s.object.shape == ShapeClass::Flat) return reject(ReasonCode::FlatObject);
  if (s.object.shape == ShapeClass::Elongated && s.object.height > rules.elongated_ratio * aperture)
    return reject(ReasonCode::ElongatedObject);
  if (s.submersion_fraction >= air_threshold) return reject(ReasonCode::TrappedAir);

  out.trace = simulate_trace(s, rules.trace_steps);
  return out;
}

double holding_pressure(const GraspScenario& s, const FrictionModel& fric, double g) {
  s.object.validate();
  const SphericalObject sphere{s.object.mass, 0.25 * (s.object.height + s.object.diameter)};
  return line_pressure_closed_form(sphere, fric, g);
}

std::vector<GraspOutcome> evaluate_batch(std::span<const GraspScenario> scenarios,
                                         const FeasibilityRules& rules) {
  for (const auto& s : scenarios) s.validate();
  std::vector<GraspOutcome> out(scenarios.size());
  const auto n = static_cast<long long>(scenarios.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = grasp_feasibility(scenarios[k], rules);
  }
  return out;
}

std::vector<GraspOutcome> evaluate_batch_serial(std::span<const GraspScenario> scenarios,
                                                const FeasibilityRules& rules) {
  std::vector<GraspOutcome> out;
  out.reserve(scenarios.size());
  for (const auto& s : scenarios) out.push_back(grasp_feasibility(s, rules));
  return out;
}

std::size_t ValidationReport::agreements() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.agrees; }));
}

ValidationReport validate_trials(std::string dataset, std::span<const ReferenceTrial> trials,
                                 const FeasibilityRules& rules) {
  ValidationReport report;
  report.dataset = std::move(dataset);
  std::vector<GraspScenario> scenarios;
  for (const auto& t : trials) scenarios.push_back(t.scenario);
  auto outcomes = evaluate_batch(scenarios, rules);
  for (std::size_t i = 0; i < trials.size(); ++i) {
    ValidationRow row;
    row.label = trials[i].scenario.id;
    row.success_rate = trials[i].success_rate;
    row.expected_feasible = trials[i].success_rate >= 0.5;
    row.outcome = std::move(outcomes[i]);
    row.agrees = row.expected_feasible == (row.outcome.verdict == Verdict::Feasible);
    report.rows.push_back(std::move(row));
  }
  return report;
}

ValidationReport validate_against_reference(std::string_view dataset_id, const FeasibilityRules& rules) {
  const auto id = parse_dataset_id(dataset_id);
  if (!id || (*id != DatasetId::Table2Objects && *id != DatasetId::Table3Submersion))
    throw DomainError("unknown grasp dataset '" + std::string(dataset_id) +
                      "' (expected table2_objects or table3_submersion)");
  const auto trials = reference_trials(*id);
  return validate_trials(std::string(dataset_name(*id)), trials, rules);
}

}  // namespace softgrip
