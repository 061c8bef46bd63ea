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

#include <gtest/gtest.h>

#include <random>

#include "softgrip/error.hpp"
#include "softgrip/grasp_engine.hpp"

namespace softgrip {
namespace {

GraspScenario scenario(ShapeClass shape, double height_mm, double diameter_mm, double mass_g,
                       std::string_view preset = "4in") {
  GraspScenario s;
  s.id = "obj";
  s.gripper = GripperGeometry::from_preset(preset);
  s.object = {shape, height_mm / 1000.0, diameter_mm / 1000.0, mass_g / 1000.0, "obj"};
  s.lift_height = 0.05;
  s.hold_height = 0.2;
  return s;
}

TEST(GripperPresets, InchesToMeters) {
  EXPECT_NEAR(GripperGeometry::from_preset("2in").aperture_diameter, 0.0508, 1e-12);
  EXPECT_NEAR(GripperGeometry::from_preset("4in").aperture_diameter, 0.1016, 1e-12);
  EXPECT_NEAR(GripperGeometry::from_preset("8in").aperture_diameter, 0.2032, 1e-12);
  EXPECT_THROW(GripperGeometry::from_preset("3in"), DomainError);
}

TEST(StepPhase, StartsApproachingWithNoCoverage) {
  const GripperGeometry g;
  GraspState s;
  EXPECT_EQ(s.phase, Phase::Approaching);
  EXPECT_EQ(coverage(s.angle, g), 0.0);
  const auto next = step_phase(s, 0.1, g);  // object not in region yet
  EXPECT_EQ(next.phase, Phase::Approaching);
  EXPECT_EQ(next.angle, 0.0);
}

TEST(StepPhase, SaturatesIntoHolding) {
  const GripperGeometry g;
  GraspState s{Phase::Lifting, 0.0, true};
  s = step_phase(s, g.full_close_angle / g.rotation_speed, g);
  EXPECT_DOUBLE_EQ(coverage(s.angle, g), 1.0);
  EXPECT_EQ(s.phase, Phase::Holding);
  s = step_phase(s, 0.5, g);
  EXPECT_EQ(s.phase, Phase::Holding);
  EXPECT_EQ(coverage(s.angle, g), 1.0);
}

TEST(StepPhase, TwoHalfStepsEqualOneStep) {
  const GripperGeometry g;
  for (double dt : {0.01, 0.3, 1.7}) {
    const GraspState start{Phase::Approaching, 0.0, true};
    const auto two = step_phase(step_phase(start, dt, g), dt, g);
    const auto one = step_phase(start, 2 * dt, g);
    EXPECT_NEAR(two.angle, one.angle, 1e-12);
    EXPECT_EQ(two.phase, one.phase);
  }
}

TEST(StepPhase, RejectsNonPositiveStep) {
  EXPECT_THROW(step_phase({}, 0.0, {}), DomainError);
  EXPECT_THROW(step_phase({}, -1.0, {}), DomainError);
}

TEST(GraspFeasibility, CoffeeCanIsFeasibleWithFullTrace) {
  const auto out = grasp_feasibility(scenario(ShapeClass::Cylinder, 105, 53, 216));
  EXPECT_EQ(out.verdict, Verdict::Feasible);
  EXPECT_EQ(out.reason, ReasonCode::OK);
  ASSERT_GE(out.trace.size(), 3u);
  EXPECT_EQ(out.trace.front().phase, Phase::Approaching);
  EXPECT_EQ(out.trace.back().phase, Phase::Holding);
  EXPECT_EQ(out.trace.back().coverage, 1.0);
  EXPECT_EQ(out.trace.back().height, 0.2);
  for (std::size_t i = 1; i < out.trace.size(); ++i) {
    EXPECT_GE(out.trace[i].coverage, out.trace[i - 1].coverage);
    EXPECT_LE(out.trace[i].coverage, 1.0);
  }
}

TEST(GraspFeasibility, CdIsFlat) {
  // 120 mm disc: needs the 8-inch aperture, otherwise it is simply oversized.
  const auto out = grasp_feasibility(scenario(ShapeClass::Flat, 1.2, 120, 16, "8in"));
  EXPECT_EQ(out.verdict, Verdict::Infeasible);
  EXPECT_EQ(out.reason, ReasonCode::FlatObject);
  EXPECT_EQ(grasp_feasibility(scenario(ShapeClass::Flat, 1.2, 120, 16, "4in")).reason, ReasonCode::Oversized);
}

TEST(GraspFeasibility, OversizedBeatsEverythingElse) {
  auto s = scenario(ShapeClass::Sphere, 150, 150, 500);
  s.submersion_fraction = 1.0;
  EXPECT_EQ(grasp_feasibility(s).reason, ReasonCode::Oversized);
  // Diameter equal to the aperture is already too big.
  EXPECT_EQ(grasp_feasibility(scenario(ShapeClass::Sphere, 50, 101.6, 10)).reason, ReasonCode::Oversized);
}

TEST(GraspFeasibility, OffsetOutsidePetalRegion) {
  auto s = scenario(ShapeClass::Sphere, 60, 60, 100);
  s.lateral_offset = 0.025;  // 25 + 30 > 50.8 mm
  EXPECT_EQ(grasp_feasibility(s).reason, ReasonCode::OutsidePetalRegion);
  s.lateral_offset = 0.02;
  EXPECT_EQ(grasp_feasibility(s).verdict, Verdict::Feasible);
}

TEST(GraspFeasibility, ElongatedRatio) {
  // Salt container: 238 mm tall with a 101.6 mm aperture is within 2.5x.
  EXPECT_EQ(grasp_feasibility(scenario(ShapeClass::Elongated, 238, 56, 235)).verdict, Verdict::Feasible);
  EXPECT_EQ(grasp_feasibility(scenario(ShapeClass::Elongated, 600, 30, 200)).reason, ReasonCode::ElongatedObject);
  FeasibilityRules strict;
  strict.elongated_ratio = 2.0;
  EXPECT_EQ(grasp_feasibility(scenario(ShapeClass::Elongated, 238, 56, 235), strict).reason,
            ReasonCode::ElongatedObject);
}

TEST(GraspFeasibility, SubmergedEgg) {
  auto s = scenario(ShapeClass::Deformable, 52, 45, 50);
  for (double f : {0.0, 0.3}) {
    s.submersion_fraction = f;
    EXPECT_EQ(grasp_feasibility(s).verdict, Verdict::Feasible) << f;
  }
  for (double f : {0.6, 0.9}) {
    s.submersion_fraction = f;
    EXPECT_EQ(grasp_feasibility(s).reason, ReasonCode::TrappedAir) << f;
  }
  s.rotate_while_approaching = true;
  s.submersion_fraction = 0.6;
  EXPECT_EQ(grasp_feasibility(s).verdict, Verdict::Feasible);
  s.submersion_fraction = 0.9;
  EXPECT_EQ(grasp_feasibility(s).reason, ReasonCode::TrappedAir);
}

TEST(GraspFeasibility, InvalidScenarioThrows) {
  auto s = scenario(ShapeClass::Sphere, 50, 50, 10);
  s.submersion_fraction = 1.5;
  EXPECT_THROW(grasp_feasibility(s), ValidationError);
  s = scenario(ShapeClass::Sphere, 0, 50, 10);
  EXPECT_THROW(grasp_feasibility(s), ValidationError);
}

TEST(GraspFeasibilityProperties, MassNeverChangesVerdictAndInfeasibleHasReason) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const ShapeClass shapes[] = {ShapeClass::Sphere,    ShapeClass::Cylinder, ShapeClass::Flat,
                               ShapeClass::Elongated, ShapeClass::Granular, ShapeClass::Deformable};
  for (int i = 0; i < 500; ++i) {
    auto s = scenario(shapes[i % 6], 5 + 400 * u(rng), 5 + 150 * u(rng), 1000 * u(rng));
    s.submersion_fraction = u(rng);
    s.lateral_offset = 0.03 * u(rng);
    const auto a = grasp_feasibility(s);
    s.object.mass *= 37.0;
    const auto b = grasp_feasibility(s);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.reason, b.reason);
    EXPECT_EQ(a.verdict == Verdict::Infeasible, a.reason != ReasonCode::OK);
    for (std::size_t k = 1; k < a.trace.size(); ++k) EXPECT_GE(a.trace[k].coverage, a.trace[k - 1].coverage);
  }
}

TEST(EvaluateBatch, ParallelMatchesSerialInInputOrder) {
  std::vector<GraspScenario> batch;
  for (int i = 0; i < 64; ++i) {
    auto s = scenario(i % 3 == 0 ? ShapeClass::Flat : ShapeClass::Sphere, 40 + i, 20 + 2 * i, 100);
    s.id = "s" + std::to_string(i);
    s.submersion_fraction = (i % 10) / 10.0;
    batch.push_back(s);
  }
  const auto a = evaluate_batch(batch);
  const auto b = evaluate_batch_serial(batch);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].scenario_id, batch[i].id);
    EXPECT_EQ(a[i].reason, b[i].reason);
    EXPECT_EQ(a[i].trace.size(), b[i].trace.size());
  }
}

TEST(HoldingPressure, ChickenEgg) {
  // 57 g, 42 x 60 mm -> effective radius 25.5 mm. Frozen from an adaptive
  // quadrature of the support integral.
  const auto s = scenario(ShapeClass::Sphere, 42, 60, 57);
  EXPECT_NEAR(holding_pressure(s, {0.5}), 136.86223687611712, 1e-9 * 136.9);
}

TEST(HoldingPressure, ZeroMassAndRadiusScaling) {
  EXPECT_EQ(holding_pressure(scenario(ShapeClass::Sphere, 50, 50, 0), {0.3}), 0.0);
  const double big = holding_pressure(scenario(ShapeClass::Sphere, 80, 80, 100), {0.3});
  const double small = holding_pressure(scenario(ShapeClass::Sphere, 40, 40, 100), {0.3});
  EXPECT_NEAR(small, 4.0 * big, 1e-12 * small);
  EXPECT_THROW(holding_pressure(scenario(ShapeClass::Sphere, 50, 50, 10), {1.2}), DomainError);
}

TEST(ValidateAgainstReference, Table2AllFeasible) {
  const auto r = validate_against_reference("table2");
  EXPECT_EQ(r.rows.size(), 8u);
  EXPECT_EQ(r.agreements(), 8u);
}

TEST(ValidateAgainstReference, Table3ThresholdSplit) {
  const auto r = validate_against_reference("table3_submersion");
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(r.agreements(), 4u);
  EXPECT_EQ(r.rows[0].outcome.verdict, Verdict::Feasible);
  EXPECT_EQ(r.rows[1].outcome.verdict, Verdict::Feasible);
  EXPECT_EQ(r.rows[2].outcome.reason, ReasonCode::TrappedAir);
  EXPECT_EQ(r.rows[3].outcome.reason, ReasonCode::TrappedAir);
}

TEST(ValidateAgainstReference, EmptyAndUnknown) {
  const auto r = validate_trials("empty", {});
  EXPECT_TRUE(r.rows.empty());
  EXPECT_EQ(r.agreements(), 0u);
  EXPECT_THROW(validate_against_reference("table9"), DomainError);
  EXPECT_THROW(validate_against_reference("table1_payload"), DomainError);
}

}  // namespace
}  // namespace softgrip
