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

// Static line-pressure model for a sphere held in the skin.
//
// The object is a sphere of radius r, the skin covers at least its bottom
// half, and pressure is uniform over each half. Projecting skin reaction and
// friction onto the vertical axis at rest gives
//
//   m g = 4 pi * integral_0^r x (p_b (sin a + k cos a) + p_t (k cos a - sin a)) dx
//
// with sin a = sqrt(r^2 - x^2) / r and cos a = x / r. Dropping the top half
// (p_t = 0) and integrating yields the closed form
//
//   p_b = 3 m g / (4 pi (1 + k) r^2).

#include <cstddef>

#include "softgrip/units.hpp"

namespace softgrip {

inline constexpr std::size_t kDefaultQuadratureIntervals = 100000;

struct SphericalObject {
  double mass = 0.0;    // kg
  double radius = 0.0;  // m

  /// Throws DomainError unless mass >= 0 and radius > 0, both finite.
  void validate() const;
};

struct FrictionModel {
  double k = 0.0;  // object/skin friction coefficient, 0 <= k < 1

  void validate() const;
};

struct PressureComponents {
  double vertical = 0.0;    // p sin a
  double horizontal = 0.0;  // p cos a
};

/// Line pressures (N/m) on the two halves of the sphere.
struct PressureDistribution {
  double bottom = 0.0;
  double top = 0.0;

  void validate() const;
  PressureComponents bottom_at(double alpha) const;
  PressureComponents top_at(double alpha) const;
};

struct EquilibriumCheck {
  double gravity_accel = kGravity;
  double residual_force = 0.0;  // N, weight minus integrated vertical support
};

double line_pressure_closed_form(const SphericalObject& obj, const FrictionModel& fric,
                                 double g = kGravity);

/// Same quantity with the support integral evaluated by the composite
/// trapezoid rule on a uniform grid of `n_intervals` cells. The integrand has
/// an infinite slope at x = r, which limits convergence to roughly O(h^1.5);
/// at the default 1e5 intervals the relative error is below 1e-7.
double line_pressure_quadrature(const SphericalObject& obj, const FrictionModel& fric,
                                double g = kGravity,
                                std::size_t n_intervals = kDefaultQuadratureIntervals);

/// Trapezoid estimate of integral_0^r (sqrt(r^2 - x^2)/r + k x/r) x dx.
double support_integral_quadrature(double radius, double k, std::size_t n_intervals);

/// Splits p into (p sin a, p cos a); a must lie in [0, pi/2].
PressureComponents pressure_components(double p, double alpha);

/// Weight minus the integrated vertical support of `dist`, evaluated by
/// quadrature. A non-zero top pressure enters with weight (k cos a - sin a).
EquilibriumCheck equilibrium_residual(const SphericalObject& obj, const FrictionModel& fric,
                                      const PressureDistribution& dist, double g = kGravity,
                                      std::size_t n_intervals = kDefaultQuadratureIntervals);

}  // namespace softgrip
