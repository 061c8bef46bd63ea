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

// Equivalent-spring model of vertical skin deformation.
//
// The buckled skin is replaced by a spring of constant cross-section
// A = V_s / h0 and base stiffness k0, so P = k0 * A * dh. Loading runs through
// two regimes: a soft self-balancing zone (multiplier k1) while the skin is
// still wrapping the object, then a stiffer stable zone (multiplier k2). In
// strain units (dh / h0) the load is continuous and piecewise linear:
//
//   P(e) = S1 * e                       e <= e_t
//   P(e) = S1 * e_t + S2 * (e - e_t)    e >  e_t,     S_i = k_i * k0 * V_s / h0.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "softgrip/units.hpp"

namespace softgrip {

struct SkinSpec {
  double skin_volume = 1.0;     // m^3
  double skin_height = 1.0;     // m
  double base_stiffness = 1.0;  // k0
  double zone1_coeff = 0.0;     // k1
  double zone2_coeff = 0.0;     // k2
  double transition_strain = 0.0;

  /// Spec with unit V_s, h0 and k0, so the zone coefficients are the lumped
  /// slopes directly.
  static SkinSpec from_slopes(double slope1, double slope2, double transition_strain);

  double cross_section() const { return skin_volume / skin_height; }
  double slope1() const { return zone1_coeff * base_stiffness * cross_section(); }
  double slope2() const { return zone2_coeff * base_stiffness * cross_section(); }
  double transition_load() const { return slope1() * transition_strain; }

  /// All fields positive and finite, k2 > k1.
  void validate() const;
};

struct PayloadSample {
  double strain = 0.0;  // dh / h0, or metres when read with StrainUnit::Meters
  double load = 0.0;    // N
};

struct PayloadCurve {
  std::vector<PayloadSample> samples;
  std::string source;

  /// Strain strictly increasing, every value finite, loads non-negative.
  /// Throws ValidationError naming the offending sample.
  void validate() const;

  /// Whether loads are also non-decreasing. Measured curves usually are, but
  /// gauge noise can produce small dips, so this is reported rather than
  /// enforced.
  bool loads_non_decreasing() const;
};

enum class StrainUnit { Normalized, Meters };

struct FitOptions {
  StrainUnit unit = StrainUnit::Normalized;
  double skin_height = 0.0;          // required when unit == Meters
  double degenerate_tolerance = 0.02;  // relative slope difference
  int refinement = 10;
  bool parallel = true;
};

struct LoadPrediction {
  double load = 0.0;
  bool extrapolated = false;
};

struct ZoneFit {
  double slope1 = 0.0;      // N per unit strain
  double slope2 = 0.0;
  double breakpoint = 0.0;  // normalized strain
  double rms_relative_error = 0.0;
  bool degenerate = false;  // breakpoint is meaningless when set
  double sse = 0.0;
  std::size_t sample_count = 0;
  double max_strain = 0.0;  // last fitted sample, normalized

  /// Fitted curve evaluated at `strain`; flags strains beyond the data.
  LoadPrediction predict(double strain) const;

  /// Lumped spec; throws DomainError when degenerate or not stiffening.
  SkinSpec to_spec() const;
};

double predict_load(double strain, const SkinSpec& spec);
double predict_strain(double load, const SkinSpec& spec);

/// Continuous two-segment least-squares fit through the origin. Throws
/// FitError with fewer than 4 samples and ValidationError on a curve that
/// violates PayloadCurve::validate().
ZoneFit fit_zones(const PayloadCurve& curve, const FitOptions& options = {});

double estimate_object_mass(double strain, const SkinSpec& spec, double g = kGravity);

/// Samples `spec` at `count` evenly spaced strains on [0, max_strain]. With
/// relative_noise > 0 each load is multiplied by (1 + relative_noise * N(0,1))
/// and clamped at zero.
PayloadCurve sample_payload_curve(const SkinSpec& spec, std::size_t count, double max_strain,
                                  double relative_noise = 0.0, std::uint64_t seed = 0);

}  // namespace softgrip
