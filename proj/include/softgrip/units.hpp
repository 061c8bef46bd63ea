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

namespace softgrip {

/// Gravitational acceleration used throughout, in m/s^2. 9.81 is the value
/// under which 328.7 N and 33.51 kgf describe the same load.
inline constexpr double kGravity = 9.81;

inline constexpr double kPi = 3.14159265358979323846;

inline constexpr double kMetersPerInch = 0.0254;

enum class ForceDirection { NewtonsToKgf, KgfToNewtons };

/// Converts between newtons and kilogram-force using kGravity.
double newtons_kgf_convert(double value, ForceDirection direction);

/// 100 * max_payload / gripper_weight. Both in kg(f); throws DomainError on
/// non-positive or non-finite inputs.
double payload_to_weight_ratio(double max_payload_kgf, double gripper_weight_kg);

}  // namespace softgrip
