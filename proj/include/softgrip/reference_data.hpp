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

// Published measurements bundled as versioned JSON resources.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "softgrip/grasp_engine.hpp"

namespace softgrip {

enum class DatasetId { Table1Payload, Table2Objects, Table3Submersion, DurabilityConstants };

inline constexpr DatasetId kAllDatasets[] = {DatasetId::Table1Payload, DatasetId::Table2Objects,
                                             DatasetId::Table3Submersion, DatasetId::DurabilityConstants};

std::string_view dataset_name(DatasetId id);

/// Accepts the full names and the short aliases table1/table2/table3/durability.
std::optional<DatasetId> parse_dataset_id(std::string_view name);

/// The bundled resource text, byte for byte.
std::string_view bundled_resource(DatasetId id);

nlohmann::json load_dataset(DatasetId id);

/// FNV-1a (64 bit) over the compact serialization of the parsed resource.
std::uint64_t dataset_checksum(DatasetId id);
std::uint64_t fnv1a64(std::string_view bytes);

struct PayloadRecord {
  std::string version;
  double weight_kg = 0.0;
  double max_payload_kgf = 0.0;
  double published_ratio_percent = 0.0;
};

PayloadRecord payload_record();

struct DurabilityConstants {
  long long open_close_trials = 0;
  std::vector<double> cut_fractions;  // of skin height
  double test_ball_mass_kg = 0.0;
  double test_ball_diameter_m = 0.0;
  std::string gripper_preset;
};

DurabilityConstants durability_constants();

/// Grasp trials converted to SI scenarios. Only the two grasp datasets are
/// accepted; anything else throws DomainError.
std::vector<ReferenceTrial> reference_trials(DatasetId id);

}  // namespace softgrip
