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

#include "softgrip/reference_data.hpp"

#include <string>

#include "softgrip/error.hpp"
#include "softgrip/resources.hpp"

namespace softgrip {

std::string_view dataset_name(DatasetId id) {
  switch (id) {
    case DatasetId::Table1Payload: return "table1_payload";
    case DatasetId::Table2Objects: return "table2_objects";
    case DatasetId::Table3Submersion: return "table3_submersion";
    case DatasetId::DurabilityConstants: return "durability_constants";
  }
  return "";
}

std::optional<DatasetId> parse_dataset_id(std::string_view name) {
  if (name == "table1") return DatasetId::Table1Payload;
  if (name == "table2") return DatasetId::Table2Objects;
  if (name == "table3") return DatasetId::Table3Submersion;
  if (name == "durability") return DatasetId::DurabilityConstants;
  for (auto id : kAllDatasets)
    if (dataset_name(id) == name) return id;
  return std::nullopt;
}

std::string_view bundled_resource(DatasetId id) {
  switch (id) {
    case DatasetId::Table1Payload: return resources::kTable1Payload;
    case DatasetId::Table2Objects: return resources::kTable2Objects;
    case DatasetId::Table3Submersion: return resources::kTable3Submersion;
    case DatasetId::DurabilityConstants: return resources::kDurabilityConstants;
  }
  return {};
}

nlohmann::json load_dataset(DatasetId id) { return nlohmann::json::parse(bundled_resource(id)); }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t dataset_checksum(DatasetId id) { return fnv1a64(load_dataset(id).dump()); }

PayloadRecord payload_record() {
  const auto row = load_dataset(DatasetId::Table1Payload).at("rows").at(0);
  return {row.at("version").get<std::string>(), row.at("weight_kg").get<double>(),
          row.at("max_payload_kgf").get<double>(), row.at("payload_to_weight_percent").get<double>()};
}

DurabilityConstants durability_constants() {
  const auto j = load_dataset(DatasetId::DurabilityConstants);
  DurabilityConstants c;
  c.open_close_trials = j.at("open_close_trials").get<long long>();
  for (double pct : j.at("cut_fractions_percent")) c.cut_fractions.push_back(pct / 100.0);
  c.test_ball_mass_kg = j.at("test_ball").at("mass_g").get<double>() / 1000.0;
  c.test_ball_diameter_m = j.at("test_ball").at("diameter_mm").get<double>() / 1000.0;
  c.gripper_preset = j.at("gripper").get<std::string>();
  return c;
}

namespace {

ShapeClass shape_of(const nlohmann::json& j) {
  const auto name = j.at("shape").get<std::string>();
  const auto shape = shape_from_string(name);
  if (!shape) throw ParseError("unknown shape class '" + name + "' in bundled dataset");
  return *shape;
}

}  // namespace

std::vector<ReferenceTrial> reference_trials(DatasetId id) {
  if (id != DatasetId::Table2Objects && id != DatasetId::Table3Submersion)
    throw DomainError("dataset '" + std::string(dataset_name(id)) + "' holds no grasp trials");
  const auto j = load_dataset(id);
  const auto gripper = GripperGeometry::from_preset(j.at("gripper").get<std::string>());
  std::vector<ReferenceTrial> trials;

  if (id == DatasetId::Table2Objects) {
    for (const auto& row : j.at("rows")) {
      ReferenceTrial t;
      t.scenario.id = row.at("label").get<std::string>();
      t.scenario.gripper = gripper;
      auto& obj = t.scenario.object;
      obj.label = t.scenario.id;
      obj.shape = shape_of(row);
      obj.mass = row.at("mass_g").get<double>() / 1000.0;
      obj.height = row.at("height_mm").get<double>() / 1000.0;
      obj.diameter = row.at("diameter_mm").get<double>() / 1000.0;
      t.success_rate = row.at("success_rate").get<double>();
      t.provenance = row.at("provenance").get<std::string>();
      trials.push_back(std::move(t));
    }
  } else {
    const auto& o = j.at("object");
    ObjectDescriptor obj;
    obj.label = o.at("label").get<std::string>();
    obj.shape = shape_of(o);
    obj.height = o.at("height_mm").get<double>() / 1000.0;
    obj.diameter = o.at("diameter_mm").get<double>() / 1000.0;
    for (const auto& row : j.at("rows")) {
      ReferenceTrial t;
      const double pct = row.at("submersion_percent").get<double>();
      t.scenario.id = obj.label + " @ " + std::to_string(static_cast<int>(pct)) + "% submerged";
      t.scenario.gripper = gripper;
      t.scenario.object = obj;
      t.scenario.submersion_fraction = pct / 100.0;
      t.success_rate = row.at("success_rate").get<double>();
      t.provenance = row.at("provenance").get<std::string>();
      trials.push_back(std::move(t));
    }
  }
  return trials;
}

}  // namespace softgrip
