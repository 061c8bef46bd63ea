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

// Files in and out: payload CSV, JSON documents for every domain type.
//
// Payload CSV:
//   # comment lines start with '#'
//   strain,force_n
//   0,0
//   0.5,40
// strain is a fraction of skin height (1.0 = 100%), force in newtons.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "softgrip/grasp_engine.hpp"
#include "softgrip/skin_spring.hpp"
#include "softgrip/tactile.hpp"

namespace softgrip {

inline constexpr std::string_view kPayloadCsvHeader = "strain,force_n";

/// Parses payload CSV text. Malformed rows raise ParseError with the line
/// number; a non-monotone strain column raises ValidationError.
PayloadCurve parse_payload_csv(std::string_view text, std::string source = "csv");
std::string format_payload_csv(const PayloadCurve& curve);

PayloadCurve read_payload_csv(const std::filesystem::path& path);
void write_payload_csv(const std::filesystem::path& path, const PayloadCurve& curve);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

nlohmann::json read_json_file(const std::filesystem::path& path);

/// Shortest text that parses back to exactly `value`.
std::string format_double(double value);

// JSON mapping. Readers throw ParseError on missing or mistyped fields.

void to_json(nlohmann::json& j, const SkinSpec& spec);
void from_json(const nlohmann::json& j, SkinSpec& spec);
void to_json(nlohmann::json& j, const ZoneFit& fit);
void from_json(const nlohmann::json& j, ZoneFit& fit);
void to_json(nlohmann::json& j, const PayloadCurve& curve);

void to_json(nlohmann::json& j, const GripperGeometry& g);
void to_json(nlohmann::json& j, const ObjectDescriptor& o);
void to_json(nlohmann::json& j, const GraspScenario& s);
void to_json(nlohmann::json& j, const GraspOutcome& o);
void to_json(nlohmann::json& j, const ValidationReport& r);

GraspScenario scenario_from_json(const nlohmann::json& j);
/// A single scenario object, an array of them, or {"scenarios": [...]}.
std::vector<GraspScenario> scenarios_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const MarkerLayout& layout);
MarkerLayout layout_from_json(const nlohmann::json& j);
Deformation deformation_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const MarkerTruth& t);
void to_json(nlohmann::json& j, const MarkerSet& set);
MarkerSet marker_set_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const DisplacementField& field);
DisplacementField displacement_field_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const ContactSummary& s);

}  // namespace softgrip
