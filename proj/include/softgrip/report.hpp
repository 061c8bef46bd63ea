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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace softgrip {

inline constexpr int kReportFormatVersion = 1;

struct Metric {
  std::string key;
  nlohmann::json value;  // number, string or bool
  std::string unit;      // "1" for dimensionless, never empty
};

struct ReportSection {
  std::string title;
  std::vector<Metric> metrics;
  std::optional<std::string> plot;  // relative path

  ReportSection& add(std::string key, nlohmann::json value, std::string unit);
};

struct Report {
  int format_version = kReportFormatVersion;
  std::vector<ReportSection> sections;

  /// Every metric has a unit and every plot path is relative.
  void validate() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace softgrip
