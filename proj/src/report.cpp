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

#include "softgrip/report.hpp"

#include <filesystem>

#include "softgrip/error.hpp"

namespace softgrip {

ReportSection& ReportSection::add(std::string key, nlohmann::json value, std::string unit) {
  metrics.push_back({std::move(key), std::move(value), std::move(unit)});
  return *this;
}

void Report::validate() const {
  for (const auto& s : sections) {
    for (const auto& m : s.metrics)
      if (m.unit.empty()) throw ValidationError("metric '" + m.key + "' in '" + s.title + "' has no unit");
    if (s.plot && std::filesystem::path(*s.plot).is_absolute())
      throw ValidationError("plot path '" + *s.plot + "' must be relative");
  }
}

nlohmann::json Report::to_json() const {
  validate();
  auto sections_json = nlohmann::json::array();
  for (const auto& s : sections) {
    auto metrics = nlohmann::json::array();
    for (const auto& m : s.metrics) metrics.push_back({{"key", m.key}, {"value", m.value}, {"unit", m.unit}});
    nlohmann::json section{{"title", s.title}, {"metrics", metrics}};
    if (s.plot) section["plot"] = *s.plot;
    sections_json.push_back(std::move(section));
  }
  return {{"format_version", format_version}, {"sections", sections_json}};
}

std::string Report::to_text() const {
  validate();
  std::string out;
  for (const auto& s : sections) {
    out += "== " + s.title + " ==\n";
    for (const auto& m : s.metrics) {
      const auto value = m.value.is_string() ? m.value.get<std::string>() : m.value.dump();
      out += "  " + m.key + ": " + value + (m.unit == "1" ? "" : " " + m.unit) + "\n";
    }
    if (s.plot) out += "  plot: " + *s.plot + "\n";
  }
  return out;
}

}  // namespace softgrip
