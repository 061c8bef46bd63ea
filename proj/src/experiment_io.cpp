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

#include "softgrip/experiment_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <system_error>

#include "softgrip/error.hpp"
#include "softgrip/units.hpp"

namespace softgrip {

using nlohmann::json;

// Units ----------------------------------------------------------------------

double newtons_kgf_convert(double value, ForceDirection direction) {
  if (!std::isfinite(value)) throw DomainError("force must be finite");
  return direction == ForceDirection::NewtonsToKgf ? value / kGravity : value * kGravity;
}

double payload_to_weight_ratio(double max_payload_kgf, double gripper_weight_kg) {
  if (!std::isfinite(max_payload_kgf) || !(max_payload_kgf > 0.0))
    throw DomainError("payload must be positive");
  if (!std::isfinite(gripper_weight_kg) || !(gripper_weight_kg > 0.0))
    throw DomainError("gripper weight must be positive");
  return 100.0 * max_payload_kgf / gripper_weight_kg;
}

// Text helpers ---------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view field, std::size_t line, const char* what) {
  field = trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(std::string("invalid ") + what + " '" + std::string(field) + "'", line);
  return value;
}

template <typename T>
T get_field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return get_field<T>(j, key);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

PayloadCurve parse_payload_csv(std::string_view text, std::string source) {
  PayloadCurve curve;
  curve.source = std::move(source);
  bool header_seen = false;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kPayloadCsvHeader)
        throw ParseError("expected header '" + std::string(kPayloadCsvHeader) + "'", line_no);
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
      throw ParseError("expected two comma-separated fields", line_no);
    const double strain = parse_number(line.substr(0, comma), line_no, "strain");
    const double load = parse_number(line.substr(comma + 1), line_no, "force");
    if (!std::isfinite(strain) || !std::isfinite(load)) throw ParseError("non-finite value", line_no);
    curve.samples.push_back({strain, load});
  }
  if (!header_seen) throw ParseError("missing header '" + std::string(kPayloadCsvHeader) + "'");
  curve.validate();
  return curve;
}

std::string format_payload_csv(const PayloadCurve& curve) {
  std::string out;
  if (!curve.source.empty()) out += "# source: " + curve.source + "\n";
  out += kPayloadCsvHeader;
  out += '\n';
  for (const auto& s : curve.samples) out += format_double(s.strain) + "," + format_double(s.load) + "\n";
  return out;
}

PayloadCurve read_payload_csv(const std::filesystem::path& path) {
  return parse_payload_csv(read_text_file(path), path.filename().string());
}

void write_payload_csv(const std::filesystem::path& path, const PayloadCurve& curve) {
  write_text_file(path, format_payload_csv(curve));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

json read_json_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

// Spring ---------------------------------------------------------------------

void to_json(json& j, const SkinSpec& s) {
  j = json{{"skin_volume", s.skin_volume},       {"skin_height", s.skin_height},
           {"base_stiffness", s.base_stiffness}, {"zone1_coeff", s.zone1_coeff},
           {"zone2_coeff", s.zone2_coeff},       {"transition_strain", s.transition_strain}};
}

void from_json(const json& j, SkinSpec& s) {
  s.skin_volume = get_or(j, "skin_volume", 1.0);
  s.skin_height = get_or(j, "skin_height", 1.0);
  s.base_stiffness = get_or(j, "base_stiffness", 1.0);
  s.zone1_coeff = get_field<double>(j, "zone1_coeff");
  s.zone2_coeff = get_field<double>(j, "zone2_coeff");
  s.transition_strain = get_field<double>(j, "transition_strain");
}

void to_json(json& j, const ZoneFit& f) {
  j = json{{"slope1_n_per_strain", f.slope1},
           {"slope2_n_per_strain", f.slope2},
           {"breakpoint_strain", f.breakpoint},
           {"breakpoint_load_n", f.slope1 * f.breakpoint},
           {"rms_relative_error", f.rms_relative_error},
           {"degenerate", f.degenerate},
           {"sse", f.sse},
           {"sample_count", f.sample_count},
           {"max_strain", f.max_strain}};
}

void from_json(const json& j, ZoneFit& f) {
  f.slope1 = get_field<double>(j, "slope1_n_per_strain");
  f.slope2 = get_field<double>(j, "slope2_n_per_strain");
  f.breakpoint = get_field<double>(j, "breakpoint_strain");
  f.rms_relative_error = get_or(j, "rms_relative_error", 0.0);
  f.degenerate = get_or(j, "degenerate", false);
  f.sse = get_or(j, "sse", 0.0);
  f.sample_count = get_or<std::size_t>(j, "sample_count", 0);
  f.max_strain = get_or(j, "max_strain", f.breakpoint);
}

void to_json(json& j, const PayloadCurve& c) {
  json samples = json::array();
  for (const auto& s : c.samples) samples.push_back({{"strain", s.strain}, {"force_n", s.load}});
  j = json{{"source", c.source}, {"samples", samples}};
}

// Grasp ----------------------------------------------------------------------

void to_json(json& j, const GripperGeometry& g) {
  j = json{{"aperture_diameter", g.aperture_diameter},
           {"full_close_angle", g.full_close_angle},
           {"rotation_speed", g.rotation_speed}};
}

void to_json(json& j, const ObjectDescriptor& o) {
  j = json{{"label", o.label},
           {"shape", std::string(to_string(o.shape))},
           {"height", o.height},
           {"diameter", o.diameter},
           {"mass", o.mass}};
}

void to_json(json& j, const GraspScenario& s) {
  j = json{{"id", s.id},
           {"gripper", s.gripper},
           {"object", s.object},
           {"submersion_fraction", s.submersion_fraction},
           {"air_support_kpa", s.air_support_kpa},
           {"lift_height", s.lift_height},
           {"hold_height", s.hold_height},
           {"lateral_offset", s.lateral_offset},
           {"rotate_while_approaching", s.rotate_while_approaching}};
}

void to_json(json& j, const GraspOutcome& o) {
  json trace = json::array();
  for (const auto& p : o.trace)
    trace.push_back({{"phase", std::string(to_string(p.phase))},
                     {"angle", p.angle},
                     {"coverage", p.coverage},
                     {"height", p.height}});
  j = json{{"scenario", o.scenario_id},
           {"verdict", std::string(to_string(o.verdict))},
           {"reason", std::string(to_string(o.reason))},
           {"phase_trace", trace}};
}

void to_json(json& j, const ValidationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"label", row.label},
                    {"success_rate", row.success_rate},
                    {"expected", row.expected_feasible ? "feasible" : "infeasible"},
                    {"predicted", std::string(to_string(row.outcome.verdict))},
                    {"reason", std::string(to_string(row.outcome.reason))},
                    {"agrees", row.agrees}});
  j = json{{"dataset", r.dataset}, {"agreements", r.agreements()}, {"total", r.rows.size()}, {"rows", rows}};
}

GraspScenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");
  GraspScenario s;
  s.id = get_or<std::string>(j, "id", "");

  if (j.contains("gripper")) {
    const auto& g = j.at("gripper");
    if (g.is_string()) {
      s.gripper = GripperGeometry::from_preset(g.get<std::string>());
    } else {
      s.gripper.aperture_diameter = get_field<double>(g, "aperture_diameter");
      s.gripper.full_close_angle = get_or(g, "full_close_angle", s.gripper.full_close_angle);
      s.gripper.rotation_speed = get_or(g, "rotation_speed", s.gripper.rotation_speed);
    }
  }

  if (!j.contains("object")) throw ParseError("scenario needs an 'object'");
  const auto& o = j.at("object");
  s.object.label = get_or<std::string>(o, "label", s.id);
  const auto shape_name = get_or<std::string>(o, "shape", "sphere");
  const auto shape = shape_from_string(shape_name);
  if (!shape) throw ValidationError("unknown shape class '" + shape_name + "'");
  s.object.shape = *shape;
  s.object.height = get_field<double>(o, "height");
  s.object.diameter = get_field<double>(o, "diameter");
  s.object.mass = get_or(o, "mass", 0.0);
  if (s.id.empty()) s.id = s.object.label;

  s.submersion_fraction = get_or(j, "submersion_fraction", 0.0);
  s.air_support_kpa = get_or(j, "air_support_kpa", 0.0);
  s.lift_height = get_or(j, "lift_height", 0.0);
  s.hold_height = get_or(j, "hold_height", 0.0);
  s.lateral_offset = get_or(j, "lateral_offset", 0.0);
  s.rotate_while_approaching = get_or(j, "rotate_while_approaching", false);
  s.validate();
  return s;
}

std::vector<GraspScenario> scenarios_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object() && j.contains("scenarios")) list = &j.at("scenarios");
  std::vector<GraspScenario> out;
  if (list->is_array()) {
    for (const auto& item : *list) out.push_back(scenario_from_json(item));
  } else {
    out.push_back(scenario_from_json(*list));
  }
  return out;
}

// Tactile --------------------------------------------------------------------

void to_json(json& j, const MarkerLayout& layout) {
  json markers = json::array();
  for (const auto& m : layout.markers) markers.push_back({{"id", m.id}, {"u", m.position.x}, {"v", m.position.y}});
  j = json{{"marker_diameter", layout.marker_diameter}, {"markers", markers}};
}

MarkerLayout layout_from_json(const json& j) {
  MarkerLayout layout;
  layout.marker_diameter = get_or(j, "marker_diameter", layout.marker_diameter);
  if (!j.contains("markers") || !j.at("markers").is_array()) throw ParseError("layout needs a 'markers' array");
  for (const auto& m : j.at("markers"))
    layout.markers.push_back({get_field<int>(m, "id"), {get_field<double>(m, "u"), get_field<double>(m, "v")}});
  layout.validate();
  return layout;
}

Deformation deformation_from_json(const json& j) {
  Deformation d;
  if (j.contains("displacement"))
    for (const auto& v : j.at("displacement")) {
      if (!v.is_array() || v.size() != 2) throw ParseError("displacement entries must be [dx, dy]");
      d.displacement.push_back({v[0].get<double>(), v[1].get<double>()});
    }
  if (j.contains("occluded"))
    for (const auto& v : j.at("occluded")) d.occluded.push_back(v.get<bool>());
  return d;
}

void to_json(json& j, const MarkerTruth& t) {
  j = json{{"id", t.id}, {"x", t.center.x}, {"y", t.center.y}, {"occluded", t.occluded}, {"clipped", t.clipped}};
}

void to_json(json& j, const MarkerSet& set) {
  json dets = json::array();
  for (const auto& d : set.detections)
    dets.push_back({{"x", d.centroid.x}, {"y", d.centroid.y}, {"area", d.area}, {"merged", d.merged}});
  j = json{{"detections", dets}};
}

MarkerSet marker_set_from_json(const json& j) {
  if (!j.contains("detections") || !j.at("detections").is_array())
    throw ParseError("marker set needs a 'detections' array");
  MarkerSet set;
  for (const auto& d : j.at("detections"))
    set.detections.push_back({{get_field<double>(d, "x"), get_field<double>(d, "y")},
                              get_or<std::size_t>(d, "area", 0),
                              get_or(d, "merged", false)});
  return set;
}

void to_json(json& j, const DisplacementField& f) {
  json matches = json::array();
  for (const auto& m : f.matches)
    matches.push_back({{"previous", m.previous}, {"current", m.current}, {"dx", m.displacement.x}, {"dy", m.displacement.y}});
  j = json{{"matches", matches}, {"unmatched_previous", f.unmatched_previous}, {"unmatched_current", f.unmatched_current}};
}

DisplacementField displacement_field_from_json(const json& j) {
  DisplacementField f;
  try {
    for (const auto& m : j.at("matches"))
      f.matches.push_back({m.at("previous").get<std::size_t>(), m.at("current").get<std::size_t>(),
                           {m.at("dx").get<double>(), m.at("dy").get<double>()}});
    f.unmatched_previous = get_or<std::vector<std::size_t>>(j, "unmatched_previous", {});
    f.unmatched_current = get_or<std::vector<std::size_t>>(j, "unmatched_current", {});
  } catch (const json::exception& e) {
    throw ParseError(std::string("displacement field: ") + e.what());
  }
  return f;
}

void to_json(json& j, const ContactSummary& s) {
  j = json{{"mean_magnitude_px", s.mean_magnitude},
           {"magnitude_variance_px2", s.magnitude_variance},
           {"visible_count", s.visible_count},
           {"reference_count", s.reference_count},
           {"label", std::string(to_string(s.label))}};
}

}  // namespace softgrip
