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

// softgrip command-line tool. Batch only: every run is a pure function of its
// arguments and input files.
//
// Exit codes: 0 success, 2 invalid input or usage, 1 internal error.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "softgrip/error.hpp"
#include "softgrip/experiment_io.hpp"
#include "softgrip/grasp_engine.hpp"
#include "softgrip/pgm.hpp"
#include "softgrip/plot.hpp"
#include "softgrip/pressure_model.hpp"
#include "softgrip/reference_data.hpp"
#include "softgrip/report.hpp"
#include "softgrip/skin_spring.hpp"
#include "softgrip/tactile.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace softgrip;

namespace {

struct CliConfig {
  bool json_output = false;
  int verbosity = 0;
};

void emit(const CliConfig& cfg, const json& doc, const std::string& text) {
  if (cfg.json_output)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

void note(const CliConfig& cfg, const std::string& msg) {
  if (cfg.verbosity > 0) std::cerr << msg << "\n";
}

// pressure ---------------------------------------------------------------------

struct PressureArgs {
  double mass = 0.0;
  double radius = 0.0;
  double k = 0.0;
  double g = kGravity;
  std::size_t intervals = kDefaultQuadratureIntervals;
};

int run_pressure(const CliConfig& cfg, const PressureArgs& a) {
  const SphericalObject obj{a.mass, a.radius};
  const FrictionModel fric{a.k};
  const double closed = line_pressure_closed_form(obj, fric, a.g);
  const double quad = line_pressure_quadrature(obj, fric, a.g, a.intervals);
  const double rel = closed > 0.0 ? std::abs(quad - closed) / closed : std::abs(quad - closed);
  const auto eq = equilibrium_residual(obj, fric, {closed, 0.0}, a.g, a.intervals);

  json doc{{"mass_kg", a.mass},
           {"radius_m", a.radius},
           {"friction_k", a.k},
           {"gravity", a.g},
           {"intervals", a.intervals},
           {"closed_form_n_per_m", closed},
           {"quadrature_n_per_m", quad},
           {"relative_difference", rel},
           {"equilibrium_residual_n", eq.residual_force}};
  std::string text;
  text += fmt::format("line pressure (closed form): {:.4f} N/m\n", closed);
  text += fmt::format("line pressure (quadrature, n={}): {:.4f} N/m\n", a.intervals, quad);
  text += fmt::format("relative difference: {:.3e} ({})\n", rel, rel < 1e-6 ? "agree" : "DISAGREE");
  text += fmt::format("equilibrium residual: {:.3e} N\n", eq.residual_force);
  emit(cfg, doc, text);
  return 0;
}

// spring -----------------------------------------------------------------------

struct SpringFitArgs {
  std::string input;
  std::string unit = "strain";
  double skin_height = 0.0;
  std::string output;
  std::string plot;
};

std::vector<PlotSeries> payload_series(const PayloadCurve& curve, const ZoneFit& fit) {
  PlotSeries measured{{}, {}, "measured", true};
  for (const auto& s : curve.samples) {
    measured.x.push_back(100.0 * s.strain);
    measured.y.push_back(s.load);
  }
  PlotSeries model{{}, {}, "two-zone fit", false};
  const double top = curve.samples.back().strain;
  for (int i = 0; i <= 100; ++i) {
    const double e = top * i / 100.0;
    model.x.push_back(100.0 * e);
    model.y.push_back(fit.predict(e).load);
  }
  return {measured, model};
}

int run_spring_fit(const CliConfig& cfg, const SpringFitArgs& a) {
  auto curve = read_payload_csv(a.input);
  FitOptions opts;
  if (a.unit == "meters") {
    opts.unit = StrainUnit::Meters;
    opts.skin_height = a.skin_height;
  }
  const auto fit = fit_zones(curve, opts);
  note(cfg, fmt::format("fitted {} samples from {}", fit.sample_count, a.input));

  json doc = fit;
  if (!a.output.empty()) write_text_file(a.output, doc.dump(2) + "\n");
  if (!a.plot.empty()) {
    if (opts.unit == StrainUnit::Meters)
      for (auto& s : curve.samples) s.strain /= a.skin_height;
    emit_plot(payload_series(curve, fit), {"Payload vs strain", "strain [%]", "load [N]"}, a.plot);
  }

  std::string text;
  text += fmt::format("slope1: {:.6g} N/strain\n", fit.slope1);
  text += fmt::format("slope2: {:.6g} N/strain\n", fit.slope2);
  text += fmt::format("breakpoint: {:.6g} strain ({:.6g} N)\n", fit.breakpoint, fit.slope1 * fit.breakpoint);
  text += fmt::format("rms relative error: {:.6g}\n", fit.rms_relative_error);
  if (fit.degenerate) text += "degenerate: single slope fits; breakpoint unreliable\n";
  if (!curve.loads_non_decreasing()) text += "note: measured loads are not monotone\n";
  emit(cfg, doc, text);
  return 0;
}

struct SpringPredictArgs {
  std::string fit_file;
  std::string spec_file;
  std::optional<double> slope1, slope2, breakpoint;
  std::optional<double> strain, load;
  double g = kGravity;
};

int run_spring_predict(const CliConfig& cfg, const SpringPredictArgs& a) {
  std::optional<ZoneFit> fit;
  SkinSpec spec;
  if (!a.fit_file.empty()) {
    fit = read_json_file(a.fit_file).get<ZoneFit>();
    spec = fit->to_spec();
  } else if (!a.spec_file.empty()) {
    spec = read_json_file(a.spec_file).get<SkinSpec>();
  } else if (a.slope1 && a.slope2 && a.breakpoint) {
    spec = SkinSpec::from_slopes(*a.slope1, *a.slope2, *a.breakpoint);
  } else {
    throw ValidationError("give --fit, --spec, or all of --slope1/--slope2/--breakpoint");
  }
  spec.validate();
  if (a.strain.has_value() == a.load.has_value()) throw ValidationError("give exactly one of --strain or --load");

  const double strain = a.strain ? *a.strain : predict_strain(*a.load, spec);
  const double load = a.load ? *a.load : predict_load(strain, spec);
  const double mass = estimate_object_mass(strain, spec, a.g);
  const bool extrapolated = fit && strain > fit->max_strain;

  json doc{{"strain", strain}, {"load_n", load}, {"estimated_mass_kg", mass}, {"extrapolated", extrapolated}};
  std::string text = fmt::format("strain: {:.6g}\nload: {:.6g} N\nestimated mass: {:.6g} kg\n", strain, load, mass);
  if (extrapolated) text += "warning: beyond the fitted strain range\n";
  emit(cfg, doc, text);
  return 0;
}

// grasp ------------------------------------------------------------------------

struct GraspSimArgs {
  std::string scenario_file;
  std::string gripper = "4in";
  std::optional<double> aperture;
  std::string shape = "sphere";
  double height = 0.0, diameter = 0.0, mass = 0.0;
  double submersion = 0.0, air = 0.0, lift = 0.05, hold = 0.10, offset = 0.0;
  bool rotate = false;
  double k = 0.5;
  FeasibilityRules rules;
};

int run_grasp_simulate(const CliConfig& cfg, const GraspSimArgs& a) {
  std::vector<GraspScenario> scenarios;
  if (!a.scenario_file.empty()) {
    scenarios = scenarios_from_json(read_json_file(a.scenario_file));
  } else {
    GraspScenario s;
    s.gripper = GripperGeometry::from_preset(a.gripper);
    if (a.aperture) s.gripper.aperture_diameter = *a.aperture;
    const auto shape = shape_from_string(a.shape);
    if (!shape) throw ValidationError("unknown shape class '" + a.shape + "'");
    s.object = {*shape, a.height, a.diameter, a.mass, "object"};
    s.id = "object";
    s.submersion_fraction = a.submersion;
    s.air_support_kpa = a.air;
    s.lift_height = a.lift;
    s.hold_height = a.hold;
    s.lateral_offset = a.offset;
    s.rotate_while_approaching = a.rotate;
    scenarios.push_back(s);
  }

  const auto outcomes = evaluate_batch(scenarios, a.rules);
  const FrictionModel fric{a.k};
  json docs = json::array();
  std::string text;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    json doc = o;
    const double p = holding_pressure(scenarios[i], fric);
    doc["holding_pressure_n_per_m"] = p;
    docs.push_back(doc);
    text += fmt::format("{}: {} ({})\n", o.scenario_id, to_string(o.verdict), to_string(o.reason));
    for (const auto& step : o.trace)
      text += fmt::format("  {:<11} angle {:.4f} rad  coverage {:.3f}  height {:.3f} m\n", to_string(step.phase),
                          step.angle, step.coverage, step.height);
    text += fmt::format("  holding line pressure: {:.4f} N/m\n", p);
  }
  emit(cfg, docs.size() == 1 ? docs[0] : json{{"outcomes", docs}}, text);
  return 0;
}

int run_grasp_validate(const CliConfig& cfg, const std::string& dataset, const FeasibilityRules& rules) {
  const auto report = validate_against_reference(dataset, rules);
  std::string text = fmt::format("dataset {}: {}/{} agreement\n", report.dataset, report.agreements(), report.rows.size());
  for (const auto& r : report.rows)
    text += fmt::format("  {:<40} success {:>4.0f}%  expected {:<10} predicted {:<10} {}{}\n", r.label,
                        100.0 * r.success_rate, r.expected_feasible ? "feasible" : "infeasible",
                        to_string(r.outcome.verdict), to_string(r.outcome.reason), r.agrees ? "" : "  MISMATCH");
  emit(cfg, report, text);
  return report.agreements() == report.rows.size() ? 0 : 2;
}

// tactile ----------------------------------------------------------------------

struct RenderArgs {
  std::string layout_file;
  int rows = 5, cols = 5;
  std::string deformation_file;
  double shift_x = 0.0, shift_y = 0.0;
  double occlude_fraction = 0.0;
  CameraModel camera;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string output;
  std::string truth;
};

int run_tactile_render(const CliConfig& cfg, const RenderArgs& a) {
  const auto layout = a.layout_file.empty() ? MarkerLayout::grid(a.rows, a.cols)
                                            : layout_from_json(read_json_file(a.layout_file));
  const std::size_t n = layout.markers.size();
  Deformation def = a.deformation_file.empty() ? Deformation::uniform_shift(n, {a.shift_x, a.shift_y})
                                               : deformation_from_json(read_json_file(a.deformation_file));
  if (!(a.occlude_fraction >= 0.0 && a.occlude_fraction <= 1.0))
    throw ValidationError("--occlude-fraction must lie in [0, 1]");
  if (a.occlude_fraction > 0.0) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(a.seed ^ 0x9e3779b97f4a7c15ULL);
    std::shuffle(order.begin(), order.end(), rng);
    def.occluded.assign(n, false);
    const auto count = static_cast<std::size_t>(std::lround(a.occlude_fraction * static_cast<double>(n)));
    for (std::size_t i = 0; i < count; ++i) def.occluded[order[i]] = true;
  }

  const auto rendered = render_frame(layout, def, a.camera, {a.noise, a.seed});
  write_pgm(a.output, rendered.frame);
  json truth = json::array();
  for (const auto& t : rendered.truth) truth.push_back(t);
  json sidecar{{"frame", fs::path(a.output).filename().string()},
               {"width", a.camera.width},
               {"height", a.camera.height},
               {"marker_diameter_px", a.camera.marker_diameter_px(layout)},
               {"noise_sigma", a.noise},
               {"seed", a.seed},
               {"markers", truth}};
  if (!a.truth.empty()) write_text_file(a.truth, sidecar.dump(2) + "\n");

  const auto visible = std::count_if(rendered.truth.begin(), rendered.truth.end(), [](const auto& t) { return t.visible(); });
  emit(cfg, sidecar,
       fmt::format("rendered {}x{} frame with {}/{} visible markers -> {}\n", a.camera.width, a.camera.height, visible,
                   n, a.output));
  return 0;
}

struct DetectArgs {
  std::string input;
  int threshold = kDefaultThreshold;
  std::size_t min_area = 4;
  double expected_area = 0.0;
  std::string binary_out;
  std::string output;
};

int run_tactile_detect(const CliConfig& cfg, const DetectArgs& a) {
  const auto frame = read_pgm(a.input);
  const auto binary = binarize(frame, a.threshold);
  if (!a.binary_out.empty()) write_pgm(a.binary_out, binary);
  DetectOptions opts;
  opts.min_area = a.min_area;
  opts.expected_area = a.expected_area;
  const auto set = detect_markers(binary, opts);
  json doc = set;
  if (!a.output.empty()) write_text_file(a.output, doc.dump(2) + "\n");

  std::string text = fmt::format("{} detections\n", set.detections.size());
  for (std::size_t i = 0; i < set.detections.size(); ++i) {
    const auto& d = set.detections[i];
    text += fmt::format("  [{}] ({:.3f}, {:.3f}) area {}{}\n", i, d.centroid.x, d.centroid.y, d.area,
                        d.merged ? " merged" : "");
  }
  emit(cfg, doc, text);
  return 0;
}

int run_tactile_track(const CliConfig& cfg, const std::string& prev, const std::string& curr, double gate,
                      const std::string& output) {
  const auto a = marker_set_from_json(read_json_file(prev));
  const auto b = marker_set_from_json(read_json_file(curr));
  const auto field = track(a, b, gate);
  json doc = field;
  if (!output.empty()) write_text_file(output, doc.dump(2) + "\n");
  std::string text = fmt::format("{} matches, {} disappeared, {} appeared\n", field.matches.size(),
                                 field.unmatched_previous.size(), field.unmatched_current.size());
  for (const auto& m : field.matches)
    text += fmt::format("  {} -> {}: ({:.3f}, {:.3f})\n", m.previous, m.current, m.displacement.x, m.displacement.y);
  emit(cfg, doc, text);
  return 0;
}

int run_tactile_summarize(const CliConfig& cfg, const std::string& field_file, double air,
                          const ContactThresholds& thresholds) {
  const auto field = displacement_field_from_json(read_json_file(field_file));
  const auto s = contact_summary(field, air, thresholds);
  json doc = s;
  doc["air_support_kpa"] = air;
  emit(cfg, doc,
       fmt::format("label: {}\nmean displacement: {:.4f} px\nvariance: {:.4f} px^2\nvisible markers: {}/{}\n",
                   to_string(s.label), s.mean_magnitude, s.magnitude_variance, s.visible_count, s.reference_count));
  return 0;
}

// report -----------------------------------------------------------------------

int run_report(const CliConfig& cfg, const std::string& out_dir, std::uint64_t seed, double k) {
  fs::create_directories(out_dir);
  Report report;

  // Pressure on the durability test ball.
  const auto dur = durability_constants();
  const SphericalObject ball{dur.test_ball_mass_kg, dur.test_ball_diameter_m / 2.0};
  const double closed = line_pressure_closed_form(ball, {k});
  const double quad = line_pressure_quadrature(ball, {k});
  auto& pressure = report.sections.emplace_back(ReportSection{"Line pressure on the test ball", {}, std::nullopt});
  pressure.add("mass", ball.mass, "kg").add("radius", ball.radius, "m").add("friction_k", k, "1");
  pressure.add("closed_form", closed, "N/m").add("quadrature", quad, "N/m");
  pressure.add("relative_difference", std::abs(quad - closed) / closed, "1");

  // Payload curve with a ~40 N zone transition, fitted and plotted.
  const auto spec = SkinSpec::from_slopes(100.0, 400.0, 0.4);
  const auto curve = sample_payload_curve(spec, 50, 1.0, 0.02, seed);
  write_payload_csv(fs::path(out_dir) / "payload.csv", curve);
  const auto fit = fit_zones(curve);
  emit_plot(payload_series(curve, fit), {"Payload vs strain (synthetic)", "strain [%]", "load [N]"},
            fs::path(out_dir) / "payload_fit.svg");
  auto& spring = report.sections.emplace_back(ReportSection{"Two-zone skin spring fit", {}, "payload_fit.svg"});
  spring.add("slope1", fit.slope1, "N/strain").add("slope2", fit.slope2, "N/strain");
  spring.add("breakpoint", fit.breakpoint, "strain").add("transition_load", fit.slope1 * fit.breakpoint, "N");
  spring.add("rms_relative_error", fit.rms_relative_error, "1").add("degenerate", fit.degenerate, "1");

  // Payload figures.
  const auto rec = payload_record();
  const double ratio = payload_to_weight_ratio(rec.max_payload_kgf, rec.weight_kg);
  auto& payload = report.sections.emplace_back(ReportSection{"Payload-to-weight", {}, std::nullopt});
  payload.add("max_payload", rec.max_payload_kgf, "kgf")
      .add("max_payload_newtons", newtons_kgf_convert(rec.max_payload_kgf, ForceDirection::KgfToNewtons), "N")
      .add("gripper_weight", rec.weight_kg, "kg")
      .add("computed_ratio", ratio, "%")
      .add("published_ratio", rec.published_ratio_percent, "%")
      .add("ratio_discrepancy", (ratio - rec.published_ratio_percent) / rec.published_ratio_percent, "1");

  // Feasibility against the bundled trial tables.
  for (auto id : {DatasetId::Table2Objects, DatasetId::Table3Submersion}) {
    const auto v = validate_against_reference(dataset_name(id));
    auto& sec = report.sections.emplace_back(ReportSection{"Feasibility: " + v.dataset, {}, std::nullopt});
    sec.add("agreements", v.agreements(), "count").add("rows", v.rows.size(), "count");
  }

  // Tactile demo: a uniform shift, then the same frame with occlusion.
  const auto layout = MarkerLayout::grid(5, 5);
  const CameraModel cam;
  const auto base = render_frame(layout, {}, cam, {8.0, seed});
  auto occ = Deformation::uniform_shift(layout.markers.size(), {3.0, -2.0});
  occ.occluded.assign(layout.markers.size(), false);
  for (std::size_t i = 0; i < occ.occluded.size(); i += 5) occ.occluded[i] = true;
  const auto moved = render_frame(layout, occ, cam, {8.0, seed + 1});
  DetectOptions dopt;
  dopt.expected_area = cam.marker_area_px(layout);
  const auto m0 = detect_markers(binarize(base.frame), dopt);
  const auto m1 = detect_markers(binarize(moved.frame), dopt);
  const auto field = track(m0, m1, default_gate(cam, layout));
  const auto summary = contact_summary(field, 3.0);
  auto& tactile = report.sections.emplace_back(ReportSection{"Tactile markers", {}, std::nullopt});
  tactile.add("detected_before", m0.detections.size(), "count").add("detected_after", m1.detections.size(), "count");
  tactile.add("matches", field.matches.size(), "count").add("mean_displacement", summary.mean_magnitude, "px");
  tactile.add("label", std::string(to_string(summary.label)), "1");

  const auto doc = report.to_json();
  write_text_file(fs::path(out_dir) / "report.json", doc.dump(2) + "\n");
  write_text_file(fs::path(out_dir) / "report.txt", report.to_text());
  emit(cfg, doc, report.to_text());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"softgrip: grasp pressure, skin-spring fitting, feasibility and tactile marker tools"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;
  app.add_flag("--json", cfg.json_output, "Machine-readable JSON on stdout");
  app.add_flag("-v,--verbose", cfg.verbosity, "Diagnostics on stderr");

  std::function<int()> action;

  // pressure
  PressureArgs pa;
  auto* pressure = app.add_subcommand("pressure", "Line pressure on a held sphere, closed form and quadrature");
  pressure->add_option("--mass", pa.mass, "Object mass [kg]")->required();
  pressure->add_option("--radius", pa.radius, "Sphere radius [m]")->required();
  pressure->add_option("--k", pa.k, "Object/skin friction coefficient, 0 <= k < 1")->capture_default_str();
  pressure->add_option("--g", pa.g, "Gravitational acceleration [m/s^2]")->capture_default_str();
  pressure->add_option("--intervals", pa.intervals, "Trapezoid intervals")->capture_default_str();
  pressure->callback([&] { action = [&] { return run_pressure(cfg, pa); }; });

  // spring
  auto* spring = app.add_subcommand("spring", "Two-zone skin spring model");
  spring->require_subcommand(1);
  SpringFitArgs sfa;
  auto* sfit = spring->add_subcommand("fit", "Fit zone slopes and breakpoint to a payload CSV");
  sfit->add_option("--in", sfa.input, "Payload CSV (strain,force_n)")->required()->check(CLI::ExistingFile);
  sfit->add_option("--unit", sfa.unit, "Strain column unit")
      ->check(CLI::IsMember({"strain", "meters"}))
      ->capture_default_str();
  sfit->add_option("--skin-height", sfa.skin_height, "Skin height [m], required with --unit meters");
  sfit->add_option("--out", sfa.output, "Write the fit as JSON");
  sfit->add_option("--plot", sfa.plot, "Write measured vs fitted curves as SVG");
  sfit->callback([&] { action = [&] { return run_spring_fit(cfg, sfa); }; });

  SpringPredictArgs spa;
  auto* spred = spring->add_subcommand("predict", "Load from strain or strain from load, plus mass estimate");
  spred->add_option("--fit", spa.fit_file, "Fit JSON from 'spring fit --out'")->check(CLI::ExistingFile);
  spred->add_option("--spec", spa.spec_file, "Skin spec JSON (skin_volume, skin_height, base_stiffness, zone1_coeff, zone2_coeff, transition_strain)")
      ->check(CLI::ExistingFile);
  spred->add_option("--slope1", spa.slope1, "First-zone slope [N/strain]");
  spred->add_option("--slope2", spa.slope2, "Second-zone slope [N/strain]");
  spred->add_option("--breakpoint", spa.breakpoint, "Zone transition strain");
  spred->add_option("--strain", spa.strain, "Strain to evaluate (fraction of skin height)");
  spred->add_option("--load", spa.load, "Load to invert [N]");
  spred->add_option("--g", spa.g, "Gravitational acceleration [m/s^2]")->capture_default_str();
  spred->callback([&] { action = [&] { return run_spring_predict(cfg, spa); }; });

  // grasp
  auto* grasp = app.add_subcommand("grasp", "Grasp phases and feasibility");
  grasp->require_subcommand(1);
  GraspSimArgs gsa;
  auto* gsim = grasp->add_subcommand("simulate", "Evaluate one scenario (flags) or a scenario JSON file");
  gsim->add_option("--scenario", gsa.scenario_file, "Scenario JSON (object, array or {\"scenarios\": [...]})")
      ->check(CLI::ExistingFile);
  gsim->add_option("--gripper", gsa.gripper, "Gripper preset")->check(CLI::IsMember({"2in", "4in", "8in"}))->capture_default_str();
  gsim->add_option("--aperture", gsa.aperture, "Aperture diameter override [m]");
  gsim->add_option("--shape", gsa.shape, "sphere|cylinder|flat|elongated|granular|deformable")->capture_default_str();
  gsim->add_option("--height", gsa.height, "Object height [m]");
  gsim->add_option("--diameter", gsa.diameter, "Object diameter [m]");
  gsim->add_option("--mass", gsa.mass, "Object mass [kg]");
  gsim->add_option("--submersion", gsa.submersion, "Submerged fraction, 0..1")->capture_default_str();
  gsim->add_option("--air", gsa.air, "Air support [kPa]")->capture_default_str();
  gsim->add_option("--lift-height", gsa.lift, "Lift height [m]")->capture_default_str();
  gsim->add_option("--hold-height", gsa.hold, "Hold height [m]")->capture_default_str();
  gsim->add_option("--offset", gsa.offset, "Lateral offset of the object axis [m]")->capture_default_str();
  gsim->add_flag("--rotate-approach", gsa.rotate, "Rotate while approaching to expel trapped air");
  gsim->add_option("--k", gsa.k, "Friction coefficient for the holding pressure")->capture_default_str();
  gsim->add_option("--elongated-ratio", gsa.rules.elongated_ratio, "Height/aperture limit for elongated objects")
      ->capture_default_str();
  gsim->add_option("--air-threshold", gsa.rules.trapped_air_threshold, "Submersion fraction that traps air")
      ->capture_default_str();
  gsim->callback([&] {
    if (gsa.scenario_file.empty() && (gsa.height <= 0.0 || gsa.diameter <= 0.0))
      throw CLI::ValidationError("grasp simulate", "needs --scenario or both --height and --diameter");
    action = [&] { return run_grasp_simulate(cfg, gsa); };
  });

  std::string dataset;
  FeasibilityRules validate_rules;
  auto* gval = grasp->add_subcommand("validate", "Compare predicted feasibility with bundled trial tables");
  gval->add_option("--dataset", dataset, "table2 | table3 (or table2_objects | table3_submersion)")->required();
  gval->add_option("--air-threshold", validate_rules.trapped_air_threshold, "Submersion fraction that traps air")
      ->capture_default_str();
  gval->callback([&] { action = [&] { return run_grasp_validate(cfg, dataset, validate_rules); }; });

  // tactile
  auto* tactile = app.add_subcommand("tactile", "Synthetic marker frames, detection and tracking");
  tactile->require_subcommand(1);
  RenderArgs ra;
  auto* trender = tactile->add_subcommand("render", "Render a marker frame as P5 PGM");
  trender->add_option("--layout", ra.layout_file, "Layout JSON; default is a rows x cols grid")->check(CLI::ExistingFile);
  trender->add_option("--rows", ra.rows, "Grid rows")->capture_default_str();
  trender->add_option("--cols", ra.cols, "Grid columns")->capture_default_str();
  trender->add_option("--deformation", ra.deformation_file, "Deformation JSON {displacement: [[dx,dy],...], occluded: [...]}")
      ->check(CLI::ExistingFile);
  trender->add_option("--shift-x", ra.shift_x, "Uniform shift [px]")->capture_default_str();
  trender->add_option("--shift-y", ra.shift_y, "Uniform shift [px]")->capture_default_str();
  trender->add_option("--occlude-fraction", ra.occlude_fraction, "Fraction of markers hidden (seeded)")->capture_default_str();
  trender->add_option("--width", ra.camera.width, "Frame width [px]")->capture_default_str();
  trender->add_option("--height", ra.camera.height, "Frame height [px]")->capture_default_str();
  trender->add_option("--ppm", ra.camera.pixels_per_meter, "Pixels per meter on the skin")->capture_default_str();
  trender->add_option("--noise", ra.noise, "Gaussian pixel noise sigma")->capture_default_str();
  trender->add_option("--seed", ra.seed, "Random seed")->capture_default_str();
  trender->add_option("--out", ra.output, "Output PGM")->required();
  trender->add_option("--truth", ra.truth, "Ground-truth sidecar JSON");
  trender->callback([&] { action = [&] { return run_tactile_render(cfg, ra); }; });

  DetectArgs da;
  auto* tdetect = tactile->add_subcommand("detect", "Binarize a PGM frame and detect marker blobs");
  tdetect->add_option("--in", da.input, "Input PGM")->required()->check(CLI::ExistingFile);
  tdetect->add_option("--threshold", da.threshold, "Binarization threshold")->check(CLI::Range(0, 255))->capture_default_str();
  tdetect->add_option("--min-area", da.min_area, "Smallest blob kept [px]")->capture_default_str();
  tdetect->add_option("--expected-area", da.expected_area, "Single-marker area [px]; 0 = median blob")->capture_default_str();
  tdetect->add_option("--binary-out", da.binary_out, "Write the binary frame as PGM");
  tdetect->add_option("--out", da.output, "Write detections as JSON");
  tdetect->callback([&] { action = [&] { return run_tactile_detect(cfg, da); }; });

  std::string prev, curr, field_out;
  double gate = 24.0;
  auto* ttrack = tactile->add_subcommand("track", "Match detections between two frames");
  ttrack->add_option("--prev", prev, "Previous detections JSON")->required()->check(CLI::ExistingFile);
  ttrack->add_option("--curr", curr, "Current detections JSON")->required()->check(CLI::ExistingFile);
  ttrack->add_option("--gate", gate, "Matching radius [px]")->capture_default_str();
  ttrack->add_option("--out", field_out, "Write the displacement field as JSON");
  ttrack->callback([&] { action = [&] { return run_tactile_track(cfg, prev, curr, gate, field_out); }; });

  std::string field_in;
  double air = 0.0;
  ContactThresholds thresholds;
  auto* tsum = tactile->add_subcommand("summarize", "Contact statistics and label for a displacement field");
  tsum->add_option("--field", field_in, "Displacement field JSON")->required()->check(CLI::ExistingFile);
  tsum->add_option("--air", air, "Air support [kPa]")->capture_default_str();
  tsum->add_option("--contact-threshold", thresholds.contact_mean_px, "Mean displacement for contact [px]")
      ->capture_default_str();
  tsum->add_option("--visible-fraction", thresholds.min_visible_fraction, "Visibility below which contact is declared")
      ->capture_default_str();
  tsum->callback([&] { action = [&] { return run_tactile_summarize(cfg, field_in, air, thresholds); }; });

  // report
  std::string out_dir;
  std::uint64_t seed = 0;
  double report_k = 0.5;
  auto* rep = app.add_subcommand("report", "End-to-end report with plots");
  rep->add_option("--out-dir", out_dir, "Output directory")->required();
  rep->add_option("--seed", seed, "Random seed")->capture_default_str();
  rep->add_option("--k", report_k, "Friction coefficient")->capture_default_str();
  rep->callback([&] { action = [&] { return run_report(cfg, out_dir, seed, report_k); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
