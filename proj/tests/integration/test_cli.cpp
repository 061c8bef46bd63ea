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

#include <gtest/gtest.h>

#include "../cli_runner.hpp"
#include "json.hpp"

namespace softgrip::testing {
namespace {

using nlohmann::json;

class Cli : public ::testing::Test {
 protected:
  CliResult run(const std::string& args) { return run_cli(args, dir); }
  json run_json(const std::string& args) {
    const auto r = run("--json " + args);
    EXPECT_EQ(r.exit_code, 0) << args << "\n" << r.err;
    return json::parse(r.out);
  }
  void write(const std::string& name, const std::string& text) {
    std::ofstream(dir / name, std::ios::binary) << text;
  }

  TempDir dir;
};

TEST_F(Cli, HelpAndUsageErrors) {
  const auto help = run("--help");
  EXPECT_EQ(help.exit_code, 0);
  for (const char* sub : {"pressure", "spring", "grasp", "tactile", "report"})
    EXPECT_NE(help.out.find(sub), std::string::npos) << sub;
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("pressure --mass 1").exit_code, 2);
  EXPECT_EQ(run("pressure --mass 1 --radius 0.1 --bogus").exit_code, 2);
  EXPECT_EQ(run("spring").exit_code, 2);
}

TEST_F(Cli, PressureReportsBothRoutes) {
  const auto j = run_json("pressure --mass 0.21 --radius 0.025 --k 0.5");
  const double closed = j.at("closed_form_n_per_m").get<double>();
  EXPECT_NEAR(closed, 524.6001572217818, 1e-9);
  EXPECT_NEAR(j.at("quadrature_n_per_m").get<double>(), closed, 1e-6 * closed);
  const auto text = run("pressure --mass 0.21 --radius 0.025 --k 0.5");
  EXPECT_EQ(text.exit_code, 0);
  EXPECT_NE(text.out.find("524.6"), std::string::npos);
}

TEST_F(Cli, PressureDomainErrorsExitTwo) {
  const auto r = run("pressure --mass 0.2 --radius 0.02 --k 1.0");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run("pressure --mass -1 --radius 0.02").exit_code, 2);
}

TEST_F(Cli, SpringFitAndPredict) {
  std::string csv = "# synthetic\nstrain,force_n\n";
  for (int i = 0; i <= 20; ++i) {
    const double s = 0.04 * i;
    const double f = s <= 0.4 ? 100 * s : 40 + 150 * (s - 0.4);
    csv += std::to_string(s) + "," + std::to_string(f) + "\n";
  }
  write("payload.csv", csv);
  const auto fit = run_json("spring fit --in \"" + (dir / "payload.csv") + "\" --out \"" + (dir / "fit.json") +
                            "\" --plot \"" + (dir / "fit.svg") + "\"");
  EXPECT_NEAR(fit.at("slope1_n_per_strain").get<double>(), 100.0, 1e-4);
  EXPECT_NEAR(fit.at("slope2_n_per_strain").get<double>(), 150.0, 1e-4);
  EXPECT_NEAR(fit.at("breakpoint_strain").get<double>(), 0.4, 1e-6);
  EXPECT_NE(slurp(dir / "fit.svg").find("<polyline"), std::string::npos);

  const auto pred = run_json("spring predict --fit \"" + (dir / "fit.json") + "\" --strain 0.6");
  EXPECT_NEAR(pred.at("load_n").get<double>(), 70.0, 1e-3);
  const auto inv = run_json("spring predict --slope1 100 --slope2 150 --breakpoint 0.4 --load 40");
  EXPECT_NEAR(inv.at("strain").get<double>(), 0.4, 1e-12);
}

TEST_F(Cli, SpringFitBadCsv) {
  write("bad.csv", "strain,force_n\n0,0\n0.1,x\n");
  const auto r = run("spring fit --in \"" + (dir / "bad.csv") + "\"");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run("spring fit --in \"" + (dir / "missing.csv") + "\"").exit_code, 2);
}

TEST_F(Cli, GraspSimulateFlagsAndFile) {
  const auto can = run_json("grasp simulate --shape cylinder --height 0.105 --diameter 0.053 --mass 0.216");
  EXPECT_EQ(can.at("verdict"), "feasible");
  EXPECT_GT(can.at("holding_pressure_n_per_m").get<double>(), 0.0);
  const auto cd = run_json("grasp simulate --gripper 8in --shape flat --height 0.0012 --diameter 0.12 --mass 0.016");
  EXPECT_EQ(cd.at("reason"), "flat_object");

  write("scen.json", R"({"scenarios": [
    {"id": "egg0", "gripper": "4in", "submersion_fraction": 0.0,
     "object": {"shape": "deformable", "height": 0.052, "diameter": 0.045, "mass": 0.05}},
    {"id": "egg90", "gripper": "4in", "submersion_fraction": 0.9,
     "object": {"shape": "deformable", "height": 0.052, "diameter": 0.045, "mass": 0.05}}]})");
  const auto batch = run_json("grasp simulate --scenario \"" + (dir / "scen.json") + "\"").at("outcomes");
  ASSERT_EQ(batch.size(), 2u);
  EXPECT_EQ(batch[0].at("verdict"), "feasible");
  EXPECT_EQ(batch[1].at("reason"), "trapped_air");
  EXPECT_EQ(run("grasp simulate --shape blob --height 0.1 --diameter 0.05").exit_code, 2);
}

TEST_F(Cli, GraspValidate) {
  EXPECT_EQ(run("grasp validate --dataset table2").exit_code, 0);
  EXPECT_EQ(run("grasp validate --dataset table3").exit_code, 0);
  EXPECT_EQ(run("grasp validate --dataset table9").exit_code, 2);
  // Moving the trapped-air threshold above 60% breaks agreement with the trials.
  EXPECT_EQ(run("grasp validate --dataset table3 --air-threshold 0.7").exit_code, 2);
}

TEST_F(Cli, TactileChain) {
  const auto f0 = dir / "f0.pgm", f1 = dir / "f1.pgm";
  ASSERT_EQ(run("tactile render --rows 5 --cols 5 --out \"" + f0 + "\" --truth \"" + (dir / "t0.json") + "\"").exit_code, 0);
  ASSERT_EQ(run("tactile render --rows 5 --cols 5 --shift-x 3 --shift-y -2 --out \"" + f1 + "\"").exit_code, 0);
  EXPECT_EQ(slurp(f0).substr(0, 2), "P5");
  const auto t0 = json::parse(slurp(dir / "t0.json"));
  EXPECT_EQ(t0.at("markers").size(), 25u);

  const auto d0 = run_json("tactile detect --in \"" + f0 + "\" --out \"" + (dir / "d0.json") + "\"");
  EXPECT_EQ(d0.at("detections").size(), 25u);
  run_json("tactile detect --in \"" + f1 + "\" --out \"" + (dir / "d1.json") + "\"");
  const auto field = run_json("tactile track --prev \"" + (dir / "d0.json") + "\" --curr \"" + (dir / "d1.json") +
                              "\" --out \"" + (dir / "field.json") + "\"");
  EXPECT_EQ(field.at("matches").size(), 25u);
  for (const auto& m : field.at("matches")) {
    EXPECT_NEAR(m.at("dx").get<double>(), 3.0, 0.5);
    EXPECT_NEAR(m.at("dy").get<double>(), -2.0, 0.5);
  }
  const auto s = run_json("tactile summarize --field \"" + (dir / "field.json") + "\" --air 4");
  EXPECT_EQ(s.at("label"), "contact-with-air");
}

TEST_F(Cli, TactileRejectsCorruptPgm) {
  write("bad.pgm", "P5\n4 4\n255\nxx");
  const auto r = run("tactile detect --in \"" + (dir / "bad.pgm") + "\"");
  EXPECT_EQ(r.exit_code, 2);
}

TEST_F(Cli, ReportWritesArtifacts) {
  const auto out = dir / "rep";
  const auto r = run("report --out-dir \"" + out + "\" --seed 0");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  for (const char* f : {"payload.csv", "payload_fit.svg", "report.json", "report.txt"})
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(out) / f)) << f;
  const auto rep = json::parse(slurp(std::filesystem::path(out) / "report.json"));
  EXPECT_EQ(rep.at("format_version"), 1);
  for (const auto& sec : rep.at("sections"))
    for (const auto& m : sec.at("metrics")) EXPECT_FALSE(m.at("unit").get<std::string>().empty());
}

TEST_F(Cli, UnwritableOutputIsInternalError) {
  EXPECT_EQ(run("tactile render --out /nonexistent-dir/f.pgm").exit_code, 1);
}

}  // namespace
}  // namespace softgrip::testing
