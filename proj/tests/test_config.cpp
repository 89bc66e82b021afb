// Copyright 2026 The eqwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "eqw/config.hpp"
#include "eqw/driver.hpp"
#include "eqw/error.hpp"

using namespace eqw;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.rfind("#", 0) != 0) out += line + "\n";
  return out;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("eqw_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string error_of(const std::string& text) {
  try {
    parse_config(load_config_text(text, "cfg.yaml"), "cfg.yaml");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Config);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("field syntax") {
  CHECK(parse_field("2pi*1/120") == FieldPhase::rational(1, 120));
  CHECK(parse_field("-2pi*3/7") == FieldPhase::rational(-3, 7));
  CHECK(parse_field("0").is_zero());
  std::string note;
  CHECK(parse_field("0.052359877559829883", &note) == FieldPhase::rational(1, 120));
  CHECK(note.find("2pi*1/120") != std::string::npos);
  note.clear();
  const FieldPhase r = parse_field("0.7", &note);
  CHECK(r.kind() == FieldPhase::Kind::Real);
  CHECK(r.radians() == 0.7);
  CHECK(note.find("real phase") != std::string::npos);
  CHECK_THROWS_AS(parse_field("two"), Error);
  CHECK_THROWS_AS(parse_field("2pi*1/0"), Error);
}

TEST_CASE("named initial states") {
  CHECK(named_initial_state("grover-symmetric") == std::vector<cplx>{0.5, -0.5, -0.5, 0.5});
  CHECK(named_initial_state("complex-symmetric")[1] == cplx{0, 0.5});
  CHECK(named_initial_state("up").size() == 2);
  CHECK(initial_state_names().size() >= 6);
  CHECK_THROWS_AS(named_initial_state("sideways"), Error);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_of("command: run\nfamily: bogus\nsteps: 3\n").rfind("cfg.yaml:2:", 0) == 0);
  CHECK(error_of("family: grover\nsteps: 3\ncolour: red\n").rfind("cfg.yaml:3:", 0) == 0);
  CHECK(error_of("family: grover\n").find("missing 'steps'") != std::string::npos);
  CHECK(error_of("family: grover\nsteps: -1\n").rfind("cfg.yaml:2:", 0) == 0);
  CHECK(error_of("family: alternate\nsteps: 3\ndelta_theta: 0.1\ntheta_x: 0.2\n") != "");
  CHECK(error_of("family: grover\nsteps: 3\ninitial: up\n") != "");
  CHECK(error_of("family: grover\nsteps: 3\nfield: {x: nope}\n").rfind("cfg.yaml:3:", 0) == 0);
  CHECK(error_of("family: [1\n") != "");
  CHECK(error_of("preset: fig99\n").rfind("cfg.yaml:1:", 0) == 0);
}

TEST_CASE("presets expand to the figure parameters") {
  std::vector<std::string> names;
  for (const auto& p : list_presets()) names.push_back(p.name);
  for (const char* n : {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());

  const RunConfig b = parse_config(load_config_text("preset: fig2b\n"));
  CHECK(b.walk.family == WalkFamily::Grover);
  CHECK(b.walk.field_x == FieldPhase::rational(1, 120));
  CHECK(b.walk.field_y.is_zero());
  CHECK(b.walk.steps == 600);
  CHECK(b.walk.initial == std::vector<cplx>{0.5, -0.5, -0.5, 0.5});

  const RunConfig h = parse_config(load_config_text("preset: fig10\n"));
  CHECK(h.walk.family == WalkFamily::Hadamard);
  CHECK(h.walk.field_y == FieldPhase::rational(1, 120));
  CHECK(h.walk.steps == 1000);

  YAML::Node fig4 = load_config_text("preset: fig4\n");
  REQUIRE(has_sweep(fig4));
  const auto entries = expand_sweep(fig4);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "delta_theta=0");
  CHECK(entries[2].name == "delta_theta=0.2");
  const RunConfig e2 = parse_config(entries[2].doc);
  CHECK(e2.walk.family == WalkFamily::Alternate);
  CHECK(e2.walk.theta_x == doctest::Approx(std::numbers::pi / 4 + 0.2));
  CHECK(e2.walk.theta_y == doctest::Approx(std::numbers::pi / 4 - 0.2));
  CHECK(e2.walk.field_x == FieldPhase::rational(1, 120));

  const auto fig6 = expand_sweep(load_config_text("preset: fig6\n"));
  REQUIRE(fig6.size() == 2);
  CHECK(parse_config(fig6[0].doc).command == Command::Spectrum);
  CHECK(parse_config(fig6[1].doc).command == Command::Run);

  const auto fig1 = expand_sweep(load_config_text("preset: fig1\n"));
  REQUIRE(fig1.size() == 3);
  CHECK(parse_config(fig1[2].doc).spectrum.p == 4);
}

TEST_CASE("overrides") {
  YAML::Node doc = load_config_text("preset: fig2b\n");
  apply_override(doc, "field.x=2pi*1/60");
  apply_override(doc, "steps=12");
  apply_override(doc, "observers=[widths, periods]");
  const RunConfig c = parse_config(doc);
  CHECK(c.walk.field_x == FieldPhase::rational(1, 60));
  CHECK(c.walk.steps == 12);
  CHECK(c.periods);
  CHECK_FALSE(c.snapshot);
  CHECK_THROWS_AS(apply_override(doc, "no-equals-sign"), Error);
}

TEST_CASE("manifest round trip") {
  for (const char* text : {"preset: fig2c\n", "preset: fig9\n",
                           "family: 1d\ntheta: pi/3\nfield: {x: 0.7}\nsteps: 40\nobservers: [widths, periods]\n",
                           "family: alternate\ndelta_theta: 0.1\nsteps: 9\nsnapshots: [3, 9]\n",
                           "command: spectrum\nfamily: alternate\nspectrum: {p: 8, field_axis: y}\n"}) {
    const RunConfig a = parse_config(load_config_text(text));
    const std::string ea = emit_config(a);
    const RunConfig b = parse_config(load_config_text(ea));
    CHECK(emit_config(b) == ea);
    CHECK(b.walk.field_x == a.walk.field_x);
    CHECK(b.walk.theta_x == a.walk.theta_x);
  }
}

TEST_CASE("run outputs are deterministic and reproducible from the manifest") {
  YAML::Node doc = load_config_text("preset: fig2b\n");
  apply_override(doc, "steps=40");
  apply_override(doc, "observers=[widths, snapshot, periods, amplitudes]");
  const RunConfig c = parse_config(doc);
  const fs::path a = scratch("run_a"), b = scratch("run_b"), m = scratch("run_m");
  run_command(c, a);
  run_command(c, b);
  for (const char* f : {"widths.csv", "snapshot_t40.csv", "periods.json", "amplitudes_t40.csv", "manifest.yaml"}) {
    REQUIRE(fs::exists(a / f));
    CHECK(slurp(a / f) == slurp(b / f));
  }
  const std::string widths = slurp(a / "widths.csv");
  CHECK(widths.rfind("t,sigma_x,sigma_y,sigma_d,sigma_a\n0,0,0,0,0\n", 0) == 0);
  CHECK(std::count(widths.begin(), widths.end(), '\n') == 42);

  run_command(parse_config(load_config_file((a / "manifest.yaml").string())), m);
  for (const char* f : {"widths.csv", "snapshot_t40.csv", "periods.json"})
    CHECK(slurp(a / f) == slurp(m / f));
  CHECK(strip_comments(slurp(a / "manifest.yaml")) == strip_comments(slurp(m / "manifest.yaml")));
  for (const auto& p : {a, b, m}) fs::remove_all(p);
}

TEST_CASE("zero steps snapshot is the initial state") {
  YAML::Node doc = load_config_text("family: dft\nsteps: 0\n");
  const fs::path a = scratch("zero");
  run_command(parse_config(doc), a);
  const std::string s = slurp(a / "snapshot_t0.csv");
  CHECK(s == "x,y,p\n0,0,1\n");
  fs::remove_all(a);
}

TEST_CASE("spectrum output") {
  YAML::Node doc = load_config_text("command: spectrum\nfamily: hadamard2\nspectrum: {resolution: 11}\n");
  const fs::path a = scratch("spec");
  spectrum_command(parse_config(doc), a);
  const std::string bands = slurp(a / "bands.csv");
  CHECK(bands.rfind("kx,ky,branch,omega\n", 0) == 0);
  CHECK(std::count(bands.begin(), bands.end(), '\n') == 1 + 11 * 11 * 4);
  CHECK(slurp(a / "oracle.json").find("max_residual") != std::string::npos);
  fs::remove_all(a);
}

TEST_CASE("sweep runs every entry") {
  YAML::Node doc = load_config_text("preset: fig4\n");
  apply_override(doc, "steps=10");
  const fs::path a = scratch("sweep");
  const auto out = sweep_command(doc, "<test>", a, 2);
  REQUIRE(out.size() == 3);
  for (const auto& o : out) {
    CHECK(o.code == 0);
    CHECK(fs::exists(a / o.name / "widths.csv"));
  }
  fs::remove_all(a);
}
