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

#include "eqw/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <regex>
#include <set>
#include <sstream>

#include "eqw/error.hpp"
#include "eqw/rational.hpp"

namespace eqw {

namespace {

constexpr double kPi = std::numbers::pi;

std::string where(const std::string& source, const YAML::Node& node) {
  const YAML::Mark m = node.Mark();
  if (m.is_null() || m.line < 0) return source + ": ";
  return source + ":" + std::to_string(m.line + 1) + ": ";
}

[[noreturn]] void config_error(const std::string& source, const YAML::Node& node,
                               const std::string& msg) {
  fail(ErrorCode::Config, where(source, node) + msg);
}

std::string fmt17(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string short_num(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool parse_double(const std::string& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

// Number, or a multiple of pi: "pi/4", "3pi/8", "-pi*3/4".
bool parse_angle(const std::string& text, double& out) {
  const std::string s = trim(text);
  if (parse_double(s, out)) return true;
  static const std::regex re(R"(^([+-]?[0-9]*\.?[0-9]*)\s*\*?\s*pi\s*(?:\*\s*([0-9]*\.?[0-9]+))?\s*(?:/\s*([0-9]*\.?[0-9]+))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return false;
  double coef = 1.0;
  const std::string c = m[1].str();
  if (c == "-") coef = -1.0;
  else if (!c.empty() && c != "+" && !parse_double(c, coef)) return false;
  double mul = 1.0, den = 1.0;
  if (m[2].matched && !parse_double(m[2].str(), mul)) return false;
  if (m[3].matched && (!parse_double(m[3].str(), den) || den == 0.0)) return false;
  out = coef * mul * kPi / den;
  return true;
}

double get_angle(const YAML::Node& n, const std::string& key, const std::string& source) {
  if (!n.IsScalar()) config_error(source, n, "'" + key + "' must be a number or multiple of pi");
  double v = 0.0;
  if (!parse_angle(n.Scalar(), v) || !std::isfinite(v))
    config_error(source, n, "'" + key + "': cannot parse angle '" + n.Scalar() + "'");
  return v;
}

long get_long(const YAML::Node& n, const std::string& key, const std::string& source) {
  if (!n.IsScalar()) config_error(source, n, "'" + key + "' must be an integer");
  const std::string s = trim(n.Scalar());
  long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    config_error(source, n, "'" + key + "': expected an integer, got '" + s + "'");
  return v;
}

bool get_bool(const YAML::Node& n, const std::string& key, const std::string& source) {
  try {
    return n.as<bool>();
  } catch (const YAML::Exception&) {
    config_error(source, n, "'" + key + "' must be true or false");
  }
}

std::string get_string(const YAML::Node& n, const std::string& key, const std::string& source) {
  if (!n.IsScalar()) config_error(source, n, "'" + key + "' must be a string");
  return n.Scalar();
}

void check_keys(const YAML::Node& map, const std::set<std::string>& allowed,
                const std::string& context, const std::string& source) {
  if (!map.IsMap()) config_error(source, map, context + " must be a mapping");
  for (const auto& kv : map) {
    const std::string k = kv.first.Scalar();
    if (!allowed.count(k)) config_error(source, kv.first, "unknown key '" + k + "' in " + context);
  }
}

YAML::Node merge(const YAML::Node& base, const YAML::Node& over) {
  if (!base.IsMap() || !over.IsMap()) return over;
  YAML::Node out = YAML::Clone(base);
  for (const auto& kv : over) {
    const std::string k = kv.first.Scalar();
    // Shared, not cloned: clones lose the source marks used in messages.
    out[k] = out[k] ? merge(out[k], kv.second) : kv.second;
  }
  return out;
}

struct Preset {
  const char* name;
  const char* description;
  const char* yaml;
};

const Preset kPresets[] = {
    {"fig1", "1D dispersion, theta = pi/4, field 2pi/p with p = 1, 3, 4", R"(
command: spectrum
family: 1d
theta: pi/4
spectrum: {resolution: 401}
sweep: {p: [1, 3, 4]}
)"},
    {"fig2", "Grover walk: no field (t=600), field along x (t=600), diagonal field (t=1000)", R"(
family: grover
initial: grover-symmetric
sweep:
  cases:
    - {name: a, set: {steps: 600}}
    - {name: b, set: {steps: 600, field.x: 2pi*1/120}}
    - {name: c, set: {steps: 1000, field.x: 2pi*1/120, field.y: 2pi*1/120}}
)"},
    {"fig2a", "Grover walk without field, t = 600", R"(
family: grover
initial: grover-symmetric
steps: 600
)"},
    {"fig2b", "Grover walk, field 2pi/120 along x, t = 600", R"(
family: grover
initial: grover-symmetric
field: {x: 2pi*1/120, y: 0}
steps: 600
)"},
    {"fig2c", "Grover walk, field 2pi/120 along both axes, t = 1000", R"(
family: grover
initial: grover-symmetric
field: {x: 2pi*1/120, y: 2pi*1/120}
steps: 1000
)"},
    {"fig3", "alternate walk dispersion; stroboscopic p = 9, 8 and 8 with delta_theta = 0.05", R"(
command: spectrum
family: alternate
delta_theta: 0
spectrum: {resolution: 101, field_axis: x}
sweep:
  cases:
    - {name: a, set: {spectrum.p: 1}}
    - {name: b, set: {spectrum.p: 9}}
    - {name: c, set: {spectrum.p: 8}}
    - {name: d, set: {spectrum.p: 8, delta_theta: 0.05}}
)"},
    {"fig4", "alternate walk, field 2pi/120 along x, delta_theta = 0, 0.1, 0.2, t = 1000", R"(
family: alternate
initial: qubit-symmetric
field: {x: 2pi*1/120, y: 0}
steps: 1000
sweep: {delta_theta: [0, 0.1, 0.2]}
)"},
    {"fig5", "alternate walk, tilted field phi_x = 2 phi_y = 2pi/120, snapshot at t = 600", R"(
family: alternate
initial: qubit-symmetric
field: {x: 2pi*1/120, y: 2pi*1/240}
steps: 1000
snapshots: [600, 1000]
sweep: {delta_theta: [0, 0.1, 0.2]}
)"},
    {"fig6", "DFT walk: dispersion and field-free snapshot at t = 600", R"(
family: dft
initial: complex-symmetric
steps: 600
sweep:
  cases:
    - {name: a, set: {command: spectrum}}
    - {name: b, set: {command: run}}
)"},
    {"fig7", "DFT walk, field along x and along both axes, t = 600", R"(
family: dft
initial: complex-symmetric
steps: 600
sweep:
  cases:
    - {name: a, set: {field.x: 2pi*1/120}}
    - {name: b, set: {field.x: 2pi*1/120, field.y: 2pi*1/120}}
)"},
    {"fig8", "Hadamard walk: dispersion and field-free snapshot at t = 600", R"(
family: hadamard2
initial: complex-symmetric
steps: 600
sweep:
  cases:
    - {name: a, set: {command: spectrum}}
    - {name: b, set: {command: run}}
)"},
    {"fig9", "Hadamard walk, field 2pi/120 along x, t = 1000", R"(
family: hadamard2
initial: complex-symmetric
field: {x: 2pi*1/120, y: 0}
steps: 1000
)"},
    {"fig10", "Hadamard walk, field 2pi/120 along both axes, t = 1000", R"(
family: hadamard2
initial: complex-symmetric
field: {x: 2pi*1/120, y: 2pi*1/120}
steps: 1000
)"},
};

YAML::Node resolve_preset(const YAML::Node& doc, const std::string& source) {
  if (!doc.IsMap() || !doc["preset"]) return doc;
  const std::string name = get_string(doc["preset"], "preset", source);
  YAML::Node base;
  try {
    base = preset_node(name);
  } catch (const Error& e) {
    config_error(source, doc["preset"], e.what());
  }
  return merge(base, doc);
}

std::string default_initial(WalkFamily f) {
  switch (f) {
    case WalkFamily::OneD:
    case WalkFamily::Alternate: return "qubit-symmetric";
    case WalkFamily::Grover:
    case WalkFamily::Coin4: return "grover-symmetric";
    case WalkFamily::Dft:
    case WalkFamily::Hadamard: return "complex-symmetric";
  }
  return "qubit-symmetric";
}

cplx parse_amplitude(const YAML::Node& n, const std::string& source) {
  double re = 0.0, im = 0.0;
  if (n.IsScalar()) {
    if (!parse_double(trim(n.Scalar()), re)) config_error(source, n, "bad amplitude '" + n.Scalar() + "'");
    return {re, 0.0};
  }
  if (n.IsSequence() && n.size() == 2 && n[0].IsScalar() && n[1].IsScalar() &&
      parse_double(trim(n[0].Scalar()), re) && parse_double(trim(n[1].Scalar()), im))
    return {re, im};
  config_error(source, n, "amplitude must be a number or [re, im]");
}

std::string sanitize(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '/') out += '_';
    else if (c == '*' || c == ' ') continue;
    else out += c;
  }
  return out;
}

}  // namespace

FieldPhase parse_field(std::string_view text, std::string* note) {
  const std::string s = trim(text);
  static const std::regex frac(R"(^([+-]?)2\s*pi\s*(?:\*\s*([0-9]+)\s*)?/\s*([0-9]+)$)");
  std::smatch m;
  if (std::regex_match(s, m, frac)) {
    std::int64_t q = m[2].matched ? std::stoll(m[2].str()) : 1;
    const std::int64_t p = std::stoll(m[3].str());
    if (p == 0) fail(ErrorCode::Config, "field '" + s + "': zero denominator");
    if (m[1].str() == "-") q = -q;
    return FieldPhase::rational(q, p);
  }
  double v = 0.0;
  if (!parse_angle(s, v) || !std::isfinite(v))
    fail(ErrorCode::Config, "cannot parse field '" + s + "' (use 2pi*q/p or radians)");
  if (v == 0.0) return FieldPhase{};
  const FieldPhase r = phase_to_rational(v, kDecimalPhaseTolerance);
  const double err = std::fabs(r.radians() - v) / (2.0 * kPi);
  if (err <= kDecimalPhaseTolerance && r.p() <= kMaxRationalDenominator) {
    if (note)
      *note = "field " + s + " rad taken as " + r.to_string() + " (tolerance " +
              short_num(kDecimalPhaseTolerance) + " on phi/2pi)";
    return r;
  }
  if (note)
    *note = "field " + s + " rad has no fraction with denominator <= " +
            std::to_string(kMaxRationalDenominator) + " within " + short_num(kDecimalPhaseTolerance) +
            "; evaluated as a real phase";
  return FieldPhase::real(v);
}

std::vector<std::string> initial_state_names() {
  return {"up", "down", "qubit-symmetric", "grover-symmetric", "complex-symmetric", "x-plus"};
}

std::vector<cplx> named_initial_state(std::string_view name) {
  const double r2 = 1.0 / std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  if (name == "up") return {1.0, 0.0};
  if (name == "down") return {0.0, 1.0};
  if (name == "qubit-symmetric") return {r2, i * r2};
  if (name == "grover-symmetric") return {0.5, -0.5, -0.5, 0.5};
  if (name == "complex-symmetric") return {0.5, 0.5 * i, 0.5 * i, -0.5};
  if (name == "x-plus") return {1.0, 0.0, 0.0, 0.0};
  fail(ErrorCode::Config, "unknown initial state '" + std::string(name) + "'");
}

YAML::Node load_config_text(const std::string& text, const std::string& source) {
  try {
    YAML::Node n = YAML::Load(text);
    if (n.IsNull()) n = YAML::Node(YAML::NodeType::Map);
    return n;
  } catch (const YAML::Exception& e) {
    fail(ErrorCode::Config, source + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
}

YAML::Node load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Config, "cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_config_text(ss.str(), path);
}

YAML::Node preset_node(std::string_view name) {
  for (const Preset& p : kPresets)
    if (name == p.name) return load_config_text(p.yaml, "preset " + std::string(p.name));
  fail(ErrorCode::Config, "unknown preset '" + std::string(name) + "'");
}

std::vector<PresetInfo> list_presets() {
  std::vector<PresetInfo> out;
  for (const Preset& p : kPresets) out.push_back({p.name, p.description});
  return out;
}

void apply_override(YAML::Node& doc, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0)
    fail(ErrorCode::Config, "override '" + std::string(assignment) + "' is not key=value");
  const std::string key = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  YAML::Node v;
  try {
    v = YAML::Load(value);
  } catch (const YAML::Exception& e) {
    fail(ErrorCode::Config, "override '" + key + "': " + e.msg);
  }
  if (!doc.IsMap()) doc = YAML::Node(YAML::NodeType::Map);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    parts.push_back(key.substr(start, dot - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  // yaml-cpp nodes are handles; walk down by reassignment.
  std::vector<YAML::Node> chain{doc};
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    YAML::Node next = chain.back()[parts[i]];
    if (!next || !next.IsMap()) {
      chain.back()[parts[i]] = YAML::Node(YAML::NodeType::Map);
      next = chain.back()[parts[i]];
    }
    chain.push_back(next);
  }
  chain.back()[parts.back()] = v;
}

RunConfig parse_config(const YAML::Node& raw, const std::string& source,
                       const Command* forced) {
  const YAML::Node doc = resolve_preset(raw, source);
  if (!doc.IsMap()) config_error(source, doc, "config must be a mapping");
  check_keys(doc,
             {"command", "preset", "family", "theta", "theta_x", "theta_y", "delta_theta", "alpha",
              "beta", "coin", "field", "steps", "initial", "observers", "snapshots", "periods",
              "output", "spectrum", "sweep", "version"},
             "config", source);

  RunConfig cfg;
  if (doc["preset"]) cfg.preset = doc["preset"].Scalar();
  if (const auto n = doc["command"]) {
    const std::string c = get_string(n, "command", source);
    if (c == "run") cfg.command = Command::Run;
    else if (c == "spectrum") cfg.command = Command::Spectrum;
    else config_error(source, n, "command must be 'run' or 'spectrum'");
  }
  if (forced) cfg.command = *forced;

  WalkSpec& w = cfg.walk;
  if (!doc["family"]) config_error(source, doc, "missing 'family'");
  try {
    w.family = family_from_string(get_string(doc["family"], "family", source));
  } catch (const Error& e) {
    config_error(source, doc["family"], e.what());
  }
  if (doc["alpha"]) w.alpha = get_angle(doc["alpha"], "alpha", source);
  if (doc["beta"]) w.beta = get_angle(doc["beta"], "beta", source);
  if (doc["theta"]) w.theta = get_angle(doc["theta"], "theta", source);
  w.theta_x = w.theta_y = w.theta;
  if (doc["delta_theta"]) {
    if (doc["theta_x"] || doc["theta_y"])
      config_error(source, doc["delta_theta"], "give either delta_theta or theta_x/theta_y");
    cfg.has_delta_theta = true;
    cfg.delta_theta = get_angle(doc["delta_theta"], "delta_theta", source);
    w.theta_x = kPi / 4 + cfg.delta_theta;
    w.theta_y = kPi / 4 - cfg.delta_theta;
  }
  if (doc["theta_x"]) w.theta_x = get_angle(doc["theta_x"], "theta_x", source);
  if (doc["theta_y"]) w.theta_y = get_angle(doc["theta_y"], "theta_y", source);
  if (doc["coin"]) {
    w.coin4 = get_string(doc["coin"], "coin", source);
    try {
      (void)coin_by_name(w.coin4, w.alpha, w.beta, w.theta);
    } catch (const Error& e) {
      config_error(source, doc["coin"], e.what());
    }
  }

  if (const auto f = doc["field"]) {
    check_keys(f, {"x", "y"}, "field", source);
    for (const char* axis : {"x", "y"}) {
      const YAML::Node n = f[axis];
      if (!n) continue;
      std::string note;
      FieldPhase phi;
      try {
        phi = parse_field(get_string(n, std::string("field.") + axis, source), &note);
      } catch (const Error& e) {
        config_error(source, n, e.what());
      }
      if (!note.empty()) cfg.notes.push_back(note);
      (axis[0] == 'x' ? w.field_x : w.field_y) = phi;
    }
  }
  if (w.family == WalkFamily::OneD && !w.field_y.is_zero())
    config_error(source, doc["field"], "1d walks take no field.y");

  if (doc["steps"]) {
    w.steps = get_long(doc["steps"], "steps", source);
    if (w.steps < 0) config_error(source, doc["steps"], "steps must be >= 0");
  } else if (cfg.command == Command::Run) {
    config_error(source, doc, "missing 'steps'");
  }

  const YAML::Node init = doc["initial"];
  if (!init || init.IsScalar()) {
    cfg.initial_name = init ? init.Scalar() : default_initial(w.family);
    try {
      w.initial = named_initial_state(cfg.initial_name);
    } catch (const Error& e) {
      config_error(source, init ? init : doc, e.what());
    }
  } else if (init.IsSequence()) {
    for (const auto& a : init) w.initial.push_back(parse_amplitude(a, source));
  } else {
    config_error(source, init, "'initial' must be a name or a list of amplitudes");
  }
  if (cfg.command == Command::Run) {
    try {
      w.validate();
      double norm = 0.0;
      for (const cplx& a : w.initial) norm += std::norm(a);
      if (std::fabs(norm - 1.0) > kCoinNormTolerance)
        fail(ErrorCode::Config, "initial coin state has norm^2 " + fmt17(norm));
    } catch (const Error& e) {
      config_error(source, init ? init : doc, e.what());
    }
  }

  if (const auto obs = doc["observers"]) {
    if (!obs.IsSequence()) config_error(source, obs, "'observers' must be a list");
    cfg.widths = cfg.snapshot = false;
    for (const auto& o : obs) {
      const std::string s = get_string(o, "observers", source);
      if (s == "widths") cfg.widths = true;
      else if (s == "snapshot") cfg.snapshot = true;
      else if (s == "periods") cfg.periods = true;
      else if (s == "amplitudes") cfg.amplitudes = true;
      else config_error(source, o, "unknown observer '" + s + "'");
    }
  }
  if (const auto snaps = doc["snapshots"]) {
    if (!snaps.IsSequence()) config_error(source, snaps, "'snapshots' must be a list of steps");
    for (const auto& s : snaps) {
      const long t = get_long(s, "snapshots", source);
      if (t < 0 || t > w.steps) config_error(source, s, "snapshot step outside [0, steps]");
      cfg.snapshot_times.push_back(t);
    }
    std::sort(cfg.snapshot_times.begin(), cfg.snapshot_times.end());
    cfg.snapshot_times.erase(std::unique(cfg.snapshot_times.begin(), cfg.snapshot_times.end()),
                             cfg.snapshot_times.end());
  }
  if (const auto per = doc["periods"]) {
    check_keys(per, {"series", "max_period"}, "periods", source);
    if (per["series"]) {
      cfg.period_opts.series = get_string(per["series"], "periods.series", source);
      const std::string& s = cfg.period_opts.series;
      if (s != "sigma_x" && s != "sigma_y" && s != "sigma_d" && s != "sigma_a")
        config_error(source, per["series"], "periods.series must be sigma_x, sigma_y, sigma_d or sigma_a");
    }
    if (per["max_period"]) {
      cfg.period_opts.max_period = get_long(per["max_period"], "periods.max_period", source);
      if (cfg.period_opts.max_period < 1 || 3 * cfg.period_opts.max_period > w.steps + 1)
        config_error(source, per["max_period"], "periods.max_period must be in [1, (steps + 1) / 3]");
    }
  }
  if (doc["output"]) cfg.output = get_string(doc["output"], "output", source);

  if (const auto sp = doc["spectrum"]) {
    check_keys(sp, {"resolution", "p", "field_axis", "oracle"}, "spectrum", source);
    if (sp["resolution"]) {
      const long r = get_long(sp["resolution"], "spectrum.resolution", source);
      if (r < 1 || r > 100000) config_error(source, sp["resolution"], "spectrum.resolution out of range");
      cfg.spectrum.resolution = static_cast<int>(r);
    }
    if (sp["p"]) {
      const long p = get_long(sp["p"], "spectrum.p", source);
      if (p < 1 || p > 10000) config_error(source, sp["p"], "spectrum.p must be in [1, 10000]");
      cfg.spectrum.p = static_cast<int>(p);
    }
    if (sp["field_axis"]) {
      try {
        cfg.spectrum.field_axis = axis_from_string(get_string(sp["field_axis"], "spectrum.field_axis", source));
      } catch (const Error& e) {
        config_error(source, sp["field_axis"], e.what());
      }
    }
    if (sp["oracle"]) cfg.spectrum.oracle = get_bool(sp["oracle"], "spectrum.oracle", source);
  }
  if (const auto sw = doc["sweep"]) {
    check_keys(sw, {"field_x", "field_y", "theta", "delta_theta", "p", "cases"}, "sweep", source);
  }
  return cfg;
}

std::string emit_config(const RunConfig& cfg) {
  const WalkSpec& w = cfg.walk;
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "command" << YAML::Value
      << (cfg.command == Command::Run ? "run" : "spectrum");
  out << YAML::Key << "family" << YAML::Value << std::string(to_string(w.family));
  out << YAML::Key << "alpha" << YAML::Value << fmt17(w.alpha);
  out << YAML::Key << "beta" << YAML::Value << fmt17(w.beta);
  out << YAML::Key << "theta" << YAML::Value << fmt17(w.theta);
  if (w.family == WalkFamily::Alternate) {
    if (cfg.has_delta_theta) {
      out << YAML::Key << "delta_theta" << YAML::Value << fmt17(cfg.delta_theta);
    } else {
      out << YAML::Key << "theta_x" << YAML::Value << fmt17(w.theta_x);
      out << YAML::Key << "theta_y" << YAML::Value << fmt17(w.theta_y);
    }
  }
  if (w.family == WalkFamily::Coin4) out << YAML::Key << "coin" << YAML::Value << w.coin4;
  out << YAML::Key << "field" << YAML::Value << YAML::Flow << YAML::BeginMap;
  out << YAML::Key << "x" << YAML::Value << (w.field_x.is_zero() ? std::string("0") : w.field_x.to_string());
  out << YAML::Key << "y" << YAML::Value << (w.field_y.is_zero() ? std::string("0") : w.field_y.to_string());
  out << YAML::EndMap;
  out << YAML::Key << "steps" << YAML::Value << w.steps;
  if (!cfg.initial_name.empty()) {
    out << YAML::Key << "initial" << YAML::Value << cfg.initial_name;
  } else {
    out << YAML::Key << "initial" << YAML::Value << YAML::BeginSeq;
    for (const cplx& a : w.initial)
      out << YAML::Flow << YAML::BeginSeq << fmt17(a.real()) << fmt17(a.imag()) << YAML::EndSeq;
    out << YAML::EndSeq;
  }
  out << YAML::Key << "observers" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  if (cfg.widths) out << "widths";
  if (cfg.snapshot) out << "snapshot";
  if (cfg.periods) out << "periods";
  if (cfg.amplitudes) out << "amplitudes";
  out << YAML::EndSeq;
  if (!cfg.snapshot_times.empty()) {
    out << YAML::Key << "snapshots" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (long t : cfg.snapshot_times) out << t;
    out << YAML::EndSeq;
  }
  if (cfg.periods) {
    out << YAML::Key << "periods" << YAML::Value << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "series" << YAML::Value << cfg.period_opts.series;
    if (cfg.period_opts.max_period > 0)
      out << YAML::Key << "max_period" << YAML::Value << cfg.period_opts.max_period;
    out << YAML::EndMap;
  }
  out << YAML::Key << "spectrum" << YAML::Value << YAML::Flow << YAML::BeginMap;
  out << YAML::Key << "resolution" << YAML::Value << cfg.spectrum.resolution;
  out << YAML::Key << "p" << YAML::Value << cfg.spectrum.p;
  out << YAML::Key << "field_axis" << YAML::Value << std::string(to_string(cfg.spectrum.field_axis));
  out << YAML::Key << "oracle" << YAML::Value << cfg.spectrum.oracle;
  out << YAML::EndMap;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

bool has_sweep(const YAML::Node& raw) {
  if (!raw.IsMap()) return false;
  if (raw["sweep"]) return true;
  if (raw["preset"] && raw["preset"].IsScalar()) {
    try {
      return static_cast<bool>(preset_node(raw["preset"].Scalar())["sweep"]);
    } catch (const Error&) {
      return false;
    }
  }
  return false;
}

std::vector<SweepEntry> expand_sweep(const YAML::Node& raw, const std::string& source) {
  const YAML::Node doc = resolve_preset(raw, source);
  const YAML::Node sw = doc["sweep"];
  YAML::Node base = YAML::Clone(doc);
  base.remove("sweep");
  base.remove("preset");
  if (!sw) return {{"", base}};
  check_keys(sw, {"field_x", "field_y", "theta", "delta_theta", "p", "cases"}, "sweep", source);

  using Assign = std::vector<std::pair<std::string, std::string>>;
  struct Partial {
    std::string name;
    Assign set;
  };
  std::vector<Partial> entries{{"", {}}};

  if (const auto cases = sw["cases"]) {
    if (!cases.IsSequence() || cases.size() == 0)
      config_error(source, cases, "sweep.cases must be a non-empty list");
    std::vector<Partial> next;
    std::set<std::string> seen;
    for (const auto& c : cases) {
      check_keys(c, {"name", "set"}, "sweep case", source);
      if (!c["name"]) config_error(source, c, "sweep case needs a name");
      Partial p{sanitize(get_string(c["name"], "name", source)), {}};
      if (p.name.empty() || !seen.insert(p.name).second)
        config_error(source, c["name"], "sweep case names must be unique and non-empty");
      if (const auto set = c["set"]) {
        if (!set.IsMap()) config_error(source, set, "case 'set' must be a mapping");
        for (const auto& kv : set) {
          YAML::Emitter e;
          e << YAML::Flow << kv.second;
          p.set.emplace_back(kv.first.Scalar(), e.c_str());
        }
      }
      next.push_back(std::move(p));
    }
    entries = std::move(next);
  }

  const std::vector<std::pair<std::string, std::string>> axes = {
      {"field_x", "field.x"}, {"field_y", "field.y"}, {"theta", "theta"},
      {"delta_theta", "delta_theta"}, {"p", "spectrum.p"}};
  for (const auto& [axis, path] : axes) {
    const YAML::Node values = sw[axis];
    if (!values) continue;
    if (!values.IsSequence() || values.size() == 0)
      config_error(source, values, "sweep." + axis + " must be a non-empty list");
    std::vector<Partial> next;
    for (const Partial& e : entries)
      for (const auto& v : values) {
        if (!v.IsScalar()) config_error(source, v, "sweep values must be scalars");
        Partial p = e;
        const std::string label = axis + "=" + sanitize(v.Scalar());
        p.name = p.name.empty() ? label : p.name + "_" + label;
        p.set.emplace_back(path, v.Scalar());
        next.push_back(std::move(p));
      }
    entries = std::move(next);
  }

  std::vector<SweepEntry> out;
  for (const Partial& e : entries) {
    YAML::Node d = YAML::Clone(base);
    for (const auto& [k, v] : e.set) apply_override(d, k + "=" + v);
    out.push_back({e.name, d});
  }
  return out;
}

}  // namespace eqw
