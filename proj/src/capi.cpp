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

#include "eqw/eqw.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "eqw/config.hpp"
#include "eqw/driver.hpp"
#include "eqw/error.hpp"
#include "eqw/evolve.hpp"
#include "eqw/observe.hpp"
#include "eqw/rational.hpp"
#include "eqw/spectrum.hpp"

struct eqw_config {
  YAML::Node doc;
  std::string source;
  mutable std::vector<std::string> notes;
};

struct eqw_walk {
  std::optional<eqw::WalkState1D> s1;
  std::optional<eqw::Walk1D> w1;
  std::optional<eqw::WalkState2D> s2;
  std::optional<eqw::Walk2D> w2;
};

namespace {

thread_local std::string g_last_error;

eqw_status set_error(eqw_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
eqw_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return EQW_OK;
  } catch (const eqw::Error& e) {
    return set_error(static_cast<eqw_status>(e.code()), e.what());
  } catch (const YAML::Exception& e) {
    return set_error(EQW_ERR_CONFIG, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(EQW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(EQW_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(EQW_ERR_INTERNAL, "unknown error");
  }
}

constexpr eqw::Command kRunCommand = eqw::Command::Run;
constexpr eqw::Command kSpectrumCommand = eqw::Command::Spectrum;

eqw::RunConfig parse(const eqw_config* cfg, const eqw::Command* command = nullptr) {
  eqw::RunConfig rc = eqw::parse_config(cfg->doc, cfg->source, command);
  cfg->notes = rc.notes;
  return rc;
}

std::filesystem::path out_dir(const char* arg, const eqw::RunConfig& rc) {
  if (arg && *arg) return arg;
  if (!rc.output.empty()) return rc.output;
  return eqw::default_output_dir();
}

void require(const void* p, const char* what) {
  if (!p) eqw::fail(eqw::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

void reject_sweep(const eqw_config* cfg, const char* command) {
  if (eqw::has_sweep(cfg->doc))
    eqw::fail(eqw::ErrorCode::Config, cfg->source + ": config defines a sweep; use 'sweep' instead of '" +
                                          command + "'");
}

eqw_status make_config(YAML::Node doc, std::string source, eqw_config** out) {
  *out = new eqw_config{std::move(doc), std::move(source), {}};
  return EQW_OK;
}

}  // namespace

extern "C" {

const char* eqw_version(void) { return eqw::kVersion; }
const char* eqw_last_error(void) { return g_last_error.c_str(); }

const char* eqw_status_name(eqw_status status) {
  switch (status) {
    case EQW_OK: return "ok";
    case EQW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EQW_ERR_CONFIG: return "config error";
    case EQW_ERR_NUMERICAL: return "numerical failure";
    case EQW_ERR_IO: return "i/o error";
    case EQW_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

eqw_status eqw_config_load_file(const char* path, eqw_config** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    make_config(eqw::load_config_file(path), path, out);
  });
}

eqw_status eqw_config_load_string(const char* yaml, eqw_config** out) {
  return guarded([&] {
    require(yaml, "yaml");
    require(out, "out");
    make_config(eqw::load_config_text(yaml, "<string>"), "<string>", out);
  });
}

eqw_status eqw_config_from_preset(const char* name, eqw_config** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    (void)eqw::preset_node(name);
    YAML::Node doc(YAML::NodeType::Map);
    doc["preset"] = name;
    make_config(doc, std::string("preset ") + name, out);
  });
}

eqw_status eqw_config_set(eqw_config* cfg, const char* assignment) {
  return guarded([&] {
    require(cfg, "cfg");
    require(assignment, "assignment");
    eqw::apply_override(cfg->doc, assignment);
  });
}

eqw_status eqw_config_validate(const eqw_config* cfg, int* is_sweep) {
  return guarded([&] {
    require(cfg, "cfg");
    const bool sweep = eqw::has_sweep(cfg->doc);
    if (sweep) {
      cfg->notes.clear();
      for (const eqw::SweepEntry& e : eqw::expand_sweep(cfg->doc, cfg->source)) {
        const eqw::RunConfig rc = eqw::parse_config(e.doc, cfg->source + " [" + e.name + "]");
        cfg->notes.insert(cfg->notes.end(), rc.notes.begin(), rc.notes.end());
      }
    } else {
      (void)parse(cfg);
    }
    if (is_sweep) *is_sweep = sweep ? 1 : 0;
  });
}

eqw_status eqw_config_dump(const eqw_config* cfg, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    require(cfg, "cfg");
    std::string text;
    if (eqw::has_sweep(cfg->doc)) {
      for (const eqw::SweepEntry& e : eqw::expand_sweep(cfg->doc, cfg->source))
        text += "--- # " + e.name + "\n" +
                eqw::emit_config(eqw::parse_config(e.doc, cfg->source + " [" + e.name + "]"));
    } else {
      text = eqw::emit_config(parse(cfg));
    }
    if (needed) *needed = text.size() + 1;
    if (buf && cap > 0) {
      const std::size_t n = std::min(cap - 1, text.size());
      std::memcpy(buf, text.data(), n);
      buf[n] = '\0';
    }
  });
}

size_t eqw_config_note_count(const eqw_config* cfg) { return cfg ? cfg->notes.size() : 0; }

const char* eqw_config_note(const eqw_config* cfg, size_t index) {
  if (!cfg || index >= cfg->notes.size()) return nullptr;
  return cfg->notes[index].c_str();
}

void eqw_config_free(eqw_config* cfg) { delete cfg; }

size_t eqw_preset_count(void) { return eqw::list_presets().size(); }

const char* eqw_preset_name(size_t index) {
  static const std::vector<eqw::PresetInfo> presets = eqw::list_presets();
  return index < presets.size() ? presets[index].name.c_str() : nullptr;
}

const char* eqw_preset_description(size_t index) {
  static const std::vector<eqw::PresetInfo> presets = eqw::list_presets();
  return index < presets.size() ? presets[index].description.c_str() : nullptr;
}

eqw_status eqw_run(const eqw_config* cfg, const char* out) {
  return guarded([&] {
    require(cfg, "cfg");
    reject_sweep(cfg, "run");
    const eqw::RunConfig rc = parse(cfg, &kRunCommand);
    eqw::run_command(rc, out_dir(out, rc));
  });
}

eqw_status eqw_spectrum(const eqw_config* cfg, const char* out) {
  return guarded([&] {
    require(cfg, "cfg");
    reject_sweep(cfg, "spectrum");
    const eqw::RunConfig rc = parse(cfg, &kSpectrumCommand);
    eqw::spectrum_command(rc, out_dir(out, rc));
  });
}

eqw_status eqw_sweep(const eqw_config* cfg, const char* out, int workers, size_t* entries,
                     size_t* failed) {
  eqw_status first = EQW_OK;
  std::string first_msg;
  const eqw_status s = guarded([&] {
    require(cfg, "cfg");
    std::filesystem::path dir;
    if (out && *out) {
      dir = out;
    } else if (cfg->doc["output"] && cfg->doc["output"].IsScalar()) {
      dir = cfg->doc["output"].Scalar();
    } else {
      dir = eqw::default_output_dir();
    }
    const auto results = eqw::sweep_command(cfg->doc, cfg->source, dir, workers);
    std::size_t bad = 0;
    for (const eqw::SweepOutcome& r : results) {
      if (r.code == 0) continue;
      ++bad;
      if (first == EQW_OK) {
        first = r.code > 0 ? static_cast<eqw_status>(r.code) : EQW_ERR_INTERNAL;
        first_msg = "sweep entry '" + r.name + "': " + r.message;
      }
    }
    if (entries) *entries = results.size();
    if (failed) *failed = bad;
  });
  if (s != EQW_OK) return s;
  if (first != EQW_OK) return set_error(first, first_msg);
  return EQW_OK;
}

eqw_status eqw_walk_create(const eqw_config* cfg, eqw_walk** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    reject_sweep(cfg, "walk");
    const eqw::RunConfig rc = parse(cfg, &kRunCommand);
    auto w = std::make_unique<eqw_walk>();
    if (rc.walk.family == eqw::WalkFamily::OneD) {
      w->s1.emplace(eqw::new_localized_1d(rc.walk.initial, rc.walk.steps));
      w->w1.emplace(eqw::make_walk_1d(rc.walk));
    } else {
      w->s2.emplace(eqw::new_localized_2d(rc.walk.initial, rc.walk.steps));
      w->w2.emplace(eqw::make_walk_2d(rc.walk));
    }
    *out = w.release();
  });
}

eqw_status eqw_walk_step(eqw_walk* walk, long count) {
  return guarded([&] {
    require(walk, "walk");
    if (count < 0) eqw::fail(eqw::ErrorCode::InvalidArgument, "count must be >= 0");
    for (long i = 0; i < count; ++i) {
      if (walk->s1)
        walk->w1->step(*walk->s1);
      else
        walk->w2->step(*walk->s2);
    }
  });
}

long eqw_walk_time(const eqw_walk* walk) {
  if (!walk) return -1;
  return walk->s1 ? walk->s1->time() : walk->s2->time();
}

int eqw_walk_dims(const eqw_walk* walk) {
  if (!walk) return 0;
  return walk->s1 ? 1 : 2;
}

eqw_status eqw_walk_widths(const eqw_walk* walk, double out[4]) {
  return guarded([&] {
    require(walk, "walk");
    require(out, "out");
    const eqw::Widths w = walk->s1 ? eqw::widths(*walk->s1) : eqw::widths(*walk->s2);
    out[0] = w.sigma_x;
    out[1] = w.sigma_y;
    out[2] = w.sigma_d;
    out[3] = w.sigma_a;
  });
}

eqw_status eqw_walk_norm(const eqw_walk* walk, double* out) {
  return guarded([&] {
    require(walk, "walk");
    require(out, "out");
    *out = walk->s1 ? walk->s1->norm_squared() : walk->s2->norm_squared();
  });
}

eqw_status eqw_walk_probability(const eqw_walk* walk, long x, long y, double* out) {
  return guarded([&] {
    require(walk, "walk");
    require(out, "out");
    double p = 0.0;
    if (walk->s1) {
      const auto& s = *walk->s1;
      if (x >= s.x_min() && x <= s.x_max())
        p = std::norm(s.amplitude(x, 0)) + std::norm(s.amplitude(x, 1));
    } else {
      const auto& s = *walk->s2;
      if (x >= s.x_min() && x <= s.x_max() && y >= s.y_min() && y <= s.y_max())
        for (int k = 0; k < s.coin_dim(); ++k) p += std::norm(s.amplitude(x, y, k));
    }
    *out = p;
  });
}

void eqw_walk_destroy(eqw_walk* walk) { delete walk; }

eqw_status eqw_dispersion_1d(double theta, int p, double k, double* omega_plus) {
  return guarded([&] {
    require(omega_plus, "omega_plus");
    *omega_plus = p == 1 ? eqw::dispersion_1d(theta, k).plus
                         : eqw::effective_dispersion_1d(theta, p, k).plus;
  });
}

eqw_status eqw_dispersion_alternate(double theta_x, double theta_y, int p, double kx, double ky,
                                    eqw_axis field_axis, double* omega_plus) {
  return guarded([&] {
    require(omega_plus, "omega_plus");
    const eqw::Axis axis = field_axis == EQW_AXIS_Y ? eqw::Axis::Y : eqw::Axis::X;
    *omega_plus = p == 1 ? eqw::dispersion_alternate(theta_x, theta_y, kx, ky).plus
                         : eqw::stroboscopic_dispersion_alternate(theta_x, theta_y, p, kx, ky, axis).plus;
  });
}

eqw_status eqw_dispersion_hadamard2(double kx, double ky, double out[2]) {
  return guarded([&] {
    require(out, "out");
    const eqw::HadamardBranches h = eqw::dispersion_hadamard2(kx, ky);
    out[0] = h.omega1;
    out[1] = h.omega2;
  });
}

eqw_status eqw_dispersion_dft(double kx, double ky, double out[4]) {
  return guarded([&] {
    require(out, "out");
    const auto r = eqw::dispersion_dft(kx, ky);
    for (int i = 0; i < 4; ++i) out[i] = r[static_cast<std::size_t>(i)];
  });
}

eqw_status eqw_max_group_velocity_1d(double theta, int p, double* v_max, double* k_at) {
  return guarded([&] {
    const eqw::GroupVelocityMax g = eqw::max_group_velocity_1d(theta, p);
    if (v_max) *v_max = g.v_max;
    if (k_at) *k_at = g.k_at;
  });
}

eqw_status eqw_continued_fraction(double x, int max_terms, int64_t* terms, int* count, int* exact) {
  return guarded([&] {
    require(terms, "terms");
    const eqw::CFExpansion cf = eqw::expand(x, max_terms);
    for (std::size_t i = 0; i < cf.terms.size(); ++i) terms[i] = cf.terms[i];
    if (count) *count = static_cast<int>(cf.terms.size());
    if (exact) *exact = cf.exact ? 1 : 0;
  });
}

eqw_status eqw_phase_to_rational(double phi, double tolerance, int64_t* q, int64_t* p) {
  return guarded([&] {
    const eqw::FieldPhase f = eqw::phase_to_rational(phi, tolerance);
    if (q) *q = f.q();
    if (p) *p = f.p();
  });
}

eqw_status eqw_detect_periods(const double* series, size_t n, long max_period, long* periods,
                              double* scores, size_t cap, size_t* count) {
  return guarded([&] {
    require(series, "series");
    const auto found = eqw::detect_periods(std::span<const double>(series, n), max_period);
    for (std::size_t i = 0; i < found.size() && i < cap; ++i) {
      if (periods) periods[i] = found[i].period;
      if (scores) scores[i] = found[i].score;
    }
    if (count) *count = found.size();
  });
}

}  // extern "C"
