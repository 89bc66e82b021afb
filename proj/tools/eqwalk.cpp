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

// eqwalk: command-line front end over the C API.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eqw/eqw.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

int exit_code(eqw_status s) {
  switch (s) {
    case EQW_OK: return kExitOk;
    case EQW_ERR_CONFIG:
    case EQW_ERR_INVALID_ARGUMENT: return kExitConfig;
    case EQW_ERR_NUMERICAL: return kExitNumerical;
    default: return kExitOther;
  }
}

int report(eqw_status s) {
  if (s != EQW_OK) std::fprintf(stderr, "eqwalk: %s: %s\n", eqw_status_name(s), eqw_last_error());
  return exit_code(s);
}

struct Options {
  std::string config;
  std::string preset;
  std::vector<std::string> sets;
  std::string out;
  int workers = 1;
};

void add_common(CLI::App* cmd, Options& o) {
  auto* cfg = cmd->add_option("-c,--config", o.config, "YAML config file");
  auto* pre = cmd->add_option("-p,--preset", o.preset, "named preset (see 'presets list')");
  cfg->excludes(pre);
  cmd->add_option("-s,--set", o.sets, "override, key.sub=value (repeatable)");
  cmd->add_option("-o,--out", o.out, "output directory");
}

// Loads the config and applies overrides; returns nullptr after reporting.
eqw_config* load(const Options& o, int& code) {
  eqw_config* cfg = nullptr;
  eqw_status s;
  if (!o.config.empty()) {
    s = eqw_config_load_file(o.config.c_str(), &cfg);
  } else if (!o.preset.empty()) {
    s = eqw_config_from_preset(o.preset.c_str(), &cfg);
  } else {
    s = eqw_config_load_string("{}", &cfg);
  }
  for (const std::string& a : o.sets) {
    if (s != EQW_OK) break;
    s = eqw_config_set(cfg, a.c_str());
  }
  if (s == EQW_OK) s = eqw_config_validate(cfg, nullptr);
  if (s != EQW_OK) {
    code = report(s);
    eqw_config_free(cfg);
    return nullptr;
  }
  for (size_t i = 0; i < eqw_config_note_count(cfg); ++i)
    std::fprintf(stderr, "note: %s\n", eqw_config_note(cfg, i));
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Electric discrete-time quantum walks in one and two dimensions"};
  app.set_version_flag("--version", std::string("eqwalk ") + eqw_version());
  app.require_subcommand(1);

  Options run_opts, spec_opts, sweep_opts;
  auto* run = app.add_subcommand("run", "evolve a walk and write widths, snapshots, manifest");
  add_common(run, run_opts);
  auto* spectrum = app.add_subcommand("spectrum", "sample dispersion bands on a k-grid");
  add_common(spectrum, spec_opts);
  auto* sweep = app.add_subcommand("sweep", "run every entry of a sweep, one directory each");
  add_common(sweep, sweep_opts);
  sweep->add_option("-w,--workers", sweep_opts.workers, "parallel entries")->check(CLI::PositiveNumber);
  auto* presets = app.add_subcommand("presets", "preset catalogue");
  auto* presets_list = presets->add_subcommand("list", "list preset names");
  presets->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  if (presets_list->parsed()) {
    for (size_t i = 0; i < eqw_preset_count(); ++i)
      std::printf("%-8s %s\n", eqw_preset_name(i), eqw_preset_description(i));
    return kExitOk;
  }

  int code = kExitOk;
  if (run->parsed()) {
    eqw_config* cfg = load(run_opts, code);
    if (!cfg) return code;
    code = report(eqw_run(cfg, run_opts.out.c_str()));
    eqw_config_free(cfg);
    return code;
  }
  if (spectrum->parsed()) {
    eqw_config* cfg = load(spec_opts, code);
    if (!cfg) return code;
    code = report(eqw_spectrum(cfg, spec_opts.out.c_str()));
    eqw_config_free(cfg);
    return code;
  }
  if (sweep->parsed()) {
    eqw_config* cfg = load(sweep_opts, code);
    if (!cfg) return code;
    size_t entries = 0, failed = 0;
    const eqw_status s = eqw_sweep(cfg, sweep_opts.out.c_str(), sweep_opts.workers, &entries, &failed);
    if (failed > 0) std::fprintf(stderr, "eqwalk: %zu of %zu sweep entries failed\n", failed, entries);
    code = report(s);
    eqw_config_free(cfg);
    return code;
  }
  return kExitOther;
}
