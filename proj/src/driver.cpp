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

#include "eqw/driver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "eqw/error.hpp"
#include "eqw/export.hpp"
#include "eqw/observe.hpp"

namespace eqw {

namespace fs = std::filesystem;

namespace {

class SnapshotWriter : public Observer {
 public:
  SnapshotWriter(fs::path dir, std::vector<long> times, bool probabilities, bool amplitudes)
      : dir_(std::move(dir)), times_(std::move(times)), probs_(probabilities), amps_(amplitudes) {}

  void observe(const WalkState1D& st) override { write(st); }
  void observe(const WalkState2D& st) override { write(st); }

 private:
  template <class State>
  void write(const State& st) {
    if (!std::binary_search(times_.begin(), times_.end(), st.time())) return;
    const std::string t = std::to_string(st.time());
    if (probs_) write_snapshot_csv(dir_ / ("snapshot_t" + t + ".csv"), st);
    if (amps_) write_amplitudes_csv(dir_ / ("amplitudes_t" + t + ".csv"), st);
  }

  fs::path dir_;
  std::vector<long> times_;
  bool probs_, amps_;
};

void prepare_dir(const fs::path& out) {
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) fail(ErrorCode::Io, "cannot create '" + out.string() + "': " + ec.message());
}

void write_manifest(const RunConfig& cfg, const fs::path& out) {
  std::string text = "# eqwalk run manifest\nversion: " + std::string(kVersion) + "\n";
  if (!cfg.preset.empty()) text += "# preset: " + cfg.preset + "\n";
  for (const std::string& n : cfg.notes) text += "# " + n + "\n";
  write_text(out / "manifest.yaml", text + emit_config(cfg));
}

const std::vector<double>& pick_series(const WidthSeries& s, const std::string& name) {
  if (name == "sigma_y") return s.sigma_y;
  if (name == "sigma_d") return s.sigma_d;
  if (name == "sigma_a") return s.sigma_a;
  return s.sigma_x;
}

}  // namespace

fs::path default_output_dir() {
  const char* env = std::getenv(kOutputDirEnv);
  if (env && *env) return fs::path(env);
  return fs::path("eqwalk-out");
}

void run_command(const RunConfig& cfg, const fs::path& out) {
  prepare_dir(out);
  WidthRecorder widths;
  std::vector<long> times = cfg.snapshot_times;
  if (times.empty()) times.push_back(cfg.walk.steps);
  SnapshotWriter snaps(out, times, cfg.snapshot, cfg.amplitudes);
  std::vector<Observer*> observers;
  if (cfg.widths || cfg.periods) observers.push_back(&widths);
  if (cfg.snapshot || cfg.amplitudes) observers.push_back(&snaps);
  run(cfg.walk, observers);

  if (cfg.widths) write_widths_csv(out / "widths.csv", widths.series());
  if (cfg.periods) {
    const std::vector<double>& s = pick_series(widths.series(), cfg.period_opts.series);
    long max_period = cfg.period_opts.max_period;
    if (max_period == 0) max_period = std::min<long>(64, static_cast<long>(s.size()) / 3);
    std::vector<PeriodScore> found;
    if (max_period >= 1) found = detect_periods(s, max_period);
    write_periods_json(out / "periods.json", found);
  }
  write_manifest(cfg, out);
}

void spectrum_command(const RunConfig& cfg, const fs::path& out) {
  prepare_dir(out);
  BandSpec spec;
  spec.walk = cfg.walk;
  spec.p = cfg.spectrum.p;
  spec.field_axis = cfg.spectrum.field_axis;
  spec.resolution = cfg.spectrum.resolution;
  const BandGrid grid = sample_bands(spec);
  write_bands_csv(out / "bands.csv", grid);
  if (cfg.spectrum.oracle) {
    nlohmann::json j;
    j["family"] = std::string(to_string(cfg.walk.family));
    j["p"] = spec.p;
    j["field_axis"] = std::string(to_string(spec.field_axis));
    j["resolution"] = spec.resolution;
    j["closed_form"] = grid.closed_form;
    if (grid.closed_form) {
      j["max_residual"] = grid.max_oracle_residual;
      j["tolerance"] = kOracleTolerance;
      j["within_tolerance"] = grid.max_oracle_residual <= kOracleTolerance;
    } else {
      j["note"] = "no closed form for this walk; bands are the eigenphases themselves";
    }
    write_text(out / "oracle.json", j.dump(2) + "\n");
  }
  write_manifest(cfg, out);
}

std::vector<SweepOutcome> sweep_command(const YAML::Node& doc, const std::string& source,
                                        const fs::path& out, int workers) {
  const std::vector<SweepEntry> entries = expand_sweep(doc, source);
  // Parse everything up front so config errors surface before any work starts.
  std::vector<RunConfig> configs;
  for (const SweepEntry& e : entries)
    configs.push_back(parse_config(e.doc, source + (e.name.empty() ? "" : " [" + e.name + "]")));

  std::vector<SweepOutcome> results(entries.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      SweepOutcome& r = results[i];
      r.name = entries[i].name;
      const fs::path dir = entries[i].name.empty() ? out : out / entries[i].name;
      try {
        if (configs[i].command == Command::Spectrum)
          spectrum_command(configs[i], dir);
        else
          run_command(configs[i], dir);
      } catch (const Error& e) {
        r.code = static_cast<int>(e.code());
        r.message = e.what();
      } catch (const std::exception& e) {
        r.code = -1;
        r.message = e.what();
      }
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(entries.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  return results;
}

}  // namespace eqw
