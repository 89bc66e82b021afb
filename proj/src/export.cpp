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

#include "eqw/export.hpp"

#include <charconv>
#include <cstdio>
#include <memory>

#include <json.hpp>

#include "eqw/error.hpp"

namespace eqw {

namespace {

class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path) : path_(path) {
    file_.reset(std::fopen(path.c_str(), "wb"));
    if (!file_) fail(ErrorCode::Io, "cannot write '" + path.string() + "'");
    buf_.reserve(kFlushAt + 256);
  }

  CsvWriter& text(std::string_view s) {
    buf_.append(s);
    return *this;
  }
  CsvWriter& num(double v) {
    char tmp[32];
    auto r = std::to_chars(tmp, tmp + sizeof(tmp), v, std::chars_format::general, 17);
    buf_.append(tmp, r.ptr);
    return *this;
  }
  CsvWriter& integer(long v) {
    char tmp[24];
    auto r = std::to_chars(tmp, tmp + sizeof(tmp), v);
    buf_.append(tmp, r.ptr);
    return *this;
  }
  CsvWriter& sep() { return text(","); }
  void end_row() {
    buf_ += '\n';
    if (buf_.size() >= kFlushAt) flush();
  }
  void close() {
    flush();
    const bool bad = std::fclose(file_.release()) != 0;
    if (bad) fail(ErrorCode::Io, "error closing '" + path_.string() + "'");
  }

 private:
  static constexpr std::size_t kFlushAt = 1 << 20;

  void flush() {
    if (!buf_.empty() && std::fwrite(buf_.data(), 1, buf_.size(), file_.get()) != buf_.size())
      fail(ErrorCode::Io, "error writing '" + path_.string() + "'");
    buf_.clear();
  }

  struct Closer {
    void operator()(std::FILE* f) const { std::fclose(f); }
  };
  std::filesystem::path path_;
  std::unique_ptr<std::FILE, Closer> file_;
  std::string buf_;
};

}  // namespace

std::string format_double(double v) {
  char tmp[32];
  auto r = std::to_chars(tmp, tmp + sizeof(tmp), v, std::chars_format::general, 17);
  return std::string(tmp, r.ptr);
}

void write_widths_csv(const std::filesystem::path& path, const WidthSeries& s) {
  CsvWriter w(path);
  w.text("t,sigma_x,sigma_y,sigma_d,sigma_a").end_row();
  for (std::size_t i = 0; i < s.size(); ++i) {
    w.integer(s.t[i]).sep().num(s.sigma_x[i]).sep().num(s.sigma_y[i]).sep().num(s.sigma_d[i]);
    w.sep().num(s.sigma_a[i]).end_row();
  }
  w.close();
}

void write_snapshot_csv(const std::filesystem::path& path, const WalkState1D& st) {
  CsvWriter w(path);
  w.text("x,p").end_row();
  const SupportBox& b = st.support();
  for (long x = b.x0; x <= b.x1; ++x) {
    const double p = std::norm(st.amplitude(x, 0)) + std::norm(st.amplitude(x, 1));
    if (p != 0.0) {
      w.integer(x).sep().num(p);
      w.end_row();
    }
  }
  w.close();
}

void write_snapshot_csv(const std::filesystem::path& path, const WalkState2D& st) {
  CsvWriter w(path);
  w.text("x,y,p").end_row();
  const SupportBox& b = st.support();
  const auto raw = st.raw();
  const int dim = st.coin_dim();
  for (long x = b.x0; x <= b.x1; ++x)
    for (long y = b.y0; y <= b.y1; ++y) {
      const cplx* a = raw.data() + st.index(x, y);
      double p = 0.0;
      for (int k = 0; k < dim; ++k) p += std::norm(a[k]);
      if (p != 0.0) {
        w.integer(x).sep().integer(y).sep().num(p);
        w.end_row();
      }
    }
  w.close();
}

void write_amplitudes_csv(const std::filesystem::path& path, const WalkState1D& st) {
  CsvWriter w(path);
  w.text("x,s,re,im").end_row();
  const SupportBox& b = st.support();
  for (long x = b.x0; x <= b.x1; ++x)
    for (int s = 0; s < 2; ++s) {
      const cplx a = st.amplitude(x, s);
      if (a == cplx{}) continue;
      w.integer(x).sep().integer(s).sep().num(a.real()).sep().num(a.imag());
      w.end_row();
    }
  w.close();
}

void write_amplitudes_csv(const std::filesystem::path& path, const WalkState2D& st) {
  CsvWriter w(path);
  w.text("x,y,s,re,im").end_row();
  const SupportBox& b = st.support();
  for (long x = b.x0; x <= b.x1; ++x)
    for (long y = b.y0; y <= b.y1; ++y)
      for (int s = 0; s < st.coin_dim(); ++s) {
        const cplx a = st.amplitude(x, y, s);
        if (a == cplx{}) continue;
        w.integer(x).sep().integer(y).sep().integer(s).sep().num(a.real()).sep().num(a.imag());
        w.end_row();
      }
  w.close();
}

void write_periods_json(const std::filesystem::path& path, std::span<const PeriodScore> periods) {
  nlohmann::json j = nlohmann::json::array();
  for (const PeriodScore& p : periods) j.push_back({{"period", p.period}, {"score", p.score}});
  write_text(path, j.dump(2) + "\n");
}

void write_bands_csv(const std::filesystem::path& path, const BandGrid& g) {
  CsvWriter w(path);
  w.text(g.dims == 1 ? "kx,branch,omega" : "kx,ky,branch,omega").end_row();
  const std::size_t ny = g.dims == 1 ? 1 : g.ky.size();
  for (std::size_t ix = 0; ix < g.kx.size(); ++ix)
    for (std::size_t iy = 0; iy < ny; ++iy)
      for (int b = 0; b < g.branches; ++b) {
        w.num(g.kx[ix]).sep();
        if (g.dims == 2) w.num(g.ky[iy]).sep();
        w.integer(b).sep().num(g.at(ix, iy, b));
        w.end_row();
      }
  w.close();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  CsvWriter w(path);
  w.text(text);
  w.close();
}

}  // namespace eqw
