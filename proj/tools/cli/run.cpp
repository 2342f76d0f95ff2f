// Copyright 2026 The tegg Authors
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


#include "run.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <system_error>
#include <thread>

#include "tegg/error.hpp"
#include "tegg/signal.hpp"
#include "tegg/wav.hpp"

namespace tegg::cli {
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string sidecar(const fs::path& stem, const char* suffix) {
  return stem.string() + suffix;
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

fs::path stem_of(const fs::path& p) { return p.parent_path() / p.stem(); }

}  // namespace

json diagnostics_json(const Diagnostics& d, const RunOptions& o, const fs::path& input,
                      const fs::path& output, double duration_s) {
  const TransformConfig& t = o.transform;
  json egg_hp = t.egg_highpass ? (t.egg_f0 ? json(*t.egg_f0) : json("auto")) : json(false);
  return json{
      {"schema", kDiagnosticsSchema},
      {"version", kDiagnosticsVersion},
      {"input", input.string()},
      {"output", output.empty() ? json(nullptr) : json(output.string())},
      {"duration_s", duration_s},
      {"config",
       {{"frame_ms", t.frame_ms},
        {"overlap", t.overlap},
        {"lpc_rate", t.lpc_rate},
        {"grid_size", t.grid_size},
        {"taps", t.n_taps},
        {"egg_highpass", egg_hp},
        {"speech_channel", o.speech_channel == SpeechChannel::kLeft ? "left" : "right"}}},
      {"frames_used", d.frames_used},
      {"frames_skipped", d.frames_skipped},
      {"guard_frames", d.guard_frames},
      {"voiced_samples", d.voiced_samples},
      {"vad",
       {{"threshold_db", d.vad_mask.threshold_db},
        {"voiced_frames", d.vad_mask.voiced_frames()},
        {"total_frames", d.vad_mask.frame_flags.size()}}},
      {"f0_estimate", optional_number(d.f0_estimate)},
      {"highpass_cutoff_hz", optional_number(d.highpass_cutoff_hz)},
      {"runtime_ms", d.runtime_ms},
      {"realtime_factor", d.realtime_factor},
  };
}

void write_text_atomic(const fs::path& path, const std::string& text) {
  thread_local std::mt19937_64 rng(std::random_device{}());
  const fs::path tmp = path.string() + ".tmp" + std::to_string(rng() % 1000000);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::kIoError, "cannot write " + path.string());
    out << text;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(Errc::kIoError, "write failed for " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(Errc::kIoError, "cannot move " + tmp.string() + " into place");
  }
}

void write_diagnostics(const fs::path& stem, const json& summary, const Diagnostics& d,
                       const FrameSpec& grid) {
  write_text_atomic(sidecar(stem, ".diagnostics.json"), summary.dump(2) + "\n");

  std::string mag = "frequency_hz,magnitude\n";
  const auto& m = d.mean_magnitude;
  for (std::size_t k = 0; k < m.size(); ++k) {
    mag += format_double(m.frequency(k)) + "," + format_double(m.magnitudes[k]) + "\n";
  }
  write_text_atomic(sidecar(stem, ".mean_magnitude.csv"), mag);

  std::string ratio = "frame,time_s,ratio,guarded\n";
  const double hop_s = static_cast<double>(grid.hop()) / grid.sample_rate;
  for (std::size_t n = 0; n < d.ratio.values.size(); ++n) {
    ratio += std::to_string(n) + "," + format_double(n * hop_s) + "," +
             format_double(d.ratio.values[n]) + "," + (d.ratio.guard_mask[n] ? "1" : "0") + "\n";
  }
  write_text_atomic(sidecar(stem, ".ratio.csv"), ratio);
}

StereoRecording load_recording(const fs::path& path, SpeechChannel speech,
                               WavEncoding* encoding) {
  WavData w = read_wav(path);
  if (w.channels.size() != 2) {
    throw Error(Errc::kChannelCount, path.string() + ": expected 2 channels, found " +
                                         std::to_string(w.channels.size()));
  }
  if (encoding) *encoding = w.encoding;
  const std::size_t s = speech == SpeechChannel::kLeft ? 0 : 1;
  return StereoRecording(MonoSignal(std::move(w.channels[s]), w.sample_rate),
                         MonoSignal(std::move(w.channels[1 - s]), w.sample_rate));
}

FileOutcome process_file(const fs::path& input, const fs::path& output, const RunOptions& o) {
  FileOutcome r;
  r.input = input;
  r.output = output;
  try {
    WavEncoding enc = WavEncoding::kPcm24;
    const StereoRecording rec = load_recording(input, o.speech_channel, &enc);
    r.duration_s = rec.speech.duration_seconds();
    TransformResult t = transform(rec, o.transform);

    MonoSignal z = std::move(t.output);
    if (o.pad_ms) z = pad_silence(z, *o.pad_ms, *o.pad_ms);
    if (o.normalize_dbfs) {
      z = peak_normalize(z, *o.normalize_dbfs);
    } else if (z.peak() > 1.0) {
      warn("output peak " + format_double(z.peak()) + " exceeds full scale; normalized to -1 dBFS");
      z = peak_normalize(z, -1.0);
    }

    if (!output.parent_path().empty()) fs::create_directories(output.parent_path());
    write_wav(z, output, enc);
    if (o.diagnostics) {
      const auto summary = diagnostics_json(t.diagnostics, o, input, output, r.duration_s);
      const FrameSpec grid(o.transform.frame_ms, o.transform.overlap, rec.speech.sample_rate());
      write_diagnostics(stem_of(output), summary, t.diagnostics, grid);
    }
    r.realtime_factor = t.diagnostics.realtime_factor;
    r.ok = true;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

json inspect_file(const fs::path& input, const RunOptions& o) {
  const StereoRecording rec = load_recording(input, o.speech_channel);
  const TransformResult t = transform(rec, o.transform);
  auto doc = diagnostics_json(t.diagnostics, o, input, {}, rec.speech.duration_seconds());
  if (o.diagnostics) {
    const FrameSpec grid(o.transform.frame_ms, o.transform.overlap, rec.speech.sample_rate());
    write_diagnostics(stem_of(input), doc, t.diagnostics, grid);
  }
  return doc;
}

std::vector<fs::path> find_inputs(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(Errc::kFileNotFound, "not a directory: " + dir.string());
  }
  std::vector<fs::path> out;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".wav") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t BatchSummary::failed() const {
  return static_cast<std::size_t>(
      std::count_if(files.begin(), files.end(), [](const auto& f) { return !f.ok && !f.skipped; }));
}

std::size_t BatchSummary::skipped() const {
  return static_cast<std::size_t>(
      std::count_if(files.begin(), files.end(), [](const auto& f) { return f.skipped; }));
}

BatchSummary run_batch(const fs::path& in_dir, const fs::path& out_dir, const RunOptions& o) {
  const auto inputs = find_inputs(in_dir);
  BatchSummary summary;
  summary.files.resize(inputs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= inputs.size()) return;
      const fs::path out = out_dir / fs::relative(inputs[i], in_dir);
      if (stop.load()) {
        summary.files[i] = {inputs[i], out, false, true, "skipped after an earlier failure"};
        continue;
      }
      summary.files[i] = process_file(inputs[i], out, o);
      if (!summary.files[i].ok && o.fail_fast) stop.store(true);
    }
  };

  const auto n = static_cast<std::size_t>(std::max(1, o.jobs));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(n, inputs.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return summary;
}

}  // namespace tegg::cli
