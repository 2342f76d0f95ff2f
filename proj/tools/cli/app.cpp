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


#include "app.hpp"

#include <filesystem>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "options.hpp"
#include "run.hpp"
#include "tegg/error.hpp"
#include "tegg/fixtures.hpp"
#include "tegg/wav.hpp"

namespace tegg::cli {
namespace fs = std::filesystem;

namespace {

const CLI::Validator kPositive(
    [](std::string& v) -> std::string {
      try {
        if (std::stod(v) > 0.0) return {};
      } catch (const std::logic_error&) {
      }
      return "must be a number greater than 0, got '" + v + "'";
    },
    "> 0");

const CLI::Validator kNonNegative(
    [](std::string& v) -> std::string {
      try {
        if (std::stod(v) >= 0.0) return {};
      } catch (const std::logic_error&) {
      }
      return "must be a number >= 0, got '" + v + "'";
    },
    ">= 0");

// Raw flag values; only those actually given override the config file.
struct TransformFlags {
  std::string speech_channel, egg_channel;
  double frame_ms = 0, overlap = 0, pad_ms = 0, normalize_dbfs = 0;
  int lpc_rate = 0, jobs = 0;
  std::size_t grid_size = 0, taps = 0;
  std::string egg_highpass;
  std::string config;
  CLI::Option* o_speech = nullptr;
  CLI::Option* o_egg = nullptr;
  CLI::Option* o_frame = nullptr;
  CLI::Option* o_overlap = nullptr;
  CLI::Option* o_lpc = nullptr;
  CLI::Option* o_grid = nullptr;
  CLI::Option* o_taps = nullptr;
  CLI::Option* o_highpass = nullptr;
  CLI::Option* o_pad = nullptr;
  CLI::Option* o_norm = nullptr;
  CLI::Option* o_diag = nullptr;
  CLI::Option* o_jobs = nullptr;
  CLI::Option* o_failfast = nullptr;
  CLI::Option* o_config = nullptr;
};

void add_transform_flags(CLI::App& cmd, TransformFlags& f, bool batch) {
  f.o_speech = cmd.add_option("--speech-channel", f.speech_channel, "left or right (default left)")
                   ->check(CLI::IsMember({"left", "right"}));
  f.o_egg = cmd.add_option("--egg-channel", f.egg_channel, "left or right (default right)")
                ->check(CLI::IsMember({"left", "right"}));
  f.o_frame = cmd.add_option("--frame-ms", f.frame_ms, "analysis window in ms (20)")
                  ->check(kPositive);
  f.o_overlap = cmd.add_option("--overlap", f.overlap, "frame overlap fraction (0.5)")
                    ->check(CLI::Range(0.0, 1.0));
  f.o_lpc = cmd.add_option("--lpc-rate", f.lpc_rate, "vocal-tract analysis rate in Hz (16000)")
                ->check(kPositive);
  f.o_grid = cmd.add_option("--grid-size", f.grid_size, "frequency grid points (4096)")
                 ->check(kPositive);
  f.o_taps = cmd.add_option("--taps", f.taps, "impulse response taps at the LPC rate (2048)")
                 ->check(kPositive);
  f.o_highpass = cmd.add_flag("--egg-highpass{auto}", f.egg_highpass,
                              "high-pass the EGG 20 Hz below f0; give =F0 or let it be estimated");
  f.o_pad = cmd.add_option("--pad-ms", f.pad_ms, "pad the output with this much silence at each end")
                ->check(kNonNegative);
  f.o_norm = cmd.add_option("--normalize-dbfs", f.normalize_dbfs, "peak-normalize the output to this level");
  f.o_diag = cmd.add_flag("--diagnostics", "write JSON and CSV diagnostics sidecars");
  if (batch) {
    f.o_jobs = cmd.add_option("--jobs,-j", f.jobs, "parallel workers (1)")->check(kPositive);
    f.o_failfast = cmd.add_flag("--fail-fast", "stop starting new files after the first failure");
  }
  f.o_config = cmd.add_option("--config", f.config,
                              std::string("JSON config file (default $") + kConfigEnvVar + ")");
}

RunOptions resolve_options(const TransformFlags& f) {
  RunOptions o;
  std::optional<fs::path> flag;
  if (f.o_config->count() > 0) flag = fs::path(f.config);
  if (const auto cfg = resolve_config_path(flag)) apply_config_file(*cfg, o);

  TransformConfig& t = o.transform;
  if (f.o_speech->count() > 0 || f.o_egg->count() > 0) {
    o.speech_channel = parse_channel_role(f.speech_channel, f.egg_channel);
  }
  if (f.o_frame->count() > 0) t.frame_ms = f.frame_ms;
  if (f.o_overlap->count() > 0) t.overlap = f.overlap;
  if (f.o_lpc->count() > 0) t.lpc_rate = f.lpc_rate;
  if (f.o_grid->count() > 0) t.grid_size = f.grid_size;
  if (f.o_taps->count() > 0) t.n_taps = f.taps;
  if (f.o_highpass->count() > 0) {
    t.egg_highpass = true;
    t.egg_f0.reset();
    if (f.egg_highpass != "auto") {
      try {
        std::size_t used = 0;
        t.egg_f0 = std::stod(f.egg_highpass, &used);
        if (used != f.egg_highpass.size()) throw std::invalid_argument("trailing text");
      } catch (const std::logic_error&) {
        throw Error(Errc::kInvalidArgument, "--egg-highpass expects an f0 in Hz, got '" +
                                                f.egg_highpass + "'");
      }
    }
  }
  if (f.o_pad->count() > 0) o.pad_ms = f.pad_ms;
  if (f.o_norm->count() > 0) o.normalize_dbfs = f.normalize_dbfs;
  if (f.o_diag->count() > 0) o.diagnostics = true;
  if (f.o_jobs != nullptr && f.o_jobs->count() > 0) o.jobs = f.jobs;
  if (f.o_failfast != nullptr && f.o_failfast->count() > 0) o.fail_fast = true;
  o.validate();
  return o;
}

std::string rtf(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << v << "x";
  return s.str();
}

std::vector<Resonance> parse_resonances(const std::string& text) {
  std::vector<Resonance> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(item);
      out.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw Error(Errc::kInvalidArgument,
                  "resonances are CENTER:BANDWIDTH pairs separated by commas, got '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"tegg: turn speech + EGG takes into tEGG signals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tegg 0.1.0");

  std::mutex err_mutex;
  set_warning_sink([&](std::string_view m) {
    std::lock_guard lock(err_mutex);
    err << "warning: " << m << "\n";
  });
  struct SinkReset {
    ~SinkReset() { set_warning_sink(nullptr); }
  } sink_reset;

  // transform
  auto* tr = app.add_subcommand("transform", "transform one two-channel WAV");
  std::string tr_in, tr_out;
  TransformFlags tr_flags;
  tr->add_option("input", tr_in, "speech + EGG WAV")->required();
  tr->add_option("-o,--output", tr_out, "output WAV")->required();
  add_transform_flags(*tr, tr_flags, false);

  // batch
  auto* ba = app.add_subcommand("batch", "transform every WAV below a directory");
  std::string ba_in, ba_out;
  TransformFlags ba_flags;
  ba->add_option("input_dir", ba_in, "directory of two-channel WAVs")->required();
  ba->add_option("-o,--output-dir", ba_out, "mirror directory for outputs")->required();
  add_transform_flags(*ba, ba_flags, true);

  // inspect
  auto* in = app.add_subcommand("inspect", "print diagnostics as JSON without writing audio");
  std::string in_path;
  TransformFlags in_flags;
  in->add_option("input", in_path, "speech + EGG WAV")->required();
  add_transform_flags(*in, in_flags, false);

  // synth
  auto* sy = app.add_subcommand("synth", "write a synthetic speech + EGG take");
  std::string sy_out, sy_formants, sy_alternate, sy_shape = "rosenberg";
  FixtureSpec fx;
  double sy_segment_ms = 150.0;
  bool sy_no_lip = false;
  sy->add_option("-o,--output", sy_out, "output WAV")->required();
  sy->add_option("--f0", fx.f0, "fundamental in Hz")->check(kPositive)->capture_default_str();
  sy->add_option("--duration", fx.duration_s, "seconds")->check(kPositive)->capture_default_str();
  sy->add_option("--rate", fx.sample_rate, "sample rate in Hz")->check(kPositive)->capture_default_str();
  sy->add_option("--formants", sy_formants, "CENTER:BW,... (default neutral vowel)");
  sy->add_option("--alternate", sy_alternate, "second formant set to alternate with");
  sy->add_option("--segment-ms", sy_segment_ms, "alternation period")->check(kPositive)->capture_default_str();
  sy->add_option("--shape", sy_shape, "glottal pulse")->check(CLI::IsMember({"rosenberg", "impulse"}))->capture_default_str();
  sy->add_flag("--no-lip", sy_no_lip, "skip lip radiation");
  sy->add_option("--am-rate", fx.am_rate_hz, "syllable-rate AM in Hz")->check(kNonNegative);
  sy->add_option("--am-depth", fx.am_depth, "AM depth in [0, 1]")->check(CLI::Range(0.0, 1.0));
  sy->add_option("--lead-ms", fx.lead_silence_ms, "leading silence")->check(kNonNegative);
  sy->add_option("--trail-ms", fx.trail_silence_ms, "trailing silence")->check(kNonNegative);
  sy->add_option("--noise-dbfs", fx.noise_dbfs, "speech noise floor in dBFS");
  sy->add_option("--seed", fx.seed, "noise seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tr) {
      const RunOptions o = resolve_options(tr_flags);
      const auto r = process_file(tr_in, tr_out, o);
      if (!r.ok) {
        err << "error: " << tr_in << ": " << r.error << "\n";
        return kExitFailure;
      }
      out << "wrote " << tr_out << " (" << r.duration_s << " s, realtime factor "
          << rtf(r.realtime_factor) << ")\n";
      return kExitOk;
    }
    if (*ba) {
      const RunOptions o = resolve_options(ba_flags);
      const auto s = run_batch(ba_in, ba_out, o);
      if (s.files.empty()) {
        out << "0 files found under " << ba_in << "\n";
        return kExitOk;
      }
      for (const auto& f : s.files) {
        const auto rel = fs::relative(f.input, ba_in).string();
        if (f.ok) {
          out << "ok    " << rel << "  realtime factor " << rtf(f.realtime_factor) << "\n";
        } else if (f.skipped) {
          out << "skip  " << rel << "\n";
        } else {
          out << "FAIL  " << rel << ": " << f.error << "\n";
        }
      }
      out << "batch: " << s.files.size() << " files, " << s.files.size() - s.failed() - s.skipped()
          << " ok, " << s.failed() << " failed, " << s.skipped() << " skipped\n";
      return s.failed() + s.skipped() == 0 ? kExitOk : kExitFailure;
    }
    if (*in) {
      const RunOptions o = resolve_options(in_flags);
      out << inspect_file(in_path, o).dump(2) << "\n";
      return kExitOk;
    }
    if (*sy) {
      fx.shape = sy_shape == "impulse" ? PulseShape::kImpulseTrain : PulseShape::kRosenberg;
      fx.lip_radiation = !sy_no_lip;
      if (!sy_formants.empty() || !sy_alternate.empty()) {
        const auto first = sy_formants.empty() ? neutral_vowel() : parse_resonances(sy_formants);
        fx.track = sy_alternate.empty()
                       ? FormantTrack::stationary(first, fx.duration_s * 1000.0)
                       : FormantTrack::alternating(first, parse_resonances(sy_alternate),
                                                   sy_segment_ms, fx.duration_s * 1000.0);
      }
      const auto rec = make_fixture(fx);
      if (!fs::path(sy_out).parent_path().empty()) fs::create_directories(fs::path(sy_out).parent_path());
      write_stereo_wav(rec.speech, rec.egg, sy_out);
      out << "wrote " << sy_out << " (" << rec.speech.duration_seconds() << " s at "
          << fx.sample_rate << " Hz; speech left, EGG right)\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::kInvalidArgument ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace tegg::cli
