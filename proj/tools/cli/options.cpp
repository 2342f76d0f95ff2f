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


#include "options.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "tegg/error.hpp"

namespace tegg::cli {
namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
  throw Error(Errc::kInvalidArgument, "config key '" + key + "': " + why);
}

double number(const json& v, const std::string& key) {
  if (!v.is_number()) bad_key(key, "expected a number");
  return v.get<double>();
}

long long integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) bad_key(key, "expected an integer");
  return v.get<long long>();
}

bool boolean(const json& v, const std::string& key) {
  if (!v.is_boolean()) bad_key(key, "expected true or false");
  return v.get<bool>();
}

std::string channel(const json& v, const std::string& key) {
  if (!v.is_string() || (v != "left" && v != "right")) bad_key(key, "expected \"left\" or \"right\"");
  return v.get<std::string>();
}

}  // namespace

void RunOptions::validate() const {
  transform.validate();
  if (jobs < 1) throw Error(Errc::kInvalidArgument, "--jobs must be at least 1");
  if (pad_ms && !(*pad_ms >= 0.0)) throw Error(Errc::kInvalidArgument, "--pad-ms must be >= 0");
  if (normalize_dbfs && !(*normalize_dbfs <= 0.0)) {
    throw Error(Errc::kInvalidArgument, "--normalize-dbfs must be <= 0");
  }
}

SpeechChannel parse_channel_role(const std::string& speech, const std::string& egg) {
  const auto side = [](const std::string& s) {
    if (s == "left") return SpeechChannel::kLeft;
    if (s == "right") return SpeechChannel::kRight;
    throw Error(Errc::kInvalidArgument, "channel must be left or right, got '" + s + "'");
  };
  if (!speech.empty() && !egg.empty()) {
    if (speech == egg) throw Error(Errc::kInvalidArgument, "speech and EGG channels must differ");
    return side(speech);
  }
  if (!egg.empty()) {
    return side(egg) == SpeechChannel::kLeft ? SpeechChannel::kRight : SpeechChannel::kLeft;
  }
  return speech.empty() ? SpeechChannel::kLeft : side(speech);
}

void apply_config_file(const std::filesystem::path& path, RunOptions& o) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kFileNotFound, "cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::kInvalidArgument, "config file " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw Error(Errc::kInvalidArgument, "config file " + path.string() + " must hold a JSON object");
  }

  std::string speech, egg;
  TransformConfig& t = o.transform;
  for (const auto& [key, v] : doc.items()) {
    if (key == "speech_channel") {
      speech = channel(v, key);
    } else if (key == "egg_channel") {
      egg = channel(v, key);
    } else if (key == "frame_ms") {
      t.frame_ms = number(v, key);
    } else if (key == "overlap") {
      t.overlap = number(v, key);
    } else if (key == "lpc_rate") {
      t.lpc_rate = static_cast<int>(integer(v, key));
    } else if (key == "grid_size") {
      const auto g = integer(v, key);
      if (g <= 0) bad_key(key, "must be positive");
      t.grid_size = static_cast<std::size_t>(g);
    } else if (key == "taps") {
      const auto n = integer(v, key);
      if (n <= 0) bad_key(key, "must be positive");
      t.n_taps = static_cast<std::size_t>(n);
    } else if (key == "egg_highpass") {
      if (v.is_boolean()) {
        t.egg_highpass = v.get<bool>();
        t.egg_f0.reset();
      } else if (v.is_number()) {
        t.egg_highpass = true;
        t.egg_f0 = v.get<double>();
      } else {
        bad_key(key, "expected true, false or an f0 in Hz");
      }
    } else if (key == "pad_ms") {
      o.pad_ms = number(v, key);
    } else if (key == "normalize_dbfs") {
      o.normalize_dbfs = number(v, key);
    } else if (key == "diagnostics") {
      o.diagnostics = boolean(v, key);
    } else if (key == "jobs") {
      o.jobs = static_cast<int>(integer(v, key));
    } else if (key == "fail_fast") {
      o.fail_fast = boolean(v, key);
    } else {
      bad_key(key, "unknown key");
    }
  }
  if (!speech.empty() || !egg.empty()) o.speech_channel = parse_channel_role(speech, egg);
}

std::optional<std::filesystem::path> resolve_config_path(
    const std::optional<std::filesystem::path>& flag) {
  if (flag) return flag;
  const char* env = std::getenv(kConfigEnvVar);
  if (env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace tegg::cli
