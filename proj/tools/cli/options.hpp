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


#ifndef TEGG_CLI_OPTIONS_HPP_
#define TEGG_CLI_OPTIONS_HPP_

#include <filesystem>
#include <optional>

#include "tegg/transform.hpp"
#include "tegg/wav.hpp"

namespace tegg::cli {

inline constexpr const char* kConfigEnvVar = "TEGG_CONFIG";

struct RunOptions {
  TransformConfig transform;
  SpeechChannel speech_channel = SpeechChannel::kLeft;
  std::optional<double> pad_ms;
  std::optional<double> normalize_dbfs;
  bool diagnostics = false;
  int jobs = 1;
  bool fail_fast = false;

  void validate() const;
};

// Overlays the keys present in a JSON config object onto `options`. Unknown
// keys and wrongly typed values throw Errc::kInvalidArgument naming the key.
void apply_config_file(const std::filesystem::path& path, RunOptions& options);

// --config wins; otherwise $TEGG_CONFIG when set and non-empty.
std::optional<std::filesystem::path> resolve_config_path(
    const std::optional<std::filesystem::path>& flag);

SpeechChannel parse_channel_role(const std::string& speech, const std::string& egg);

}  // namespace tegg::cli

#endif  // TEGG_CLI_OPTIONS_HPP_
