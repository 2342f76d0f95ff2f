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

#ifndef TEGG_ERROR_HPP_
#define TEGG_ERROR_HPP_

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tegg {

enum class Errc {
  kInvalidArgument,
  kFileNotFound,
  kNotWav,
  kChannelCount,
  kUnsupportedEncoding,
  kIoError,
  kEmptySignal,
  kSilentSignal,
  kSignalTooShort,
  kNoVoicedSamples,
  kNoVoicedFrames,
  kDegenerateFrame,
  kUnstableFilter,
  kCannotEstimateF0,
  kSilentEgg,
  kDimensionMismatch,
};

std::string_view errc_name(Errc code);

// All library failures are reported as tegg::Error. The code identifies the
// violated expectation; what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Non-fatal diagnostics (clipping on write, skipped frames) go through a
// process-wide sink. The default sink writes to stderr.
using WarningSink = std::function<void(std::string_view)>;

void set_warning_sink(WarningSink sink);
void warn(std::string_view message);

}  // namespace tegg

#endif  // TEGG_ERROR_HPP_
