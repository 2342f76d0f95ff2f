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

#include "tegg/error.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace tegg {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "invalid_argument";
    case Errc::kFileNotFound: return "file_not_found";
    case Errc::kNotWav: return "not_wav";
    case Errc::kChannelCount: return "channel_count";
    case Errc::kUnsupportedEncoding: return "unsupported_encoding";
    case Errc::kIoError: return "io_error";
    case Errc::kEmptySignal: return "empty_signal";
    case Errc::kSilentSignal: return "silent_signal";
    case Errc::kSignalTooShort: return "signal_too_short";
    case Errc::kNoVoicedSamples: return "no_voiced_samples";
    case Errc::kNoVoicedFrames: return "no_voiced_frames";
    case Errc::kDegenerateFrame: return "degenerate_frame";
    case Errc::kUnstableFilter: return "unstable_filter";
    case Errc::kCannotEstimateF0: return "cannot_estimate_f0";
    case Errc::kSilentEgg: return "silent_egg";
    case Errc::kDimensionMismatch: return "dimension_mismatch";
  }
  return "unknown";
}

namespace {

std::mutex& sink_mutex() {
  static std::mutex m;
  return m;
}

WarningSink& sink_slot() {
  static WarningSink sink;
  return sink;
}

}  // namespace

void set_warning_sink(WarningSink sink) {
  std::lock_guard<std::mutex> lock(sink_mutex());
  sink_slot() = std::move(sink);
}

void warn(std::string_view message) {
  std::lock_guard<std::mutex> lock(sink_mutex());
  if (sink_slot()) {
    sink_slot()(message);
  } else {
    std::cerr << "tegg: warning: " << message << '\n';
  }
}

}  // namespace tegg
