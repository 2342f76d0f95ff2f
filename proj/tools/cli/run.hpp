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


#ifndef TEGG_CLI_RUN_HPP_
#define TEGG_CLI_RUN_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "options.hpp"
#include "tegg/transform.hpp"

namespace tegg::cli {

inline constexpr int kDiagnosticsVersion = 1;
inline constexpr const char* kDiagnosticsSchema = "tegg-diagnostics";

nlohmann::ordered_json diagnostics_json(const Diagnostics& d, const RunOptions& options,
                                const std::filesystem::path& input,
                                const std::filesystem::path& output, double duration_s);

// Sidecars next to `stem`: <stem>.diagnostics.json, <stem>.mean_magnitude.csv
// and <stem>.ratio.csv. Each is written to a temporary sibling and renamed.
void write_diagnostics(const std::filesystem::path& stem, const nlohmann::ordered_json& summary,
                       const Diagnostics& d, const FrameSpec& output_grid);

// Text written to a temporary sibling and renamed into place.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

StereoRecording load_recording(const std::filesystem::path& path, SpeechChannel speech,
                               WavEncoding* encoding = nullptr);

struct FileOutcome {
  std::filesystem::path input;
  std::filesystem::path output;
  bool ok = false;
  bool skipped = false;
  std::string error;
  double duration_s = 0.0;
  double realtime_factor = 0.0;
};

// Transforms one take and writes z(t) (plus sidecars when requested). Never
// throws; failures are reported in the outcome.
FileOutcome process_file(const std::filesystem::path& input,
                         const std::filesystem::path& output, const RunOptions& options);

// Runs the pipeline without writing audio and returns the diagnostics document.
nlohmann::ordered_json inspect_file(const std::filesystem::path& input, const RunOptions& options);

// Every *.wav below dir, sorted by path.
std::vector<std::filesystem::path> find_inputs(const std::filesystem::path& dir);

struct BatchSummary {
  std::vector<FileOutcome> files;  // in find_inputs order
  std::size_t failed() const;
  std::size_t skipped() const;
};

// Mirrors in_dir's *.wav tree into out_dir using options.jobs workers. With
// fail_fast, files not yet started after the first failure are skipped.
BatchSummary run_batch(const std::filesystem::path& in_dir,
                       const std::filesystem::path& out_dir, const RunOptions& options);

}  // namespace tegg::cli

#endif  // TEGG_CLI_RUN_HPP_
