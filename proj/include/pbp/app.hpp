// Copyright 2026 The pbpseg Authors
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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pbp/error.hpp"
#include "pbp/patcher.hpp"
#include "pbp/segmenter.hpp"

namespace pbp {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 2,
  kExitParameter = 3,
  kExitConsistency = 4,
};

int exit_code_for(ErrorKind kind);

struct RunConfig {
  std::filesystem::path input;
  std::filesystem::path output_dir = ".";
  int kernel_size = 0;  // 0 skips the blur
  int bin_width = 40;
  PatchSpec patch{4, 4};
  std::size_t threshold = 1;
  RefineMode refine = RefineMode::kNone;
  int refine_k = 3;
  GroupingMode grouping = GroupingMode::kModuloConstant;
  unsigned workers = 0;  // 0 = auto

  /// Range checks for every knob; throws ParameterError.
  void validate() const;
};

struct SegmentRun {
  SegmentationResult result;
  double wall_ms = 0.0;
};

/// Full pipeline without touching the filesystem beyond reading the input.
SegmentRun run_pipeline(const RunConfig& cfg);

/// Writes mask.png, overlay.png and result.json into cfg.output_dir and prints
/// one summary line. On failure nothing is left behind and the stage-tagged
/// error goes to `err`.
int cmd_segment(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dumps the intermediate matrices of one patch.
int cmd_inspect(const RunConfig& cfg, std::size_t grid_row, std::size_t grid_col,
                std::ostream& out, std::ostream& err);

inline constexpr std::size_t kMaxSweepCombinations = 64;

struct SweepRanges {
  std::vector<PatchSpec> patches;
  std::vector<int> bins;
  std::vector<int> kernels;
  std::vector<std::size_t> thresholds;
};

/// Runs every combination into its own subdirectory and writes sweep.csv.
int cmd_sweep(const RunConfig& base, const SweepRanges& ranges, std::ostream& out,
              std::ostream& err);

/// Subdirectory used by cmd_sweep for one combination.
std::string sweep_dir_name(const RunConfig& cfg);

}  // namespace pbp
