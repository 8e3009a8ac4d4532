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

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pbp/image.hpp"
#include "pbp/mask.hpp"
#include "pbp/patcher.hpp"
#include "pbp/polynomial.hpp"

namespace pbp {

enum class GroupingMode {
  kStrictPolynomial,  // equal polynomials, constant included
  kModuloConstant,    // equal polynomials ignoring the constant term
  kConnectivity,      // any 4-connected blob patches
};

enum class RefineMode { kNone, kFavorEdge, kFavorBlob };

std::string_view to_string(GroupingMode mode);
std::string_view to_string(RefineMode mode);
/// Accepts the CLI spellings: strict|modconst|connect, none|favor-edge|favor-blob.
GroupingMode parse_grouping_mode(std::string_view text);
RefineMode parse_refine_mode(std::string_view text);

struct PatchRecord {
  std::size_t grid_row = 0;
  std::size_t grid_col = 0;
  std::size_t degree_normal = 0;
  std::size_t degree_transposed = 0;
  std::size_t effective_degree = 0;
  PatchClass patch_class = PatchClass::kBlob;
  // Set when refine() overrode the threshold rule for this patch.
  bool refined = false;
  // Reduced polynomial of the patch as oriented in the image.
  PseudoBooleanPolynomial polynomial{1};
};

/// Edge iff max(degree, transposed degree) >= threshold.
/// Throws ParameterError for threshold < 1.
PatchRecord classify_patch(const CostMatrix& c, std::size_t threshold);

struct BlobGroups {
  // One entry per patch in raster order; empty for edge patches.
  std::vector<std::optional<std::size_t>> group_of;
  // members[g] lists patch indices of group g in raster order.
  std::vector<std::vector<std::size_t>> members;
};

/// Partitions blob patches into 4-connected components of equal key (or of
/// blob-ness alone for kConnectivity). Ids follow the raster position of each
/// group's first patch.
BlobGroups group_blobs(const std::vector<PatchRecord>& records,
                       std::size_t grid_rows, std::size_t grid_cols,
                       GroupingMode mode);

struct SegmentParameters {
  int kernel_size = 0;  // echo only; 0 = no blur
  int bin_width = 1;    // echo only
  PatchSpec patch;
  std::size_t threshold = 1;
  GroupingMode grouping = GroupingMode::kModuloConstant;
  RefineMode refine = RefineMode::kNone;
  int refine_k = 1;
};

struct SegmentationResult {
  PatchGrid grid;
  std::vector<PatchRecord> records;  // raster order
  BlobGroups groups;
  SegmentParameters params;

  std::size_t edge_count() const;
  double edge_fraction() const;
  MaskImage mask() const;
};

struct SegmentOptions {
  std::size_t threshold = 1;
  GroupingMode grouping = GroupingMode::kModuloConstant;
  // 0 picks the hardware concurrency. Output never depends on this.
  unsigned workers = 0;
  // Echoed into the result parameters.
  int kernel_size = 0;
  PatchSpec patch;
};

/// Classifies every rect of the grid, then groups the blobs.
SegmentationResult segment(const QuantizedImage& img, const PatchGrid& grid,
                           const SegmentOptions& options);

/// One synchronous k-of-4 neighbour vote; groups are recomputed afterwards.
/// Throws ParameterError unless 1 <= k <= 4.
SegmentationResult refine(const SegmentationResult& result, RefineMode mode, int k);

/// Stable field order: parameters, grid, patches, groups.
nlohmann::ordered_json to_json(const SegmentationResult& result);

}  // namespace pbp
