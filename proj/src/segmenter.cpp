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

#include "pbp/segmenter.hpp"

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include <algorithm>
#include <deque>
#include <string>
#include <thread>

#include "pbp/error.hpp"
#include "pbp/reduction.hpp"

namespace pbp {

std::string_view to_string(GroupingMode mode) {
  switch (mode) {
    case GroupingMode::kStrictPolynomial:
      return "strict";
    case GroupingMode::kModuloConstant:
      return "modconst";
    case GroupingMode::kConnectivity:
      return "connect";
  }
  return "?";
}

std::string_view to_string(RefineMode mode) {
  switch (mode) {
    case RefineMode::kNone:
      return "none";
    case RefineMode::kFavorEdge:
      return "favor-edge";
    case RefineMode::kFavorBlob:
      return "favor-blob";
  }
  return "?";
}

GroupingMode parse_grouping_mode(std::string_view text) {
  for (auto mode : {GroupingMode::kStrictPolynomial, GroupingMode::kModuloConstant,
                    GroupingMode::kConnectivity}) {
    if (text == to_string(mode)) return mode;
  }
  throw ParameterError("unknown grouping mode '" + std::string(text) +
                       "' (expected strict, modconst or connect)");
}

RefineMode parse_refine_mode(std::string_view text) {
  for (auto mode : {RefineMode::kNone, RefineMode::kFavorEdge, RefineMode::kFavorBlob}) {
    if (text == to_string(mode)) return mode;
  }
  throw ParameterError("unknown refine mode '" + std::string(text) +
                       "' (expected none, favor-edge or favor-blob)");
}

PatchRecord classify_patch(const CostMatrix& c, std::size_t threshold) {
  if (threshold < 1) throw ParameterError("threshold p must be >= 1");
  PatchRecord record;
  record.polynomial = reduce(c);
  record.degree_normal = degree(record.polynomial);
  record.degree_transposed = degree(reduce(transpose(c)));
  record.effective_degree = std::max(record.degree_normal, record.degree_transposed);
  record.patch_class =
      record.effective_degree >= threshold ? PatchClass::kEdge : PatchClass::kBlob;
  return record;
}

BlobGroups group_blobs(const std::vector<PatchRecord>& records,
                       std::size_t grid_rows, std::size_t grid_cols,
                       GroupingMode mode) {
  if (records.size() != grid_rows * grid_cols) {
    throw ConsistencyError("record count does not match the grid");
  }
  std::vector<EquivalenceKey> keys(records.size());
  if (mode != GroupingMode::kConnectivity) {
    const bool with_constant = mode == GroupingMode::kStrictPolynomial;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (records[i].patch_class == PatchClass::kBlob) {
        keys[i] = equivalence_key(records[i].polynomial, with_constant);
      }
    }
  }

  BlobGroups groups;
  groups.group_of.assign(records.size(), std::nullopt);
  std::deque<std::size_t> frontier;
  for (std::size_t seed = 0; seed < records.size(); ++seed) {
    if (records[seed].patch_class != PatchClass::kBlob || groups.group_of[seed]) {
      continue;
    }
    const std::size_t id = groups.members.size();
    auto& members = groups.members.emplace_back();
    groups.group_of[seed] = id;
    frontier.push_back(seed);
    while (!frontier.empty()) {
      const std::size_t at = frontier.front();
      frontier.pop_front();
      members.push_back(at);
      const std::size_t r = at / grid_cols;
      const std::size_t c = at % grid_cols;
      const auto visit = [&](std::size_t n) {
        if (records[n].patch_class == PatchClass::kBlob && !groups.group_of[n] &&
            keys[n] == keys[seed]) {
          groups.group_of[n] = id;
          frontier.push_back(n);
        }
      };
      if (r > 0) visit(at - grid_cols);
      if (c > 0) visit(at - 1);
      if (c + 1 < grid_cols) visit(at + 1);
      if (r + 1 < grid_rows) visit(at + grid_cols);
    }
    std::sort(members.begin(), members.end());
  }
  return groups;
}

std::size_t SegmentationResult::edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const PatchRecord& r) {
        return r.patch_class == PatchClass::kEdge;
      }));
}

double SegmentationResult::edge_fraction() const {
  return records.empty() ? 0.0
                         : static_cast<double>(edge_count()) /
                               static_cast<double>(records.size());
}

MaskImage SegmentationResult::mask() const {
  MaskImage m{grid.grid_rows, grid.grid_cols, {}, groups.group_of};
  m.cells.reserve(records.size());
  for (const PatchRecord& r : records) m.cells.push_back(r.patch_class);
  return m;
}

SegmentationResult segment(const QuantizedImage& img, const PatchGrid& grid,
                           const SegmentOptions& options) {
  if (options.threshold < 1) throw ParameterError("threshold p must be >= 1");
  if (grid.image_width != img.width() || grid.image_height != img.height() ||
      grid.rects.size() != grid.grid_rows * grid.grid_cols) {
    throw ConsistencyError("patch grid was planned for a different image");
  }

  SegmentationResult result;
  result.grid = grid;
  result.params.kernel_size = options.kernel_size;
  result.params.bin_width = img.bin_width();
  result.params.patch = options.patch;
  result.params.threshold = options.threshold;
  result.params.grouping = options.grouping;
  result.records.resize(grid.size());

  // Each index writes only its own slot, so scheduling cannot change output.
  const unsigned workers =
      options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                           : options.workers;
  tbb::task_arena arena(static_cast<int>(workers));
  arena.execute([&] {
    tbb::parallel_for(tbb::blocked_range<std::size_t>(0, grid.size(), 64),
                      [&](const tbb::blocked_range<std::size_t>& range) {
                        for (std::size_t i = range.begin(); i != range.end(); ++i) {
                          PatchRecord rec = classify_patch(
                              extract(img, grid.rects[i]), options.threshold);
                          rec.grid_row = i / grid.grid_cols;
                          rec.grid_col = i % grid.grid_cols;
                          result.records[i] = std::move(rec);
                        }
                      });
  });

  result.groups = group_blobs(result.records, grid.grid_rows, grid.grid_cols,
                              options.grouping);
  return result;
}

SegmentationResult refine(const SegmentationResult& result, RefineMode mode, int k) {
  if (k < 1 || k > 4) throw ParameterError("refine k must be in [1, 4]");
  SegmentationResult out = result;
  out.params.refine = mode;
  out.params.refine_k = k;
  if (mode == RefineMode::kNone) return out;

  const PatchClass from =
      mode == RefineMode::kFavorEdge ? PatchClass::kBlob : PatchClass::kEdge;
  const PatchClass to =
      mode == RefineMode::kFavorEdge ? PatchClass::kEdge : PatchClass::kBlob;
  const std::size_t rows = result.grid.grid_rows;
  const std::size_t cols = result.grid.grid_cols;
  const auto& before = result.records;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i].patch_class != from) continue;
    const std::size_t r = i / cols;
    const std::size_t c = i % cols;
    int votes = 0;
    if (r > 0 && before[i - cols].patch_class == to) ++votes;
    if (c > 0 && before[i - 1].patch_class == to) ++votes;
    if (c + 1 < cols && before[i + 1].patch_class == to) ++votes;
    if (r + 1 < rows && before[i + cols].patch_class == to) ++votes;
    if (votes >= k) {
      out.records[i].patch_class = to;
      out.records[i].refined = !out.records[i].refined;
    }
  }
  out.groups = group_blobs(out.records, rows, cols, out.params.grouping);
  return out;
}

nlohmann::ordered_json to_json(const SegmentationResult& result) {
  using nlohmann::ordered_json;
  const auto& p = result.params;
  ordered_json out;
  out["parameters"] = {
      {"gaussian_kernel", p.kernel_size},
      {"bin_width", p.bin_width},
      {"patch", to_string(p.patch)},
      {"threshold", p.threshold},
      {"grouping", to_string(p.grouping)},
      {"refine", to_string(p.refine)},
      {"refine_k", p.refine_k},
  };
  out["grid"] = {
      {"image_width", result.grid.image_width},
      {"image_height", result.grid.image_height},
      {"rows", result.grid.grid_rows},
      {"cols", result.grid.grid_cols},
  };
  out["summary"] = {
      {"patches", result.records.size()},
      {"edges", result.edge_count()},
      {"groups", result.groups.members.size()},
  };

  auto patches = ordered_json::array();
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const PatchRecord& rec = result.records[i];
    const PatchRect& rect = result.grid.rects[i];
    ordered_json entry = {
        {"row", rec.grid_row},
        {"col", rec.grid_col},
        {"rect", {rect.x, rect.y, rect.width, rect.height}},
        {"degree_normal", rec.degree_normal},
        {"degree_transposed", rec.degree_transposed},
        {"effective_degree", rec.effective_degree},
        {"class", to_string(rec.patch_class)},
        {"refined", rec.refined},
        {"group", nullptr},
        {"polynomial", to_text(rec.polynomial)},
    };
    if (const auto& g = result.groups.group_of[i]) entry["group"] = *g;
    patches.push_back(std::move(entry));
  }
  out["patches"] = std::move(patches);

  auto groups = ordered_json::array();
  for (std::size_t g = 0; g < result.groups.members.size(); ++g) {
    const auto& members = result.groups.members[g];
    const std::size_t first = members.front();
    groups.push_back({
        {"id", g},
        {"size", members.size()},
        {"first", {first / result.grid.grid_cols, first % result.grid.grid_cols}},
    });
  }
  out["groups"] = std::move(groups);
  return out;
}

}  // namespace pbp
