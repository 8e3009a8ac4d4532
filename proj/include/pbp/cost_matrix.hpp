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
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pbp {

/// Integer cost of one cell. Cells are non-negative and bounded so that the
/// sum over a whole matrix never leaves a signed 64-bit accumulator.
using Cost = std::int64_t;

inline constexpr Cost kMaxCellCost = 2147483647;         // 2^31 - 1
inline constexpr std::size_t kMaxCellCount = 1u << 20;  // m * n bound

/// Dense m x n matrix of non-negative integer costs, row-major.
///
/// Immutable once constructed; the constructor validates every invariant and
/// throws ConsistencyError on violation.
class CostMatrix {
 public:
  CostMatrix(std::size_t rows, std::size_t cols, std::vector<Cost> cells);

  /// Nested rows; all rows must have the same length.
  CostMatrix(std::initializer_list<std::initializer_list<Cost>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Cost operator()(std::size_t row, std::size_t col) const noexcept {
    return cells_[row * cols_ + col];
  }

  std::span<const Cost> cells() const noexcept { return cells_; }

  Cost column_min(std::size_t col) const;
  Cost column_max(std::size_t col) const;

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Cost> cells_;
};

}  // namespace pbp
