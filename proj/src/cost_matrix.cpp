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

#include "pbp/cost_matrix.hpp"

#include <algorithm>
#include <string>

#include "pbp/error.hpp"

namespace pbp {

namespace {

std::vector<Cost> flatten(std::initializer_list<std::initializer_list<Cost>> rows,
                          std::size_t& cols) {
  cols = rows.size() == 0 ? 0 : rows.begin()->size();
  std::vector<Cost> cells;
  cells.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw ConsistencyError("cost matrix rows have unequal lengths");
    }
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return cells;
}

}  // namespace

CostMatrix::CostMatrix(std::size_t rows, std::size_t cols,
                       std::vector<Cost> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows_ == 0 || cols_ == 0) {
    throw ConsistencyError("cost matrix must have at least one row and column");
  }
  if (rows_ > kMaxCellCount / cols_) {
    throw ConsistencyError("cost matrix exceeds " +
                           std::to_string(kMaxCellCount) + " cells");
  }
  if (cells_.size() != rows_ * cols_) {
    throw ConsistencyError("cost matrix cell count " +
                           std::to_string(cells_.size()) + " != " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  for (Cost c : cells_) {
    if (c < 0 || c > kMaxCellCost) {
      throw ConsistencyError("cost matrix cell out of range: " +
                             std::to_string(c));
    }
  }
}

CostMatrix::CostMatrix(std::initializer_list<std::initializer_list<Cost>> rows)
    : CostMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size(),
                 [&] {
                   std::size_t cols = 0;
                   return flatten(rows, cols);
                 }()) {}

Cost CostMatrix::column_min(std::size_t col) const {
  Cost best = (*this)(0, col);
  for (std::size_t r = 1; r < rows_; ++r) best = std::min(best, (*this)(r, col));
  return best;
}

Cost CostMatrix::column_max(std::size_t col) const {
  Cost best = (*this)(0, col);
  for (std::size_t r = 1; r < rows_; ++r) best = std::max(best, (*this)(r, col));
  return best;
}

}  // namespace pbp
