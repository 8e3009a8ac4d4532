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
#include <utility>
#include <vector>

#include "pbp/cost_matrix.hpp"
#include "pbp/polynomial.hpp"

namespace pbp {

/// Small row-major grid used for the intermediate matrices of a reduction.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return cells_[r * cols_ + c];
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> cells_;
};

/// Column j lists the (0-based) rows of C in non-decreasing order of C(., j).
using PermutationMatrix = Grid<std::uint32_t>;
/// First sorted value, then successive differences, per column.
using DeltaMatrix = Grid<Cost>;
/// Cell (k, j) is the set of the first k rows of column j of the permutation.
using TermsMatrix = Grid<Term>;

/// Stable per-column sort order: ties keep ascending row index.
PermutationMatrix permutation_matrix(const CostMatrix& c);

/// C with every column reordered by pi.
Grid<Cost> sorted_matrix(const CostMatrix& c, const PermutationMatrix& pi);

/// Throws ConsistencyError unless pi has C's shape, each column is a
/// permutation of the rows, and it sorts C's columns non-decreasingly.
DeltaMatrix delta_matrix(const CostMatrix& c, const PermutationMatrix& pi);

TermsMatrix terms_matrix(const PermutationMatrix& pi);

/// Sums delta(k, j) * term(k, j) over all cells, merging like terms.
PseudoBooleanPolynomial aggregate(const DeltaMatrix& delta,
                                  const TermsMatrix& terms);

/// Canonical reduced polynomial of a cost matrix.
///
/// For every y with at least one zero, the result evaluates to
/// sum_j min { C(i, j) : y_i = 0 }; for y all ones it gives sum_j max_i C(i, j).
PseudoBooleanPolynomial reduce(const CostMatrix& c);

/// Largest term size; 0 for constant or empty polynomials.
std::size_t degree(const PseudoBooleanPolynomial& p);

/// Throws DimensionError when y.size() != p.variables().
Coefficient evaluate(const PseudoBooleanPolynomial& p, const std::vector<bool>& y);

/// Drops every term with size >= max_size. Throws ParameterError if max_size == 0.
PseudoBooleanPolynomial truncate(const PseudoBooleanPolynomial& p,
                                 std::size_t max_size);

EquivalenceKey equivalence_key(const PseudoBooleanPolynomial& p,
                               bool include_constant);

/// Monomials grouped into chains of strictly growing terms.
struct ColumnPacking {
  using Monomial = std::pair<Term, Coefficient>;
  std::vector<std::vector<Monomial>> columns;
};

/// Partition of the monomials into the fewest superset chains (Dilworth).
ColumnPacking column_pack(const PseudoBooleanPolynomial& p);

}  // namespace pbp
