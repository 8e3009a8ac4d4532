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

#include "pbp/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "pbp/error.hpp"

namespace pbp {

namespace {

// Stable ordering of the rows of one column.
void sort_column(const CostMatrix& c, std::size_t col,
                 std::vector<std::uint32_t>& order) {
  order.resize(c.rows());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return c(a, col) < c(b, col);
                   });
}

void insert_sorted(std::vector<std::uint32_t>& rows, std::uint32_t row) {
  rows.insert(std::upper_bound(rows.begin(), rows.end(), row), row);
}

}  // namespace

PermutationMatrix permutation_matrix(const CostMatrix& c) {
  PermutationMatrix pi(c.rows(), c.cols());
  std::vector<std::uint32_t> order;
  for (std::size_t j = 0; j < c.cols(); ++j) {
    sort_column(c, j, order);
    for (std::size_t k = 0; k < c.rows(); ++k) pi(k, j) = order[k];
  }
  return pi;
}

Grid<Cost> sorted_matrix(const CostMatrix& c, const PermutationMatrix& pi) {
  if (pi.rows() != c.rows() || pi.cols() != c.cols()) {
    throw ConsistencyError("permutation matrix shape differs from cost matrix");
  }
  Grid<Cost> sorted(c.rows(), c.cols());
  for (std::size_t j = 0; j < c.cols(); ++j) {
    for (std::size_t k = 0; k < c.rows(); ++k) {
      if (pi(k, j) >= c.rows()) {
        throw ConsistencyError("permutation entry out of range");
      }
      sorted(k, j) = c(pi(k, j), j);
    }
  }
  return sorted;
}

DeltaMatrix delta_matrix(const CostMatrix& c, const PermutationMatrix& pi) {
  const Grid<Cost> sorted = sorted_matrix(c, pi);
  DeltaMatrix delta(c.rows(), c.cols());
  std::vector<bool> seen(c.rows());
  for (std::size_t j = 0; j < c.cols(); ++j) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t k = 0; k < c.rows(); ++k) {
      if (seen[pi(k, j)]) {
        throw ConsistencyError("permutation column " + std::to_string(j + 1) +
                               " repeats a row");
      }
      seen[pi(k, j)] = true;
      if (k == 0) {
        delta(k, j) = sorted(k, j);
        continue;
      }
      delta(k, j) = sorted(k, j) - sorted(k - 1, j);
      if (delta(k, j) < 0) {
        throw ConsistencyError("permutation column " + std::to_string(j + 1) +
                               " does not sort the costs");
      }
    }
  }
  return delta;
}

TermsMatrix terms_matrix(const PermutationMatrix& pi) {
  TermsMatrix terms(pi.rows(), pi.cols());
  std::vector<std::uint32_t> prefix;
  for (std::size_t j = 0; j < pi.cols(); ++j) {
    prefix.clear();
    for (std::size_t k = 1; k < pi.rows(); ++k) {
      insert_sorted(prefix, pi(k - 1, j));
      terms(k, j) = Term(prefix);
    }
  }
  return terms;
}

PseudoBooleanPolynomial aggregate(const DeltaMatrix& delta,
                                  const TermsMatrix& terms) {
  if (delta.rows() != terms.rows() || delta.cols() != terms.cols()) {
    throw ConsistencyError("delta and terms matrices differ in shape");
  }
  PseudoBooleanPolynomial::TermMap sum;
  for (std::size_t k = 0; k < delta.rows(); ++k) {
    for (std::size_t j = 0; j < delta.cols(); ++j) {
      if (delta(k, j) != 0) sum[terms(k, j)] += delta(k, j);
    }
  }
  return PseudoBooleanPolynomial(delta.rows(), std::move(sum));
}

PseudoBooleanPolynomial reduce(const CostMatrix& c) {
  // Fused form of aggregate(delta_matrix, terms_matrix): only cells with a
  // strictly increasing sorted value contribute, so their terms are the only
  // ones materialized.
  PseudoBooleanPolynomial::TermMap sum;
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> prefix;
  for (std::size_t j = 0; j < c.cols(); ++j) {
    sort_column(c, j, order);
    prefix.clear();
    Cost previous = c(order[0], j);
    sum[Term{}] += previous;
    for (std::size_t k = 1; k < c.rows(); ++k) {
      insert_sorted(prefix, order[k - 1]);
      const Cost value = c(order[k], j);
      if (value != previous) {
        sum[Term(prefix)] += value - previous;
        previous = value;
      }
    }
  }
  return PseudoBooleanPolynomial(c.rows(), std::move(sum));
}

std::size_t degree(const PseudoBooleanPolynomial& p) {
  // Terms are ordered by size first, so the last one is the largest.
  return p.empty() ? 0 : p.terms().rbegin()->first.size();
}

Coefficient evaluate(const PseudoBooleanPolynomial& p, const std::vector<bool>& y) {
  if (y.size() != p.variables()) {
    throw DimensionError("assignment has " + std::to_string(y.size()) +
                         " values for " + std::to_string(p.variables()) +
                         " variables");
  }
  Coefficient total = 0;
  for (const auto& [term, coeff] : p.terms()) {
    const bool on = std::all_of(term.rows().begin(), term.rows().end(),
                                [&](std::uint32_t r) { return y[r]; });
    if (on) total += coeff;
  }
  return total;
}

PseudoBooleanPolynomial truncate(const PseudoBooleanPolynomial& p,
                                 std::size_t max_size) {
  if (max_size == 0) throw ParameterError("truncation degree must be >= 1");
  PseudoBooleanPolynomial::TermMap kept;
  for (const auto& [term, coeff] : p.terms()) {
    if (term.size() < max_size) kept.emplace_hint(kept.end(), term, coeff);
  }
  return PseudoBooleanPolynomial(p.variables(), std::move(kept));
}

EquivalenceKey equivalence_key(const PseudoBooleanPolynomial& p,
                               bool include_constant) {
  std::ostringstream out;
  out << 'm' << p.variables();
  for (const auto& [term, coeff] : p.terms()) {
    if (term.empty() && !include_constant) continue;
    out << '|';
    for (std::size_t i = 0; i < term.size(); ++i) {
      out << (i ? "," : "") << term.rows()[i] + 1;
    }
    out << ':' << coeff;
  }
  return EquivalenceKey(out.str());
}

ColumnPacking column_pack(const PseudoBooleanPolynomial& p) {
  using Monomial = ColumnPacking::Monomial;
  const std::vector<Monomial> monomials(p.terms().begin(), p.terms().end());
  const std::size_t n = monomials.size();

  // Minimum chain cover = n - maximum matching in the comparability graph
  // (left copy -> right copy when the term is a proper subset).
  std::vector<std::vector<std::size_t>> successors(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (monomials[a].first.is_proper_subset_of(monomials[b].first)) {
        successors[a].push_back(b);
      }
    }
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> next(n, kNone);
  std::vector<std::size_t> prev(n, kNone);
  std::vector<char> visited;

  auto augment = [&](auto&& self, std::size_t a) -> bool {
    for (std::size_t b : successors[a]) {
      if (visited[b]) continue;
      visited[b] = 1;
      if (prev[b] == kNone || self(self, prev[b])) {
        next[a] = b;
        prev[b] = a;
        return true;
      }
    }
    return false;
  };
  for (std::size_t a = 0; a < n; ++a) {
    visited.assign(n, 0);
    augment(augment, a);
  }

  ColumnPacking packing;
  for (std::size_t head = 0; head < n; ++head) {
    if (prev[head] != kNone) continue;
    auto& column = packing.columns.emplace_back();
    for (std::size_t at = head; at != kNone; at = next[at]) {
      column.push_back(monomials[at]);
    }
  }
  return packing;
}

}  // namespace pbp
