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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pbp {

using Coefficient = std::int64_t;

/// A monomial's variable set: a product of y_i over the stored rows.
///
/// Rows are kept 0-based and ascending internally; every serialized form
/// prints them 1-based. The empty term is the constant monomial.
///
/// Terms are totally ordered by (size, colexicographic rows), i.e. shorter
/// terms first, and among equal sizes the term whose largest differing row
/// is smaller comes first. This is the order used by every serialization.
class Term {
 public:
  Term() = default;

  /// Rows may arrive in any order; duplicates are rejected.
  explicit Term(std::vector<std::uint32_t> rows);

  /// Builds a term from 1-based row labels as written in y_1 ... y_m.
  static Term from_labels(std::initializer_list<std::uint32_t> labels);

  std::span<const std::uint32_t> rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  bool contains(std::uint32_t row) const;
  bool is_proper_subset_of(const Term& other) const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  std::vector<std::uint32_t> rows_;
};

/// Canonical penalty-based pseudo-Boolean polynomial over y_1..y_m.
///
/// Coefficients are strictly positive (zeros are dropped on construction)
/// and every term has at most m - 1 variables.
class PseudoBooleanPolynomial {
 public:
  using TermMap = std::map<Term, Coefficient>;

  explicit PseudoBooleanPolynomial(std::size_t variables);

  /// Validates rows < variables, size <= variables - 1, coefficient >= 0.
  PseudoBooleanPolynomial(std::size_t variables, TermMap terms);

  std::size_t variables() const noexcept { return variables_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Zero when the term is absent.
  Coefficient coefficient(const Term& term) const;
  Coefficient constant() const { return coefficient(Term{}); }

  friend bool operator==(const PseudoBooleanPolynomial&,
                         const PseudoBooleanPolynomial&) = default;

 private:
  std::size_t variables_;
  TermMap terms_;
};

/// Comparable identity of a polynomial, optionally blind to the constant.
class EquivalenceKey {
 public:
  EquivalenceKey() = default;
  explicit EquivalenceKey(std::string repr) : repr_(std::move(repr)) {}

  const std::string& str() const noexcept { return repr_; }

  friend bool operator==(const EquivalenceKey&, const EquivalenceKey&) = default;
  friend auto operator<=>(const EquivalenceKey&, const EquivalenceKey&) = default;

 private:
  std::string repr_;
};

/// "c0 + c1*y_i*y_j + ..." in canonical term order; "0" when empty.
std::string to_text(const PseudoBooleanPolynomial& p);

/// Inverse of to_text. Like terms are summed; throws ParseError.
PseudoBooleanPolynomial parse_text(std::string_view text, std::size_t variables);

/// [{"coeff": c, "rows": [i, j, ...]}, ...] with 1-based rows.
nlohmann::json to_json(const PseudoBooleanPolynomial& p);
PseudoBooleanPolynomial from_json(const nlohmann::json& j, std::size_t variables);

}  // namespace pbp
