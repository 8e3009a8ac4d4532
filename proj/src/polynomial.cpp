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

#include "pbp/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pbp/error.hpp"

namespace pbp {

Term::Term(std::vector<std::uint32_t> rows) : rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end());
  if (std::adjacent_find(rows_.begin(), rows_.end()) != rows_.end()) {
    throw ConsistencyError("term contains a repeated row");
  }
}

Term Term::from_labels(std::initializer_list<std::uint32_t> labels) {
  std::vector<std::uint32_t> rows;
  rows.reserve(labels.size());
  for (std::uint32_t label : labels) {
    if (label == 0) throw ConsistencyError("row labels are 1-based");
    rows.push_back(label - 1);
  }
  return Term(std::move(rows));
}

bool Term::contains(std::uint32_t row) const {
  return std::binary_search(rows_.begin(), rows_.end(), row);
}

bool Term::is_proper_subset_of(const Term& other) const {
  return size() < other.size() &&
         std::includes(other.rows_.begin(), other.rows_.end(), rows_.begin(),
                       rows_.end());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.rows_.rbegin(), a.rows_.rend(), b.rows_.rbegin(), b.rows_.rend());
}

PseudoBooleanPolynomial::PseudoBooleanPolynomial(std::size_t variables)
    : variables_(variables) {
  if (variables_ == 0) {
    throw ConsistencyError("polynomial needs at least one variable");
  }
}

PseudoBooleanPolynomial::PseudoBooleanPolynomial(std::size_t variables,
                                                 TermMap terms)
    : PseudoBooleanPolynomial(variables) {
  for (auto it = terms.begin(); it != terms.end();) {
    const auto& [term, coeff] = *it;
    if (coeff < 0) {
      throw ConsistencyError("negative coefficient in penalty polynomial");
    }
    if (term.size() >= variables_) {
      throw ConsistencyError("term of size " + std::to_string(term.size()) +
                             " exceeds degree bound " +
                             std::to_string(variables_ - 1));
    }
    if (!term.empty() && term.rows().back() >= variables_) {
      throw ConsistencyError("term row " +
                             std::to_string(term.rows().back() + 1) +
                             " outside y_1..y_" + std::to_string(variables_));
    }
    it = coeff == 0 ? terms.erase(it) : std::next(it);
  }
  terms_ = std::move(terms);
}

Coefficient PseudoBooleanPolynomial::coefficient(const Term& term) const {
  auto it = terms_.find(term);
  return it == terms_.end() ? 0 : it->second;
}

std::string to_text(const PseudoBooleanPolynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [term, coeff] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    out << coeff;
    for (std::uint32_t row : term.rows()) out << "*y" << row + 1;
  }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto at = s.find(sep);
    parts.push_back(s.substr(0, at));
    if (at == std::string_view::npos) return parts;
    s.remove_prefix(at + 1);
  }
}

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

void accumulate(PseudoBooleanPolynomial::TermMap& terms, Term term,
                Coefficient coeff, std::size_t variables) {
  for (std::uint32_t row : term.rows()) {
    if (row >= variables) {
      throw ParseError("variable y" + std::to_string(row + 1) +
                       " outside y1..y" + std::to_string(variables));
    }
  }
  terms[std::move(term)] += coeff;
}

}  // namespace

PseudoBooleanPolynomial parse_text(std::string_view text, std::size_t variables) {
  PseudoBooleanPolynomial::TermMap terms;
  if (trim(text).empty()) throw ParseError("empty polynomial text");
  for (const std::string_view raw : split(text, '+')) {
    const std::string_view part = trim(raw);
    if (part.empty()) throw ParseError("empty monomial");
    const auto factors = split(part, '*');
    const auto coeff = parse_number<Coefficient>(trim(factors.front()), "coefficient");
    std::vector<std::uint32_t> rows;
    for (std::size_t i = 1; i < factors.size(); ++i) {
      const std::string_view factor = trim(factors[i]);
      if (factor.size() < 2 || factor.front() != 'y') {
        throw ParseError("bad variable '" + std::string(factor) + "'");
      }
      const auto label = parse_number<std::uint32_t>(factor.substr(1), "variable index");
      if (label == 0) throw ParseError("variable indices are 1-based");
      rows.push_back(label - 1);
    }
    try {
      accumulate(terms, Term(std::move(rows)), coeff, variables);
    } catch (const ConsistencyError& e) {
      throw ParseError(e.what());
    }
  }
  try {
    return PseudoBooleanPolynomial(variables, std::move(terms));
  } catch (const ConsistencyError& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json to_json(const PseudoBooleanPolynomial& p) {
  auto out = nlohmann::json::array();
  for (const auto& [term, coeff] : p.terms()) {
    std::vector<std::uint32_t> labels;
    labels.reserve(term.size());
    for (std::uint32_t row : term.rows()) labels.push_back(row + 1);
    out.push_back({{"coeff", coeff}, {"rows", labels}});
  }
  return out;
}

PseudoBooleanPolynomial from_json(const nlohmann::json& j, std::size_t variables) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
  PseudoBooleanPolynomial::TermMap terms;
  try {
    for (const auto& mono : j) {
      const auto coeff = mono.at("coeff").get<Coefficient>();
      std::vector<std::uint32_t> rows;
      for (const auto& label : mono.at("rows")) {
        const auto l = label.get<std::uint32_t>();
        if (l == 0) throw ParseError("row labels are 1-based");
        rows.push_back(l - 1);
      }
      accumulate(terms, Term(std::move(rows)), coeff, variables);
    }
    return PseudoBooleanPolynomial(variables, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  } catch (const ConsistencyError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace pbp
