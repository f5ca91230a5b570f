// Copyright 2026 The pahp Authors
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

#pragma once

// Common [0,1] value scales built from direct ratings: AHP is run only on a
// handful of reference levels per criterion, the resulting priorities are
// min-max normalised, and every other rating is placed on the scale by
// piecewise-linear interpolation between the bracketing references.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pahp/ahp.hpp"

namespace pahp::scale {

enum class Direction { maximize, minimize };

std::string_view to_string(Direction d) noexcept;
Direction parse_direction(std::string_view text);

struct CriterionSpec {
  std::string id;
  std::string name;
  Direction direction = Direction::maximize;
  double scale_min = 0.0;
  double scale_max = 1.0;
  /// The criterion already has an objective numeric evaluation, so classic
  /// AHP would not have needed alternative-vs-alternative comparisons for it.
  bool objective = false;

  friend bool operator==(const CriterionSpec&, const CriterionSpec&) = default;
};

/// Throws ValidationError unless scale_min < scale_max and id is non-empty.
void validate(const CriterionSpec& spec);

struct ReferenceLevels {
  std::string criterion;
  std::vector<double> levels;

  friend bool operator==(const ReferenceLevels&, const ReferenceLevels&) = default;
};

/// Strictly increasing, at least two, inside [scale_min, scale_max].
void validate(const ReferenceLevels& refs, const CriterionSpec& spec);

/// Canonical identifier of a reference level when it labels a matrix row
/// ("2500", "0.5"). Shortest decimal that round-trips.
std::string level_label(double level);

struct NormalizedScale {
  std::string criterion;
  std::vector<double> levels;
  std::vector<double> values;

  friend bool operator==(const NormalizedScale&, const NormalizedScale&) = default;
};

/// Alternatives x criteria grid, row-major.
template <typename Tag>
struct Grid {
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  std::vector<double> values;

  std::size_t rows() const noexcept { return alternatives.size(); }
  std::size_t cols() const noexcept { return criteria.size(); }
  double at(std::size_t a, std::size_t j) const { return values.at(a * cols() + j); }
  double& at(std::size_t a, std::size_t j) { return values.at(a * cols() + j); }
  std::span<const double> row(std::size_t a) const {
    return std::span<const double>(values).subspan(a * cols(), cols());
  }
  /// Throws ValidationError for unknown identifiers.
  std::size_t alternative_index(std::string_view id) const;
  std::size_t criterion_index(std::string_view id) const;

  friend bool operator==(const Grid&, const Grid&) = default;
};

struct RawTag {};
struct UnitTag {};

/// Raw ratings r_j(a).
using RatingTable = Grid<RawTag>;
/// Interpolated values u(r_j(a)) in [0,1].
using NormalizedTable = Grid<UnitTag>;

/// Every rating inside its criterion's [scale_min, scale_max].
void validate(const RatingTable& table, std::span<const CriterionSpec> specs);

/// Min-max normalisation u_s = (w_s - min) / (max - min). Values within 1e-9
/// of the range ends (relative to the range) snap to exactly 0 or 1.
/// Throws ValidationError for fewer than two entries or a zero range.
std::vector<double> normalize_priorities(std::span<const double> priorities);

NormalizedScale normalize_priorities(const ReferenceLevels& refs, const ahp::PriorityVector& pv);

/// Runs AHP on a matrix over the reference levels and normalises the result.
/// Matrix items are matched to levels by level_label, so the matrix may list
/// levels in any order.
NormalizedScale scale_from_matrix(const ReferenceLevels& refs, const ahp::PairwiseMatrix& matrix,
                                  ahp::PriorityMethod method = ahp::PriorityMethod::eigenvector);

/// Scale from values given directly (one per level). Values must be in
/// [0,1]; the set must attain both 0 and 1.
NormalizedScale scale_from_values(const ReferenceLevels& refs, std::vector<double> values);

/// Piecewise-linear value of a rating. Exact at reference levels; throws
/// ValidationError outside [first level, last level].
double interpolate(const NormalizedScale& scale, double rating);

/// Throws ValidationError naming the alternative and criterion on failure.
NormalizedTable normalize_table(const RatingTable& ratings, std::span<const NormalizedScale> scales);

/// a dominates b: at least as good everywhere and strictly better somewhere.
/// Normalised values are always "more is better".
bool dominates(const NormalizedTable& table, std::string_view a, std::string_view b);
bool dominates(const RatingTable& table, std::span<const CriterionSpec> specs, std::string_view a,
               std::string_view b);

struct MonotonicityWarning {
  std::string criterion;
  double from_level = 0.0;
  double to_level = 0.0;
  double from_value = 0.0;
  double to_value = 0.0;
  std::string message;
};

/// One warning per adjacent level pair where u moves against `direction`.
std::vector<MonotonicityWarning> monotonicity_check(const NormalizedScale& scale,
                                                    Direction direction);

/// (1/n) * sum (actual_i - estimated_i)^2.
double mse(std::span<const double> estimated, std::span<const double> actual);

struct ComparisonBudget {
  long full_ahp = 0;
  long parsimonious = 0;
};

/// full_ahp = n_criteria * C(n_alternatives, 2); parsimonious = sum C(t_j, 2).
/// n_criteria counts criteria that would need alternative comparisons, which
/// can be fewer than ref_counts.size() when some criteria are objective.
ComparisonBudget comparison_budget(int n_criteria, int n_alternatives,
                                   std::span<const int> ref_counts);

}  // namespace pahp::scale
