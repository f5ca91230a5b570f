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

#include "pahp/scale.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pahp/decimal.hpp"
#include "pahp/error.hpp"

namespace pahp::scale {

std::string_view to_string(Direction d) noexcept {
  return d == Direction::maximize ? "maximize" : "minimize";
}

Direction parse_direction(std::string_view text) {
  if (text == "maximize" || text == "max") return Direction::maximize;
  if (text == "minimize" || text == "min") return Direction::minimize;
  throw ValidationError("direction must be 'maximize' or 'minimize', got '" + std::string(text) +
                        "'");
}

void validate(const CriterionSpec& spec) {
  if (spec.id.empty()) throw ValidationError("criterion id must not be empty", "criteria");
  if (!(spec.scale_min < spec.scale_max)) {
    throw ValidationError("criterion " + spec.id + ": scale_min must be below scale_max",
                          "criteria." + spec.id);
  }
}

void validate(const ReferenceLevels& refs, const CriterionSpec& spec) {
  const std::string field = "references." + refs.criterion;
  if (refs.levels.size() < 2) {
    throw ValidationError("criterion " + refs.criterion + " needs at least two reference levels",
                          field);
  }
  for (std::size_t s = 0; s < refs.levels.size(); ++s) {
    const double level = refs.levels[s];
    if (level < spec.scale_min || level > spec.scale_max) {
      throw ValidationError("criterion " + refs.criterion + ": reference level " +
                                format_decimal(level) + " outside [" +
                                format_decimal(spec.scale_min) + ", " +
                                format_decimal(spec.scale_max) + "]",
                            field);
    }
    if (s > 0 && !(refs.levels[s - 1] < level)) {
      throw ValidationError("criterion " + refs.criterion +
                                ": reference levels must be strictly increasing",
                            field);
    }
  }
}

std::string level_label(double level) { return format_decimal(level); }

template <typename Tag>
std::size_t Grid<Tag>::alternative_index(std::string_view id) const {
  const auto it = std::find(alternatives.begin(), alternatives.end(), id);
  if (it == alternatives.end()) throw ValidationError("unknown alternative '" + std::string(id) + "'");
  return static_cast<std::size_t>(it - alternatives.begin());
}

template <typename Tag>
std::size_t Grid<Tag>::criterion_index(std::string_view id) const {
  const auto it = std::find(criteria.begin(), criteria.end(), id);
  if (it == criteria.end()) throw ValidationError("unknown criterion '" + std::string(id) + "'");
  return static_cast<std::size_t>(it - criteria.begin());
}

template struct Grid<RawTag>;
template struct Grid<UnitTag>;

void validate(const RatingTable& table, std::span<const CriterionSpec> specs) {
  if (table.values.size() != table.rows() * table.cols()) {
    throw ValidationError("rating table shape does not match its labels", "ratings");
  }
  for (std::size_t j = 0; j < table.cols(); ++j) {
    const auto spec = std::find_if(specs.begin(), specs.end(),
                                   [&](const CriterionSpec& s) { return s.id == table.criteria[j]; });
    if (spec == specs.end()) {
      throw ValidationError("unknown criterion column '" + table.criteria[j] + "'", "ratings");
    }
    for (std::size_t a = 0; a < table.rows(); ++a) {
      const double r = table.at(a, j);
      if (!std::isfinite(r) || r < spec->scale_min || r > spec->scale_max) {
        throw ValidationError("rating " + format_decimal(r) + " of " + table.alternatives[a] +
                                  " on " + spec->id + " outside [" +
                                  format_decimal(spec->scale_min) + ", " +
                                  format_decimal(spec->scale_max) + "]",
                              "ratings." + table.alternatives[a] + "." + spec->id);
      }
    }
  }
}

std::vector<double> normalize_priorities(std::span<const double> priorities) {
  if (priorities.size() < 2) throw ValidationError("need at least two priorities to normalise");
  const auto [lo_it, hi_it] = std::minmax_element(priorities.begin(), priorities.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double range = hi - lo;
  if (!(range > 0.0)) throw ValidationError("all priorities are equal; the scale has zero range");
  const double snap = 1e-9 * range;
  std::vector<double> u(priorities.size());
  for (std::size_t s = 0; s < priorities.size(); ++s) {
    const double w = priorities[s];
    if (hi - w <= snap) {
      u[s] = 1.0;
    } else if (w - lo <= snap) {
      u[s] = 0.0;
    } else {
      u[s] = (w - lo) / range;
    }
  }
  return u;
}

NormalizedScale normalize_priorities(const ReferenceLevels& refs, const ahp::PriorityVector& pv) {
  if (pv.weights.size() != refs.levels.size()) {
    throw ValidationError("criterion " + refs.criterion + ": " + std::to_string(pv.weights.size()) +
                          " priorities for " + std::to_string(refs.levels.size()) + " levels");
  }
  return {refs.criterion, refs.levels, normalize_priorities(pv.weights)};
}

NormalizedScale scale_from_matrix(const ReferenceLevels& refs, const ahp::PairwiseMatrix& matrix,
                                  ahp::PriorityMethod method) {
  const std::size_t t = refs.levels.size();
  if (matrix.size() != t) {
    throw ValidationError("criterion " + refs.criterion + ": matrix has " +
                              std::to_string(matrix.size()) + " items but there are " +
                              std::to_string(t) + " reference levels",
                          "matrices." + refs.criterion);
  }
  // permutation[s] = matrix row of reference level s
  std::vector<std::size_t> permutation(t);
  for (std::size_t s = 0; s < t; ++s) {
    const std::string label = level_label(refs.levels[s]);
    const auto& items = matrix.items();
    const auto it = std::find(items.begin(), items.end(), label);
    if (it == items.end()) {
      throw ValidationError("criterion " + refs.criterion + ": matrix has no item for level " +
                                label,
                            "matrices." + refs.criterion);
    }
    permutation[s] = static_cast<std::size_t>(it - items.begin());
  }
  const auto pv = ahp::priorities(matrix, method);
  const auto u = normalize_priorities(pv.weights);
  NormalizedScale scale{refs.criterion, refs.levels, std::vector<double>(t)};
  for (std::size_t s = 0; s < t; ++s) scale.values[s] = u[permutation[s]];
  return scale;
}

NormalizedScale scale_from_values(const ReferenceLevels& refs, std::vector<double> values) {
  const std::string field = "references." + refs.criterion;
  if (values.size() != refs.levels.size()) {
    throw ValidationError("criterion " + refs.criterion + ": " + std::to_string(values.size()) +
                              " values for " + std::to_string(refs.levels.size()) + " levels",
                          field);
  }
  bool has_zero = false;
  bool has_one = false;
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ValidationError("criterion " + refs.criterion + ": value " + format_decimal(v) +
                                " outside [0, 1]",
                            field);
    }
    has_zero = has_zero || v == 0.0;
    has_one = has_one || v == 1.0;
  }
  if (!has_zero || !has_one) {
    throw ValidationError("criterion " + refs.criterion + ": values must attain both 0 and 1",
                          field);
  }
  return {refs.criterion, refs.levels, std::move(values)};
}

double interpolate(const NormalizedScale& scale, double rating) {
  const auto& g = scale.levels;
  if (g.empty() || g.size() != scale.values.size()) {
    throw ValidationError("criterion " + scale.criterion + ": malformed scale");
  }
  if (!(rating >= g.front() && rating <= g.back())) {
    throw ValidationError("criterion " + scale.criterion + ": rating " + format_decimal(rating) +
                          " outside the reference span [" + format_decimal(g.front()) + ", " +
                          format_decimal(g.back()) + "]");
  }
  // First level >= rating.
  const auto it = std::lower_bound(g.begin(), g.end(), rating);
  const auto s = static_cast<std::size_t>(it - g.begin());
  if (*it == rating) return scale.values[s];
  const double lo = g[s - 1];
  const double hi = g[s];
  const double u_lo = scale.values[s - 1];
  const double u_hi = scale.values[s];
  return u_lo + (u_hi - u_lo) / (hi - lo) * (rating - lo);
}

NormalizedTable normalize_table(const RatingTable& ratings, std::span<const NormalizedScale> scales) {
  NormalizedTable out;
  out.alternatives = ratings.alternatives;
  out.criteria = ratings.criteria;
  out.values.resize(ratings.values.size());
  for (std::size_t j = 0; j < ratings.cols(); ++j) {
    const auto& id = ratings.criteria[j];
    const auto sc = std::find_if(scales.begin(), scales.end(),
                                 [&](const NormalizedScale& s) { return s.criterion == id; });
    if (sc == scales.end()) throw ValidationError("no scale for criterion " + id, "references." + id);
    for (std::size_t a = 0; a < ratings.rows(); ++a) {
      try {
        out.at(a, j) = interpolate(*sc, ratings.at(a, j));
      } catch (const ValidationError& e) {
        throw ValidationError("alternative " + ratings.alternatives[a] + ", " + e.what(),
                              "ratings." + ratings.alternatives[a] + "." + id);
      }
    }
  }
  return out;
}

namespace {

template <typename Better>
bool dominates_rows(std::span<const double> a, std::span<const double> b, Better better_or_equal) {
  bool strict = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const int cmp = better_or_equal(j, a[j], b[j]);
    if (cmp < 0) return false;
    strict = strict || cmp > 0;
  }
  return strict;
}

int compare(double a, double b) { return a > b ? 1 : (a < b ? -1 : 0); }

}  // namespace

bool dominates(const NormalizedTable& table, std::string_view a, std::string_view b) {
  const auto ra = table.row(table.alternative_index(a));
  const auto rb = table.row(table.alternative_index(b));
  return dominates_rows(ra, rb, [](std::size_t, double x, double y) { return compare(x, y); });
}

bool dominates(const RatingTable& table, std::span<const CriterionSpec> specs, std::string_view a,
               std::string_view b) {
  const auto ra = table.row(table.alternative_index(a));
  const auto rb = table.row(table.alternative_index(b));
  std::vector<Direction> directions(table.cols());
  for (std::size_t j = 0; j < table.cols(); ++j) {
    const auto spec = std::find_if(specs.begin(), specs.end(),
                                   [&](const CriterionSpec& s) { return s.id == table.criteria[j]; });
    if (spec == specs.end()) throw ValidationError("unknown criterion '" + table.criteria[j] + "'");
    directions[j] = spec->direction;
  }
  return dominates_rows(ra, rb, [&](std::size_t j, double x, double y) {
    return directions[j] == Direction::maximize ? compare(x, y) : compare(y, x);
  });
}

std::vector<MonotonicityWarning> monotonicity_check(const NormalizedScale& scale,
                                                    Direction direction) {
  std::vector<MonotonicityWarning> out;
  for (std::size_t s = 1; s < scale.levels.size() && s < scale.values.size(); ++s) {
    const double from = scale.values[s - 1];
    const double to = scale.values[s];
    const bool against = direction == Direction::maximize ? to < from : to > from;
    if (!against) continue;
    std::ostringstream msg;
    msg << "criterion " << scale.criterion << " (" << to_string(direction) << "): value "
        << (to < from ? "drops" : "rises") << " from " << format_fixed(from, 4) << " at "
        << format_decimal(scale.levels[s - 1]) << " to " << format_fixed(to, 4) << " at "
        << format_decimal(scale.levels[s]);
    out.push_back({scale.criterion, scale.levels[s - 1], scale.levels[s], from, to, msg.str()});
  }
  return out;
}

double mse(std::span<const double> estimated, std::span<const double> actual) {
  if (estimated.size() != actual.size()) {
    throw ValidationError("mse: length mismatch (" + std::to_string(estimated.size()) + " vs " +
                          std::to_string(actual.size()) + ")");
  }
  if (estimated.empty()) throw ValidationError("mse: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const double d = actual[i] - estimated[i];
    sum += d * d;
  }
  return sum / static_cast<double>(actual.size());
}

ComparisonBudget comparison_budget(int n_criteria, int n_alternatives,
                                   std::span<const int> ref_counts) {
  auto choose2 = [](long k) { return k * (k - 1) / 2; };
  ComparisonBudget b;
  b.full_ahp = static_cast<long>(n_criteria) * choose2(n_alternatives);
  for (int t : ref_counts) {
    if (t < 2) throw ValidationError("each criterion needs at least two reference levels");
    b.parsimonious += choose2(t);
  }
  return b;
}

}  // namespace pahp::scale
