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

// Project model and its JSON document.
//
// Document layout (schema_version 1):
//
//   {
//     "schema_version": 1, "id": "...", "version": 12,
//     "criteria":     [{"id", "name", "direction", "scale_min", "scale_max", "objective"}],
//     "alternatives": [{"id", "name"}],
//     "ratings":      [{"alternative": "P1", "values": {"C1": "9", ...}}],
//     "references":   [{"criterion": "C1", "levels": ["0", ...], "values": ["0", ...]}],
//     "matrices":     [{"criterion": "C3", "judgments": [{"row_item", "col_item",
//                                                         "numerator", "denominator"}]}],
//     "statements":   [{"kind", "items": [...], "label"}],
//     "rounds":       [{"index", "timestamp", "version", "statements", "compatible",
//                       "epsilon_star", "shapley", "ranking"}]
//   }
//
// Reals are written as shortest round-trip decimal strings; judgments as
// integer pairs. "values" on a reference entry is optional and supplies the
// normalized scale directly for criteria without a pairwise matrix.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "pahp/ahp.hpp"
#include "pahp/naror.hpp"
#include "pahp/scale.hpp"

namespace pahp::session {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct Alternative {
  std::string id;
  std::string name;
  friend bool operator==(const Alternative&, const Alternative&) = default;
};

struct ReferenceEntry {
  scale::ReferenceLevels levels;
  std::optional<std::vector<double>> values;
  friend bool operator==(const ReferenceEntry&, const ReferenceEntry&) = default;
};

struct CriterionMatrix {
  std::string criterion;
  ahp::PairwiseMatrix matrix;
  friend bool operator==(const CriterionMatrix&, const CriterionMatrix&) = default;
};

struct Round {
  int index = 0;
  std::string timestamp;
  long version = 0;
  std::vector<naror::PreferenceStatement> statements;
  bool compatible = false;
  double epsilon_star = 0.0;
  std::vector<double> shapley;
  std::vector<naror::RankedAlternative> ranking;
  friend bool operator==(const Round&, const Round&) = default;
};

class Project {
 public:
  Project() = default;
  explicit Project(std::string id);

  const std::string& id() const noexcept { return id_; }
  long version() const noexcept { return version_; }
  const std::vector<scale::CriterionSpec>& criteria() const noexcept { return criteria_; }
  const std::vector<Alternative>& alternatives() const noexcept { return alternatives_; }
  const scale::RatingTable& ratings() const noexcept { return ratings_; }
  const std::vector<ReferenceEntry>& references() const noexcept { return references_; }
  const std::vector<CriterionMatrix>& matrices() const noexcept { return matrices_; }
  const std::vector<naror::PreferenceStatement>& statements() const noexcept {
    return statements_;
  }
  const std::vector<Round>& rounds() const noexcept { return rounds_; }

  const scale::CriterionSpec& criterion(std::string_view id) const;
  const ReferenceEntry* find_references(std::string_view criterion) const;
  const CriterionMatrix* find_matrix(std::string_view criterion) const;

  // Every mutator validates first, then applies and bumps the version by one.
  // Nothing changes when validation throws.

  /// Replaces the criteria; drops ratings, references and matrices that no
  /// longer fit.
  void set_criteria(std::vector<scale::CriterionSpec> criteria);
  void set_alternatives(std::vector<Alternative> alternatives);
  /// Table columns must be the criteria in declared order. When the project
  /// has no alternatives yet they are taken from the table rows; otherwise the
  /// rows must match them.
  void set_ratings(scale::RatingTable table);
  /// Replacing levels drops a matrix over the old levels.
  void set_references(ReferenceEntry entry);
  void set_references(std::vector<ReferenceEntry> entries);
  /// Items must be the criterion's reference levels (as labels).
  ahp::ConsistencyReport set_matrix(std::string criterion, std::span<const ahp::Comparison> judgments,
                                    const ahp::RandomIndexSource& ri = {});
  void add_statement(naror::PreferenceStatement statement);
  void remove_statement(std::size_t index);
  void set_statements(std::vector<naror::PreferenceStatement> statements);
  /// Appends to the round log; earlier rounds are never touched.
  void append_round(Round round);

  /// Statement check against the current criteria and alternatives.
  void validate_statement(const naror::PreferenceStatement& statement, std::size_t position) const;

  friend bool operator==(const Project&, const Project&) = default;

  // Persistence needs to restore the version verbatim.
  friend Project from_json(const Json& doc);

 private:
  void bump() { ++version_; }

  std::string id_;
  long version_ = 0;
  std::vector<scale::CriterionSpec> criteria_;
  std::vector<Alternative> alternatives_;
  scale::RatingTable ratings_;
  std::vector<ReferenceEntry> references_;
  std::vector<CriterionMatrix> matrices_;
  std::vector<naror::PreferenceStatement> statements_;
  std::vector<Round> rounds_;
};

/// Items of a judgment list, ordered so that every record is upper-triangle
/// (the item judged as row most often comes first).
std::vector<std::string> matrix_items(std::span<const ahp::Comparison> judgments);

// --- documents ------------------------------------------------------------

Json to_json(const Project& project);
/// Throws DocumentError on schema mismatch, unknown top-level fields or
/// malformed content, and ValidationError on domain violations.
Project from_json(const Json& doc);

std::string save(const Project& project);
Project load(std::string_view text);

void save_file(const Project& project, const std::string& path);
Project load_file(const std::string& path);

Json statement_to_json(const naror::PreferenceStatement& statement);
naror::PreferenceStatement statement_from_json(const Json& j, const std::string& field = "statement");

std::vector<ReferenceEntry> references_from_json(const Json& j);
Json references_to_json(const std::vector<ReferenceEntry>& entries);
std::vector<ahp::Comparison> judgments_from_json(const Json& j);
Json judgments_to_json(std::span<const ahp::Comparison> judgments);
scale::RatingTable ratings_from_json(const Json& j, const std::vector<scale::CriterionSpec>& criteria);
Json ratings_to_json(const scale::RatingTable& table);
std::vector<scale::CriterionSpec> criteria_from_json(const Json& j);
std::vector<Alternative> alternatives_from_json(const Json& j);

// --- ingestion ------------------------------------------------------------

/// CSV with the alternative id in the first column and criterion ids as the
/// remaining header cells. Cells accept grouping separators and decimal
/// commas ("7,500", "7 500", "0,5").
scale::RatingTable import_performances(std::string_view text,
                                       std::span<const scale::CriterionSpec> criteria);

/// CSV with columns id,name,direction,scale_min,scale_max[,objective].
std::vector<scale::CriterionSpec> import_criteria(std::string_view text);

/// CSV with columns row_item,col_item,numerator,denominator.
std::vector<ahp::Comparison> import_judgments(std::string_view text);

/// CSV with columns criterion,levels[,values]; levels and values are
/// space-separated lists.
std::vector<ReferenceEntry> import_references(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

/// UTC "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

}  // namespace pahp::session
