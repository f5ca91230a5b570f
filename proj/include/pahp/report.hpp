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

// End-to-end pipeline over a project: consistency of each matrix, normalized
// scales, the normalized table, and (optionally) the ordinal-regression
// results. Failures are raised as StageError naming "ahp", "scale" or "naror".

#include <optional>
#include <string>
#include <vector>

#include "pahp/project.hpp"

namespace pahp::report {

using session::Json;

struct MatrixConsistency {
  std::string criterion;
  ahp::ConsistencyReport report;
};

struct NarorSection {
  bool computed = false;
  bool compatible = false;
  double epsilon_star = 0.0;
  double stage1_epsilon = 0.0;
  double stage2_delta = 0.0;
  choquet::MoebiusCapacity capacity;
  std::vector<double> shapley;
  std::vector<naror::RankedAlternative> ranking;
  naror::RelationMatrices relations;
  std::vector<std::size_t> conflict;
};

struct ReportBundle {
  std::string project_id;
  long project_version = 0;
  std::vector<MatrixConsistency> consistency;
  std::vector<scale::NormalizedScale> scales;
  scale::NormalizedTable normalized;
  std::vector<scale::MonotonicityWarning> warnings;
  scale::ComparisonBudget budget;
  /// Statements the ordinal-regression section was computed from.
  std::vector<naror::PreferenceStatement> statements;
  NarorSection naror;
};

struct ReportOptions {
  /// false stops after the normalized table.
  bool solve = true;
  unsigned jobs = 1;
  ahp::RandomIndexSource random_index;
  /// Replaces the project's statements (what-if); the project is not touched.
  std::optional<std::vector<naror::PreferenceStatement>> statements;
};

ReportBundle build_report(const session::Project& project, const ReportOptions& options = {});

Json to_json(const ReportBundle& bundle);
/// Aligned plain-text tables for a terminal.
std::string to_text(const ReportBundle& bundle);

/// Round-log entry for a computed bundle.
session::Round make_round(const ReportBundle& bundle);

/// Capacity export record: [{"subset": [ids], "moebius": "..."}].
Json capacity_to_json(const choquet::MoebiusCapacity& capacity,
                      const std::vector<std::string>& criteria);

Json relations_to_json(const naror::RelationMatrices& relations);
Json consistency_to_json(const ahp::ConsistencyReport& report);

/// Renders rows as columns padded to the widest cell; the first row is the
/// header. Numeric-looking cells are right-aligned.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace pahp::report
