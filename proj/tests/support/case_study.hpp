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

// Case-study fixtures: the 21 social-housing projects rated on 10 criteria,
// the printed reference-level values and normalized table, and the
// statement sets of the two elicitation rounds.

#include <string>
#include <vector>

#include "pahp/naror.hpp"
#include "pahp/project.hpp"
#include "pahp/scale.hpp"

namespace pahp::testing {

inline constexpr int kAlternatives = 21;
inline constexpr int kCriteria = 10;

std::vector<std::string> alternative_ids();
std::vector<std::string> criterion_ids();

/// Raw ratings, row per project P1..P21, column per criterion C1..C10.
const std::vector<std::vector<double>>& printed_ratings();
/// Reference levels and their printed normalized values, per criterion.
const std::vector<std::vector<double>>& printed_levels();
const std::vector<std::vector<double>>& printed_values();
/// Printed normalized table, same layout as printed_ratings().
const std::vector<std::vector<double>>& printed_normalized();

/// Absolute path of a file under data/case_study.
std::string data_file(const std::string& name);

/// Project built from the CSV files under data/case_study (criteria,
/// performances, references and the C3/C5 matrices), no statements.
session::Project case_study_project();

/// The nine positive interactions.
std::vector<naror::PreferenceStatement> interaction_statements();
/// Interactions plus the social and technical importance chains.
std::vector<naror::PreferenceStatement> first_round_statements();
/// Interactions, the full importance chain, the project chain and P11
/// weakly preferred to every other project.
std::vector<naror::PreferenceStatement> final_round_statements();

/// Shapley order and top-six ranking forced by the final round.
std::vector<std::string> final_importance_chain();
std::vector<std::string> final_project_chain();

/// Normalized table of the case-study project (matrices for C3/C5).
scale::NormalizedTable normalized_case_study();

}  // namespace pahp::testing
