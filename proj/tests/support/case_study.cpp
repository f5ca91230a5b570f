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

#include "support/case_study.hpp"

#include <algorithm>

#include "pahp/report.hpp"

#ifndef PAHP_DATA_DIR
#error "PAHP_DATA_DIR must point at the repository data directory"
#endif

namespace pahp::testing {

namespace {

using naror::PreferenceStatement;
using naror::StatementKind;

void chain(std::vector<PreferenceStatement>& out, StatementKind kind,
           const std::vector<std::string>& ids) {
  for (std::size_t k = 0; k + 1 < ids.size(); ++k) out.push_back({kind, {ids[k], ids[k + 1]}, ""});
}

}  // namespace

std::vector<std::string> alternative_ids() {
  std::vector<std::string> out;
  for (int a = 1; a <= kAlternatives; ++a) out.push_back("P" + std::to_string(a));
  return out;
}

std::vector<std::string> criterion_ids() {
  std::vector<std::string> out;
  for (int j = 1; j <= kCriteria; ++j) out.push_back("C" + std::to_string(j));
  return out;
}

const std::vector<std::vector<double>>& printed_ratings() {
  static const std::vector<std::vector<double>> t{
    {9, 12, 24, 10, 7500, 12, 8, 18, 8, 8},
    {10, 0, 6, 5, 8450, 9, 6, 12, 10, 13},
    {8, 11, 8, 8, 17000, 10, 6, 15, 2, 15},
    {10, 8, 20, 10, 2900, 13, 8, 10, 8, 10},
    {8, 6, 6, 8, 17500, 10, 6, 20, 2, 5},
    {5, 1, 8, 6, 9500, 14, 10, 25, 8, 10},
    {10, 6, 5, 4, 3260, 12, 8, 17, 7, 5},
    {10, 8, 10, 7, 7500, 10, 6, 12, 3, 13},
    {7, 4, 20, 9, 4750, 11, 8, 13, 3, 9},
    {8, 8, 21, 7, 6667, 11, 10, 15, 0, 14},
    {9, 8, 8, 8, 12500, 15, 9, 23, 5, 10},
    {10, 5, 8, 9, 20000, 1, 2, 2, 0, 4},
    {10, 13, 15, 8, 8000, 9, 5, 14, 10, 11},
    {10, 4, 8, 7, 15000, 7, 6, 12, 6, 6},
    {8, 5, 7, 6, 8714, 14, 8, 21, 2, 12},
    {8, 11, 8, 9, 12500, 7, 6, 15, 0, 10},
    {7, 4, 24, 7, 5000, 6, 7, 15, 6, 10},
    {7, 2, 4, 7, 13750, 13, 10, 22, 0, 1},
    {9, 14, 23, 10, 6957, 9, 5, 14, 6, 6},
    {8, 8, 23, 6, 7609, 6, 2, 13, 5, 8},
    {5, 7, 15, 5, 4000, 6, 3, 5, 2, 3},
  };
  return t;
}

const std::vector<std::vector<double>>& printed_levels() {
  static const std::vector<std::vector<double>> t{
    {0, 5, 8, 10},
    {0, 5, 8, 10, 15},
    {4, 7, 10, 20, 25},
    {0, 4, 8, 10},
    {2500, 5000, 10000, 15000, 20000},
    {0, 7, 11, 15},
    {0, 5, 7, 10},
    {0, 10, 20, 25},
    {0, 5, 7, 10},
    {0, 7, 11, 15},
  };
  return t;
}

const std::vector<std::vector<double>>& printed_values() {
  static const std::vector<std::vector<double>> t{
    {0, 0.206, 0.6398, 1},
    {0, 0.1165, 0.4929, 0.8203, 1},
    {0, 0.0881, 0.3664, 1, 1},
    {0, 0.2505, 0.6941, 1},
    {1, 0.5473, 0.2314, 0.0317, 0},
    {0, 0.1807, 0.463, 1},
    {0, 0.1852, 0.1516, 1},
    {0, 0.1111, 0.5591, 1},
    {0, 0.1618, 0.6143, 1},
    {0, 0.1202, 0.5347, 1},
  };
  return t;
}

const std::vector<std::vector<double>>& printed_normalized() {
  static const std::vector<std::vector<double>> t{
    {0.8199, 0.8922, 1.0, 1.0, 0.3894, 0.5973, 0.4344, 0.4695, 0.7429, 0.2238},
    {1.0, 0.0, 0.0587, 0.3614, 0.3293, 0.3218, 0.1684, 0.2007, 1.0, 0.7674},
    {0.6398, 0.8563, 0.1809, 0.6941, 0.019, 0.3924, 0.1684, 0.3351, 0.0647, 1.0},
    {1.0, 0.4929, 1.0, 1.0, 0.9276, 0.7315, 0.4344, 0.1111, 0.7429, 0.4311},
    {0.6398, 0.242, 0.0587, 0.6941, 0.0158, 0.3924, 0.1684, 0.5591, 0.0647, 0.0858},
    {0.206, 0.0233, 0.1809, 0.4723, 0.263, 0.8658, 1.0, 1.0, 0.7429, 0.4311},
    {1.0, 0.242, 0.0294, 0.2505, 0.8624, 0.5973, 0.4344, 0.4247, 0.6143, 0.0858},
    {1.0, 0.4929, 0.3664, 0.5832, 0.3894, 0.3924, 0.1684, 0.2007, 0.0971, 0.7674},
    {0.4952, 0.0932, 1.0, 0.847, 0.5926, 0.463, 0.4344, 0.2455, 0.0971, 0.3274},
    {0.6398, 0.4929, 1.0, 0.5832, 0.442, 0.463, 1.0, 0.3351, 0.0, 0.8837},
    {0.8199, 0.4929, 0.1809, 0.6941, 0.1632, 1.0, 0.7172, 0.8236, 0.1618, 0.4311},
    {1.0, 0.1165, 0.1809, 0.847, 0.0, 0.0258, 0.0741, 0.0222, 0.0, 0.0687},
    {1.0, 0.9281, 0.6832, 0.6941, 0.3578, 0.3218, 0.1852, 0.2903, 1.0, 0.5347},
    {1.0, 0.0932, 0.1809, 0.5832, 0.0317, 0.1807, 0.1684, 0.2007, 0.388, 0.103},
    {0.6398, 0.1165, 0.0881, 0.4723, 0.3126, 0.8658, 0.4344, 0.6473, 0.0647, 0.651},
    {0.6398, 0.8563, 0.1809, 0.847, 0.1315, 0.1807, 0.1684, 0.3351, 0.0, 0.4311},
    {0.4952, 0.0932, 1.0, 0.5832, 0.5473, 0.1549, 0.1516, 0.3351, 0.388, 0.4311},
    {0.4952, 0.0466, 0.0, 0.5832, 0.0816, 0.7315, 1.0, 0.7355, 0.0, 0.0172},
    {0.8199, 0.9641, 1.0, 1.0, 0.4237, 0.3218, 0.1852, 0.2903, 0.388, 0.103},
    {0.6398, 0.4929, 1.0, 0.4723, 0.3825, 0.1549, 0.0741, 0.2455, 0.1618, 0.2238},
    {0.206, 0.3674, 0.6832, 0.3614, 0.7284, 0.1549, 0.1111, 0.0556, 0.0647, 0.0515},
  };
  return t;
}

std::string data_file(const std::string& name) { return std::string(PAHP_DATA_DIR) + "/case_study/" + name; }

session::Project case_study_project() {
  session::Project p("social-housing");
  p.set_criteria(session::import_criteria(session::read_text_file(data_file("criteria.csv"))));
  p.set_ratings(session::import_performances(session::read_text_file(data_file("performances.csv")),
                                             p.criteria()));
  p.set_references(session::import_references(session::read_text_file(data_file("references.csv"))));
  for (const char* c : {"C3", "C5"}) {
    const auto judgments =
        session::import_judgments(session::read_text_file(data_file(std::string("matrix_") + c + ".csv")));
    p.set_matrix(c, judgments);
  }
  return p;
}

std::vector<PreferenceStatement> interaction_statements() {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"C7", "C10"}, {"C6", "C9"}, {"C3", "C5"}, {"C3", "C9"}, {"C7", "C9"},
      {"C3", "C7"},  {"C1", "C6"}, {"C3", "C4"}, {"C6", "C7"}};
  std::vector<PreferenceStatement> out;
  for (const auto& [a, b] : pairs) out.push_back({StatementKind::interaction_positive, {a, b}, ""});
  return out;
}

std::vector<PreferenceStatement> first_round_statements() {
  auto out = interaction_statements();
  chain(out, StatementKind::importance_strict, {"C8", "C7", "C6", "C9", "C10"});
  chain(out, StatementKind::importance_strict, {"C1", "C4", "C2", "C5", "C3"});
  return out;
}

std::vector<std::string> final_importance_chain() {
  return {"C8", "C1", "C7", "C6", "C4", "C2", "C9", "C5", "C10", "C3"};
}

std::vector<std::string> final_project_chain() { return {"P1", "P4", "P10", "P19", "P6", "P11"}; }

std::vector<PreferenceStatement> final_round_statements() {
  auto out = interaction_statements();
  chain(out, StatementKind::importance_strict, final_importance_chain());
  const auto top = final_project_chain();
  chain(out, StatementKind::strict_pref, top);
  for (const auto& id : alternative_ids()) {
    if (std::find(top.begin(), top.end(), id) != top.end()) continue;
    out.push_back({StatementKind::weak_pref, {"P11", id}, ""});
  }
  return out;
}

scale::NormalizedTable normalized_case_study() {
  report::ReportOptions o;
  o.solve = false;
  return report::build_report(case_study_project(), o).normalized;
}

}  // namespace pahp::testing
