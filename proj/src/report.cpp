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

#include "pahp/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pahp/decimal.hpp"
#include "pahp/error.hpp"

namespace pahp::report {

namespace {

template <typename F>
auto in_stage(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(stage, e.what());
  }
}

std::string dec(double v) { return format_decimal(v); }

Json decimals(std::span<const double> values) {
  Json a = Json::array();
  for (double v : values) a.push_back(dec(v));
  return a;
}

bool numeric(const std::string& s) {
  return !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) ||
                        ((s[0] == '-' || s[0] == '+') && s.size() > 1));
}

}  // namespace

ReportBundle build_report(const session::Project& project, const ReportOptions& options) {
  ReportBundle b;
  b.project_id = project.id();
  b.project_version = project.version();

  in_stage("ahp", [&] {
    for (const auto& m : project.matrices()) {
      b.consistency.push_back({m.criterion, ahp::consistency(m.matrix, options.random_index)});
    }
  });

  in_stage("scale", [&] {
    std::vector<int> ref_counts;
    int subjective = 0;
    for (const auto& spec : project.criteria()) {
      if (!spec.objective) ++subjective;
      const auto* refs = project.find_references(spec.id);
      if (!refs) throw ValidationError("criterion " + spec.id + " has no reference levels");
      ref_counts.push_back(static_cast<int>(refs->levels.levels.size()));
      if (const auto* m = project.find_matrix(spec.id)) {
        b.scales.push_back(scale::scale_from_matrix(refs->levels, m->matrix));
      } else if (refs->values) {
        b.scales.push_back(scale::scale_from_values(refs->levels, *refs->values));
      } else {
        throw ValidationError("criterion " + spec.id +
                              " has no pairwise matrix and no reference values");
      }
      const auto w = scale::monotonicity_check(b.scales.back(), spec.direction);
      b.warnings.insert(b.warnings.end(), w.begin(), w.end());
    }
    const auto& ratings = project.ratings();
    if (ratings.rows() != project.alternatives().size()) {
      throw ValidationError("ratings are missing for some alternatives");
    }
    scale::RatingTable table = ratings;
    if (table.criteria.empty()) {
      for (const auto& spec : project.criteria()) table.criteria.push_back(spec.id);
    }
    b.normalized = scale::normalize_table(table, b.scales);
    b.budget = scale::comparison_budget(subjective, static_cast<int>(project.alternatives().size()),
                                        ref_counts);
  });

  b.statements = options.statements ? *options.statements : project.statements();
  if (!options.solve) return b;

  in_stage("naror", [&] {
    auto& n = b.naror;
    n.computed = true;
    if (b.normalized.cols() == 0 || b.normalized.rows() == 0) {
      // Nothing to order and nothing to weigh: only statements could
      // constrain epsilon, and they need alternatives or criteria to exist.
      if (!b.statements.empty()) {
        throw ValidationError("statements need criteria and alternatives to refer to");
      }
      n.compatible = true;
      n.epsilon_star = 1.0;
      n.stage1_epsilon = 1.0;
      n.relations.alternatives = b.normalized.alternatives;
      return;
    }
    naror::SolveOptions so;
    so.jobs = options.jobs;
    const auto out = naror::solve(b.statements, b.normalized, so);
    n.compatible = out.has_compatible_model;
    n.epsilon_star = out.epsilon_star;
    n.conflict = out.conflict;
    if (!n.compatible) return;
    n.stage1_epsilon = out.stage1_epsilon;
    n.stage2_delta = out.stage2_delta;
    n.capacity = out.representative;
    n.shapley = out.shapley;
    n.ranking = out.ranking;
    n.relations = out.relations;
  });
  return b;
}

Json consistency_to_json(const ahp::ConsistencyReport& r) {
  Json j;
  j["lambda_max"] = dec(r.lambda_max);
  j["ci"] = dec(r.ci);
  j["ri"] = dec(r.ri);
  j["cr"] = r.degenerate ? Json("inf") : Json(dec(r.cr));
  j["acceptable"] = r.acceptable;
  return j;
}

Json capacity_to_json(const choquet::MoebiusCapacity& m, const std::vector<std::string>& criteria) {
  Json a = Json::array();
  if (m.size() == 0) return a;
  const auto s = m.singleton_masses();
  const auto p = m.pair_masses();
  for (std::size_t i = 0; i < m.size(); ++i) {
    a.push_back({{"subset", Json::array({criteria[i]})}, {"moebius", dec(s[i])}});
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      a.push_back({{"subset", Json::array({criteria[i], criteria[j]})},
                   {"moebius", dec(p[choquet::pair_index(i, j, m.size())])}});
    }
  }
  return a;
}

Json relations_to_json(const naror::RelationMatrices& r) {
  Json j;
  j["alternatives"] = r.alternatives;
  Json nec = Json::array();
  Json pos = Json::array();
  for (std::size_t a = 0; a < r.size(); ++a) {
    Json nr = Json::array();
    Json pr = Json::array();
    for (std::size_t b = 0; b < r.size(); ++b) {
      nr.push_back(r.nec(a, b) ? 1 : 0);
      pr.push_back(r.pos(a, b) ? 1 : 0);
    }
    nec.push_back(std::move(nr));
    pos.push_back(std::move(pr));
  }
  j["necessary"] = std::move(nec);
  j["possible"] = std::move(pos);
  return j;
}

Json to_json(const ReportBundle& b) {
  Json j;
  j["project"] = b.project_id;
  j["version"] = b.project_version;

  Json consistency = Json::array();
  for (const auto& c : b.consistency) {
    Json e;
    e["criterion"] = c.criterion;
    const Json r = consistency_to_json(c.report);
    for (const auto& [k, v] : r.items()) e[k] = v;
    consistency.push_back(std::move(e));
  }
  j["consistency"] = std::move(consistency);

  Json scales = Json::array();
  for (const auto& s : b.scales) {
    scales.push_back(
        {{"criterion", s.criterion}, {"levels", decimals(s.levels)}, {"values", decimals(s.values)}});
  }
  j["scales"] = std::move(scales);

  Json rows = Json::array();
  for (std::size_t a = 0; a < b.normalized.rows(); ++a) {
    rows.push_back({{"alternative", b.normalized.alternatives[a]},
                    {"values", decimals(b.normalized.row(a))}});
  }
  j["normalized"] = {{"criteria", b.normalized.criteria}, {"rows", std::move(rows)}};

  Json warnings = Json::array();
  for (const auto& w : b.warnings) warnings.push_back(w.message);
  j["warnings"] = std::move(warnings);
  j["budget"] = {{"full_ahp", b.budget.full_ahp}, {"parsimonious", b.budget.parsimonious}};

  Json statements = Json::array();
  for (const auto& s : b.statements) statements.push_back(session::statement_to_json(s));
  j["statements"] = std::move(statements);

  const auto& n = b.naror;
  Json nj;
  nj["computed"] = n.computed;
  if (n.computed) {
    nj["compatible"] = n.compatible;
    nj["epsilon_star"] = dec(n.epsilon_star);
    if (n.compatible) {
      nj["stage1_epsilon"] = dec(n.stage1_epsilon);
      nj["stage2_delta"] = dec(n.stage2_delta);
      nj["capacity"] = capacity_to_json(n.capacity, b.normalized.criteria);
      Json shapley = Json::array();
      for (std::size_t i = 0; i < n.shapley.size(); ++i) {
        shapley.push_back({{"criterion", b.normalized.criteria[i]}, {"value", dec(n.shapley[i])}});
      }
      nj["shapley"] = std::move(shapley);
      Json ranking = Json::array();
      for (const auto& r : n.ranking) {
        ranking.push_back({{"alternative", r.id}, {"value", dec(r.value)}, {"rank", r.rank}});
      }
      nj["ranking"] = std::move(ranking);
      nj["relations"] = relations_to_json(n.relations);
    } else {
      Json conflict = Json::array();
      for (auto k : n.conflict) {
        conflict.push_back({{"index", k}, {"statement", naror::describe(b.statements[k])}});
      }
      nj["conflict"] = std::move(conflict);
    }
  }
  j["naror"] = std::move(nj);
  return j;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (r.size() > width.size()) width.resize(r.size(), 0);
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& r = rows[k];
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      const auto pad = std::string(width[c] - r[c].size(), ' ');
      if (c > 0) line += "  ";
      line += (k > 0 && numeric(r[c])) ? pad + r[c] : r[c] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string to_text(const ReportBundle& b) {
  std::ostringstream os;
  os << "Project " << b.project_id << " (version " << b.project_version << ")\n";

  if (!b.consistency.empty()) {
    os << "\nConsistency\n";
    std::vector<std::vector<std::string>> t{{"criterion", "lambda_max", "CI", "RI", "CR", "acceptable"}};
    for (const auto& c : b.consistency) {
      t.push_back({c.criterion, format_fixed(c.report.lambda_max, 5), format_fixed(c.report.ci, 5),
                   format_fixed(c.report.ri, 2),
                   c.report.degenerate ? "inf" : format_fixed(c.report.cr, 4),
                   c.report.acceptable ? "yes" : "no"});
    }
    os << render_table(t);
  }

  if (!b.scales.empty()) {
    os << "\nNormalized reference values\n";
    std::vector<std::vector<std::string>> t{{"criterion", "level", "value"}};
    for (const auto& s : b.scales) {
      for (std::size_t k = 0; k < s.levels.size(); ++k) {
        t.push_back({k == 0 ? s.criterion : "", format_decimal(s.levels[k]),
                     format_fixed(s.values[k], 4)});
      }
    }
    os << render_table(t);
  }

  if (b.normalized.rows() > 0) {
    os << "\nNormalized evaluations\n";
    std::vector<std::vector<std::string>> t;
    std::vector<std::string> header{"alternative"};
    header.insert(header.end(), b.normalized.criteria.begin(), b.normalized.criteria.end());
    t.push_back(std::move(header));
    for (std::size_t a = 0; a < b.normalized.rows(); ++a) {
      std::vector<std::string> r{b.normalized.alternatives[a]};
      for (double v : b.normalized.row(a)) r.push_back(format_fixed(v, 4));
      t.push_back(std::move(r));
    }
    os << render_table(t);
  }

  if (!b.warnings.empty()) {
    os << "\nWarnings\n";
    for (const auto& w : b.warnings) os << "  " << w.message << '\n';
  }

  os << "\nComparison budget\n"
     << render_table({{"method", "comparisons"},
                      {"full AHP", std::to_string(b.budget.full_ahp)},
                      {"parsimonious", std::to_string(b.budget.parsimonious)}});

  const auto& n = b.naror;
  if (n.computed) {
    os << "\nOrdinal regression\n";
    os << "  epsilon*: " << format_fixed(n.epsilon_star, 6) << '\n';
    os << "  compatible: " << (n.compatible ? "yes" : "no") << '\n';
    if (!n.compatible) {
      os << "  conflicting statements:\n";
      for (auto k : n.conflict) os << "    [" << k << "] " << naror::describe(b.statements[k]) << '\n';
    } else {
      os << "  representative: stage-1 epsilon " << format_fixed(n.stage1_epsilon, 6)
         << ", stage-2 delta " << format_fixed(n.stage2_delta, 6) << '\n';
      if (!n.shapley.empty()) {
        os << "\nShapley values\n";
        std::vector<std::size_t> order(n.shapley.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](auto x, auto y) { return n.shapley[x] > n.shapley[y]; });
        std::vector<std::vector<std::string>> t{{"criterion", "shapley"}};
        for (auto i : order) t.push_back({b.normalized.criteria[i], format_fixed(n.shapley[i], 4)});
        os << render_table(t);
      }
      if (!n.ranking.empty()) {
        os << "\nRanking\n";
        std::vector<std::vector<std::string>> t{{"rank", "alternative", "choquet"}};
        for (const auto& r : n.ranking) {
          t.push_back({std::to_string(r.rank), r.id, format_fixed(r.value, 4)});
        }
        os << render_table(t);
      }
    }
  }
  return os.str();
}

session::Round make_round(const ReportBundle& b) {
  session::Round r;
  r.timestamp = session::utc_timestamp();
  r.version = b.project_version;
  r.statements = b.statements;
  r.compatible = b.naror.compatible;
  r.epsilon_star = b.naror.epsilon_star;
  r.shapley = b.naror.shapley;
  r.ranking = b.naror.ranking;
  return r;
}

}  // namespace pahp::report
