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

#include "pahp/project.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pahp/csv.hpp"
#include "pahp/decimal.hpp"
#include "pahp/error.hpp"

namespace pahp::session {

namespace {

const std::set<std::string> kTopLevelFields{"schema_version", "id",         "version",
                                            "criteria",       "alternatives", "ratings",
                                            "references",     "matrices",   "statements",
                                            "rounds"};

scale::NormalizedTable id_table(const std::vector<scale::CriterionSpec>& criteria,
                                const std::vector<Alternative>& alternatives) {
  scale::NormalizedTable t;
  for (const auto& c : criteria) t.criteria.push_back(c.id);
  for (const auto& a : alternatives) t.alternatives.push_back(a.id);
  return t;
}

std::vector<std::string> criterion_ids(const std::vector<scale::CriterionSpec>& criteria) {
  std::vector<std::string> ids;
  for (const auto& c : criteria) ids.push_back(c.id);
  return ids;
}

// --- JSON helpers ---

const Json& member(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw DocumentError(field + " must be an object", field);
  auto it = j.find(key);
  if (it == j.end()) throw DocumentError("missing field " + field + "." + key, field + "." + key);
  return *it;
}

std::string get_string(const Json& j, const char* key, const std::string& field) {
  const auto& v = member(j, key, field);
  if (!v.is_string()) throw DocumentError(field + "." + key + " must be a string", field + "." + key);
  return v.get<std::string>();
}

std::string optional_string(const Json& j, const char* key) {
  auto it = j.find(key);
  return it != j.end() && it->is_string() ? it->get<std::string>() : std::string();
}

double as_decimal(const Json& v, const std::string& field) {
  // Decimal strings are the documented form; bare JSON numbers are tolerated.
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) throw DocumentError(field + " must be a decimal string", field);
  const auto d = parse_decimal(v.get<std::string>());
  if (!d) throw DocumentError(field + ": '" + v.get<std::string>() + "' is not a decimal", field);
  return *d;
}

double get_decimal(const Json& j, const char* key, const std::string& field) {
  return as_decimal(member(j, key, field), field + "." + key);
}

long get_integer(const Json& j, const char* key, const std::string& field) {
  const auto& v = member(j, key, field);
  if (!v.is_number_integer()) {
    throw DocumentError(field + "." + key + " must be an integer", field + "." + key);
  }
  return v.get<long>();
}

const Json& get_array(const Json& j, const char* key, const std::string& field) {
  const auto& v = member(j, key, field);
  if (!v.is_array()) throw DocumentError(field + "." + key + " must be an array", field + "." + key);
  return v;
}

Json decimals(std::span<const double> values) {
  Json a = Json::array();
  for (double v : values) a.push_back(format_decimal(v));
  return a;
}

std::vector<double> decimals_from(const Json& a, const std::string& field) {
  if (!a.is_array()) throw DocumentError(field + " must be an array", field);
  std::vector<double> out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    out.push_back(as_decimal(a[k], field + "[" + std::to_string(k) + "]"));
  }
  return out;
}

// --- CSV helpers ---

std::size_t column(const csv::Table& t, std::string_view name, bool required) {
  for (std::size_t k = 0; k < t.header.size(); ++k) {
    std::string h = t.header[k];
    h.erase(std::remove_if(h.begin(), h.end(), [](unsigned char c) { return std::isspace(c); }),
            h.end());
    if (h == name) return k;
  }
  if (required) throw ValidationError("missing column '" + std::string(name) + "'");
  return t.header.size();
}

std::string cell(const csv::Table& t, std::size_t row, std::size_t col) {
  if (col >= t.rows[row].size()) return {};
  std::string s = t.rows[row][col];
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double number_cell(const std::string& text, const std::string& where) {
  const auto v = parse_human_number(text);
  if (!v) throw ValidationError(where + ": '" + text + "' is not a number", where);
  return *v;
}

std::vector<double> number_list(const std::string& text, const std::string& where) {
  std::vector<double> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(number_cell(tok, where));
  return out;
}

bool parse_bool(std::string s, const std::string& where) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s.empty() || s == "false" || s == "0" || s == "no") return false;
  if (s == "true" || s == "1" || s == "yes") return true;
  throw ValidationError(where + ": '" + s + "' is not a boolean", where);
}

std::int64_t integer_cell(const std::string& text, const std::string& where) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ValidationError(where + ": '" + text + "' is not an integer", where);
  }
  return v;
}

}  // namespace

Project::Project(std::string id) : id_(std::move(id)) {}

const scale::CriterionSpec& Project::criterion(std::string_view id) const {
  for (const auto& c : criteria_) {
    if (c.id == id) return c;
  }
  throw ValidationError("unknown criterion '" + std::string(id) + "'", "criteria");
}

const ReferenceEntry* Project::find_references(std::string_view criterion) const {
  for (const auto& r : references_) {
    if (r.levels.criterion == criterion) return &r;
  }
  return nullptr;
}

const CriterionMatrix* Project::find_matrix(std::string_view criterion) const {
  for (const auto& m : matrices_) {
    if (m.criterion == criterion) return &m;
  }
  return nullptr;
}

void Project::validate_statement(const naror::PreferenceStatement& statement,
                                 std::size_t position) const {
  naror::validate(statement, id_table(criteria_, alternatives_), position);
}

void Project::set_criteria(std::vector<scale::CriterionSpec> criteria) {
  std::set<std::string> seen;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    try {
      scale::validate(criteria[k]);
    } catch (const ValidationError& e) {
      throw ValidationError(e.what(), "criteria[" + std::to_string(k) + "]");
    }
    if (!seen.insert(criteria[k].id).second) {
      throw ValidationError("duplicate criterion '" + criteria[k].id + "'",
                            "criteria[" + std::to_string(k) + "].id");
    }
  }
  const auto table = id_table(criteria, alternatives_);
  for (std::size_t k = 0; k < statements_.size(); ++k) {
    if (naror::about_criteria(statements_[k].kind)) naror::validate(statements_[k], table, k);
  }

  std::vector<ReferenceEntry> refs;
  std::vector<CriterionMatrix> mats;
  for (const auto& spec : criteria) {
    const auto* r = find_references(spec.id);
    if (!r) continue;
    try {
      scale::validate(r->levels, spec);
    } catch (const ValidationError&) {
      continue;
    }
    refs.push_back(*r);
    if (const auto* m = find_matrix(spec.id)) mats.push_back(*m);
  }
  if (criterion_ids(criteria) != ratings_.criteria) ratings_ = {};
  criteria_ = std::move(criteria);
  references_ = std::move(refs);
  matrices_ = std::move(mats);
  bump();
}

void Project::set_alternatives(std::vector<Alternative> alternatives) {
  std::set<std::string> seen;
  for (std::size_t k = 0; k < alternatives.size(); ++k) {
    if (alternatives[k].id.empty()) {
      throw ValidationError("alternative id must not be empty",
                            "alternatives[" + std::to_string(k) + "].id");
    }
    if (!seen.insert(alternatives[k].id).second) {
      throw ValidationError("duplicate alternative '" + alternatives[k].id + "'",
                            "alternatives[" + std::to_string(k) + "].id");
    }
  }
  const auto table = id_table(criteria_, alternatives);
  for (std::size_t k = 0; k < statements_.size(); ++k) {
    if (!naror::about_criteria(statements_[k].kind)) naror::validate(statements_[k], table, k);
  }
  std::vector<std::string> ids;
  for (const auto& a : alternatives) ids.push_back(a.id);
  if (ids != ratings_.alternatives) ratings_ = {};
  alternatives_ = std::move(alternatives);
  bump();
}

void Project::set_ratings(scale::RatingTable table) {
  const auto ids = criterion_ids(criteria_);
  if (table.criteria != ids) {
    throw ValidationError("rating columns must be the project criteria in declared order",
                          "ratings");
  }
  if (table.values.size() != table.rows() * table.cols()) {
    throw ValidationError("rating table shape does not match its labels", "ratings");
  }
  scale::validate(table, criteria_);
  std::vector<Alternative> alts = alternatives_;
  if (alts.empty()) {
    std::set<std::string> seen;
    for (const auto& a : table.alternatives) {
      if (!seen.insert(a).second) {
        throw ValidationError("duplicate alternative '" + a + "'", "ratings." + a);
      }
      alts.push_back({a, a});
    }
  } else {
    if (table.rows() != alts.size()) {
      throw ValidationError("ratings have " + std::to_string(table.rows()) + " rows for " +
                                std::to_string(alts.size()) + " alternatives",
                            "ratings");
    }
    scale::RatingTable ordered;
    ordered.criteria = table.criteria;
    for (const auto& a : alts) {
      const auto row = table.alternative_index(a.id);
      ordered.alternatives.push_back(a.id);
      const auto r = table.row(row);
      ordered.values.insert(ordered.values.end(), r.begin(), r.end());
    }
    table = std::move(ordered);
  }
  alternatives_ = std::move(alts);
  ratings_ = std::move(table);
  bump();
}

void Project::set_references(ReferenceEntry entry) {
  std::vector<ReferenceEntry> all = references_;
  auto it = std::find_if(all.begin(), all.end(), [&](const ReferenceEntry& r) {
    return r.levels.criterion == entry.levels.criterion;
  });
  if (it != all.end()) {
    *it = std::move(entry);
  } else {
    all.push_back(std::move(entry));
  }
  set_references(std::move(all));
}

void Project::set_references(std::vector<ReferenceEntry> entries) {
  std::set<std::string> seen;
  for (const auto& e : entries) {
    const std::string field = "references." + e.levels.criterion;
    const auto& spec = criterion(e.levels.criterion);
    if (!seen.insert(spec.id).second) {
      throw ValidationError("duplicate references for " + spec.id, field);
    }
    try {
      scale::validate(e.levels, spec);
      if (e.values) scale::scale_from_values(e.levels, *e.values);
    } catch (const ValidationError& err) {
      throw ValidationError(err.what(), field);
    }
  }
  // Declared criterion order keeps documents stable.
  std::vector<ReferenceEntry> ordered;
  std::vector<CriterionMatrix> mats;
  for (const auto& spec : criteria_) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const ReferenceEntry& r) { return r.levels.criterion == spec.id; });
    if (it == entries.end()) continue;
    const auto* old = find_references(spec.id);
    const auto* m = find_matrix(spec.id);
    if (m && old && old->levels.levels == it->levels.levels) mats.push_back(*m);
    ordered.push_back(std::move(*it));
  }
  references_ = std::move(ordered);
  matrices_ = std::move(mats);
  bump();
}

ahp::ConsistencyReport Project::set_matrix(std::string criterion_id,
                                           std::span<const ahp::Comparison> judgments,
                                           const ahp::RandomIndexSource& ri) {
  const std::string field = "matrices." + criterion_id;
  criterion(criterion_id);
  const auto* refs = find_references(criterion_id);
  if (!refs) {
    throw ValidationError("criterion " + criterion_id + " has no reference levels", field);
  }
  std::set<std::string> labels;
  for (double level : refs->levels.levels) labels.insert(scale::level_label(level));
  auto items = matrix_items(judgments);
  const std::set<std::string> item_set(items.begin(), items.end());
  if (item_set != labels) {
    throw ValidationError("matrix items for " + criterion_id +
                              " must be exactly its reference levels",
                          field);
  }
  ahp::PairwiseMatrix matrix;
  ahp::ConsistencyReport report;
  try {
    matrix = ahp::PairwiseMatrix::build(std::move(items), judgments);
    report = ahp::consistency(matrix, ri);
  } catch (const ValidationError& e) {
    throw ValidationError(e.what(), field);
  }
  auto it = std::find_if(matrices_.begin(), matrices_.end(),
                         [&](const CriterionMatrix& m) { return m.criterion == criterion_id; });
  if (it != matrices_.end()) {
    it->matrix = std::move(matrix);
  } else {
    matrices_.push_back({criterion_id, std::move(matrix)});
    // Declared criterion order.
    std::vector<CriterionMatrix> ordered;
    for (const auto& spec : criteria_) {
      if (const auto* m = find_matrix(spec.id)) ordered.push_back(*m);
    }
    matrices_ = std::move(ordered);
  }
  bump();
  return report;
}

void Project::add_statement(naror::PreferenceStatement statement) {
  validate_statement(statement, statements_.size());
  statements_.push_back(std::move(statement));
  bump();
}

void Project::remove_statement(std::size_t index) {
  if (index >= statements_.size()) {
    throw ValidationError("no statement at index " + std::to_string(index),
                          "statements[" + std::to_string(index) + "]");
  }
  statements_.erase(statements_.begin() + static_cast<long>(index));
  bump();
}

void Project::set_statements(std::vector<naror::PreferenceStatement> statements) {
  for (std::size_t k = 0; k < statements.size(); ++k) validate_statement(statements[k], k);
  statements_ = std::move(statements);
  bump();
}

void Project::append_round(Round round) {
  round.index = static_cast<int>(rounds_.size()) + 1;
  rounds_.push_back(std::move(round));
  bump();
}

std::vector<std::string> matrix_items(std::span<const ahp::Comparison> judgments) {
  std::vector<std::string> order;
  std::map<std::string, int> as_row;
  auto note = [&](const std::string& item) {
    if (std::find(order.begin(), order.end(), item) == order.end()) order.push_back(item);
    as_row.try_emplace(item, 0);
  };
  for (const auto& j : judgments) {
    note(j.row_item);
    note(j.col_item);
    ++as_row[j.row_item];
  }
  std::stable_sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    return as_row[a] > as_row[b];
  });
  return order;
}

// --- documents ---

Json statement_to_json(const naror::PreferenceStatement& s) {
  Json j;
  j["kind"] = std::string(naror::to_string(s.kind));
  j["items"] = s.items;
  j["label"] = s.label;
  return j;
}

naror::PreferenceStatement statement_from_json(const Json& j, const std::string& field) {
  naror::PreferenceStatement s;
  try {
    s.kind = naror::parse_statement_kind(get_string(j, "kind", field));
  } catch (const ValidationError& e) {
    throw ValidationError(e.what(), field + ".kind");
  }
  const auto& items = get_array(j, "items", field);
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (!items[k].is_string()) {
      throw DocumentError(field + ".items must hold strings", field + ".items[" + std::to_string(k) + "]");
    }
    s.items.push_back(items[k].get<std::string>());
  }
  s.label = optional_string(j, "label");
  return s;
}

Json references_to_json(const std::vector<ReferenceEntry>& entries) {
  Json a = Json::array();
  for (const auto& r : entries) {
    Json e;
    e["criterion"] = r.levels.criterion;
    e["levels"] = decimals(r.levels.levels);
    if (r.values) e["values"] = decimals(*r.values);
    a.push_back(std::move(e));
  }
  return a;
}

std::vector<ReferenceEntry> references_from_json(const Json& j) {
  if (!j.is_array()) throw DocumentError("references must be an array", "references");
  std::vector<ReferenceEntry> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string field = "references[" + std::to_string(k) + "]";
    ReferenceEntry e;
    e.levels.criterion = get_string(j[k], "criterion", field);
    e.levels.levels = decimals_from(member(j[k], "levels", field), field + ".levels");
    if (auto it = j[k].find("values"); it != j[k].end() && !it->is_null()) {
      e.values = decimals_from(*it, field + ".values");
    }
    out.push_back(std::move(e));
  }
  return out;
}

Json judgments_to_json(std::span<const ahp::Comparison> judgments) {
  Json a = Json::array();
  for (const auto& c : judgments) {
    Json e;
    e["row_item"] = c.row_item;
    e["col_item"] = c.col_item;
    e["numerator"] = c.value.numerator();
    e["denominator"] = c.value.denominator();
    a.push_back(std::move(e));
  }
  return a;
}

std::vector<ahp::Comparison> judgments_from_json(const Json& j) {
  if (!j.is_array()) throw DocumentError("judgments must be an array", "judgments");
  std::vector<ahp::Comparison> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string field = "judgments[" + std::to_string(k) + "]";
    ahp::Comparison c;
    c.row_item = get_string(j[k], "row_item", field);
    c.col_item = get_string(j[k], "col_item", field);
    try {
      c.value = ahp::Ratio(get_integer(j[k], "numerator", field),
                           get_integer(j[k], "denominator", field));
    } catch (const ValidationError& e) {
      throw ValidationError(e.what(), field);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Json ratings_to_json(const scale::RatingTable& table) {
  Json a = Json::array();
  for (std::size_t r = 0; r < table.rows(); ++r) {
    Json values = Json::object();
    for (std::size_t c = 0; c < table.cols(); ++c) {
      values[table.criteria[c]] = format_decimal(table.at(r, c));
    }
    Json row;
    row["alternative"] = table.alternatives[r];
    row["values"] = std::move(values);
    a.push_back(std::move(row));
  }
  return a;
}

scale::RatingTable ratings_from_json(const Json& j,
                                     const std::vector<scale::CriterionSpec>& criteria) {
  if (!j.is_array()) throw DocumentError("ratings must be an array", "ratings");
  scale::RatingTable t;
  t.criteria = criterion_ids(criteria);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string field = "ratings[" + std::to_string(k) + "]";
    const auto id = get_string(j[k], "alternative", field);
    const auto& values = member(j[k], "values", field);
    if (!values.is_object()) throw DocumentError(field + ".values must be an object", field + ".values");
    t.alternatives.push_back(id);
    for (const auto& c : criteria) {
      const std::string where = "ratings." + id + "." + c.id;
      auto it = values.find(c.id);
      if (it == values.end()) throw DocumentError("missing rating " + where, where);
      t.values.push_back(as_decimal(*it, where));
    }
    for (const auto& [key, _] : values.items()) {
      if (std::find(t.criteria.begin(), t.criteria.end(), key) == t.criteria.end()) {
        throw ValidationError("unknown criterion '" + key + "' in ratings of " + id,
                              "ratings." + id + "." + key);
      }
    }
  }
  return t;
}

std::vector<scale::CriterionSpec> criteria_from_json(const Json& j) {
  if (!j.is_array()) throw DocumentError("criteria must be an array", "criteria");
  std::vector<scale::CriterionSpec> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string field = "criteria[" + std::to_string(k) + "]";
    scale::CriterionSpec c;
    c.id = get_string(j[k], "id", field);
    c.name = optional_string(j[k], "name");
    try {
      c.direction = scale::parse_direction(get_string(j[k], "direction", field));
    } catch (const ValidationError& e) {
      throw ValidationError(e.what(), field + ".direction");
    }
    c.scale_min = get_decimal(j[k], "scale_min", field);
    c.scale_max = get_decimal(j[k], "scale_max", field);
    if (auto it = j[k].find("objective"); it != j[k].end()) {
      if (!it->is_boolean()) throw DocumentError(field + ".objective must be a boolean", field + ".objective");
      c.objective = it->get<bool>();
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Alternative> alternatives_from_json(const Json& j) {
  if (!j.is_array()) throw DocumentError("alternatives must be an array", "alternatives");
  std::vector<Alternative> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string field = "alternatives[" + std::to_string(k) + "]";
    Alternative a;
    a.id = get_string(j[k], "id", field);
    a.name = optional_string(j[k], "name");
    out.push_back(std::move(a));
  }
  return out;
}

Json to_json(const Project& p) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["id"] = p.id();
  doc["version"] = p.version();

  Json criteria = Json::array();
  for (const auto& c : p.criteria()) {
    Json e;
    e["id"] = c.id;
    e["name"] = c.name;
    e["direction"] = std::string(scale::to_string(c.direction));
    e["scale_min"] = format_decimal(c.scale_min);
    e["scale_max"] = format_decimal(c.scale_max);
    e["objective"] = c.objective;
    criteria.push_back(std::move(e));
  }
  doc["criteria"] = std::move(criteria);

  Json alternatives = Json::array();
  for (const auto& a : p.alternatives()) alternatives.push_back({{"id", a.id}, {"name", a.name}});
  doc["alternatives"] = std::move(alternatives);

  doc["ratings"] = ratings_to_json(p.ratings());
  doc["references"] = references_to_json(p.references());

  Json matrices = Json::array();
  for (const auto& m : p.matrices()) {
    Json e;
    e["criterion"] = m.criterion;
    e["judgments"] = judgments_to_json(m.matrix.upper_triangle());
    matrices.push_back(std::move(e));
  }
  doc["matrices"] = std::move(matrices);

  Json statements = Json::array();
  for (const auto& s : p.statements()) statements.push_back(statement_to_json(s));
  doc["statements"] = std::move(statements);

  Json rounds = Json::array();
  for (const auto& r : p.rounds()) {
    Json e;
    e["index"] = r.index;
    e["timestamp"] = r.timestamp;
    e["version"] = r.version;
    Json st = Json::array();
    for (const auto& s : r.statements) st.push_back(statement_to_json(s));
    e["statements"] = std::move(st);
    e["compatible"] = r.compatible;
    e["epsilon_star"] = format_decimal(r.epsilon_star);
    e["shapley"] = decimals(r.shapley);
    Json ranking = Json::array();
    for (const auto& ra : r.ranking) {
      ranking.push_back(
          {{"alternative", ra.id}, {"value", format_decimal(ra.value)}, {"rank", ra.rank}});
    }
    e["ranking"] = std::move(ranking);
    rounds.push_back(std::move(e));
  }
  doc["rounds"] = std::move(rounds);
  return doc;
}

Project from_json(const Json& doc) {
  if (!doc.is_object()) throw DocumentError("project document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (!kTopLevelFields.count(key)) throw DocumentError("unknown top-level field '" + key + "'", key);
  }
  const auto& sv = member(doc, "schema_version", "document");
  if (!sv.is_number_integer() || sv.get<long>() != kSchemaVersion) {
    throw DocumentError("unsupported schema_version " + sv.dump() + " (expected " +
                            std::to_string(kSchemaVersion) + ")",
                        "schema_version");
  }
  Project p(get_string(doc, "id", "document"));
  auto section = [&](const char* key) -> Json {
    auto it = doc.find(key);
    return it == doc.end() ? Json::array() : *it;
  };
  const auto criteria = criteria_from_json(section("criteria"));
  p.set_criteria(criteria);
  p.set_alternatives(alternatives_from_json(section("alternatives")));
  const auto ratings = section("ratings");
  if (!ratings.empty()) p.set_ratings(ratings_from_json(ratings, criteria));
  p.set_references(references_from_json(section("references")));

  const auto matrices = section("matrices");
  if (!matrices.is_array()) throw DocumentError("matrices must be an array", "matrices");
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const std::string field = "matrices[" + std::to_string(k) + "]";
    const auto judgments = judgments_from_json(member(matrices[k], "judgments", field));
    p.set_matrix(get_string(matrices[k], "criterion", field), judgments);
  }

  const auto statements = section("statements");
  if (!statements.is_array()) throw DocumentError("statements must be an array", "statements");
  std::vector<naror::PreferenceStatement> parsed;
  for (std::size_t k = 0; k < statements.size(); ++k) {
    parsed.push_back(statement_from_json(statements[k], "statements[" + std::to_string(k) + "]"));
  }
  p.set_statements(std::move(parsed));

  const auto rounds = section("rounds");
  if (!rounds.is_array()) throw DocumentError("rounds must be an array", "rounds");
  for (std::size_t k = 0; k < rounds.size(); ++k) {
    const std::string field = "rounds[" + std::to_string(k) + "]";
    const auto& r = rounds[k];
    Round round;
    round.index = static_cast<int>(get_integer(r, "index", field));
    round.timestamp = optional_string(r, "timestamp");
    round.version = get_integer(r, "version", field);
    const auto& st = get_array(r, "statements", field);
    for (std::size_t s = 0; s < st.size(); ++s) {
      round.statements.push_back(
          statement_from_json(st[s], field + ".statements[" + std::to_string(s) + "]"));
    }
    const auto& compatible = member(r, "compatible", field);
    if (!compatible.is_boolean()) throw DocumentError(field + ".compatible must be a boolean", field);
    round.compatible = compatible.get<bool>();
    round.epsilon_star = get_decimal(r, "epsilon_star", field);
    round.shapley = decimals_from(member(r, "shapley", field), field + ".shapley");
    const auto& ranking = get_array(r, "ranking", field);
    for (std::size_t s = 0; s < ranking.size(); ++s) {
      const std::string rf = field + ".ranking[" + std::to_string(s) + "]";
      round.ranking.push_back({get_string(ranking[s], "alternative", rf),
                               get_decimal(ranking[s], "value", rf),
                               static_cast<int>(get_integer(ranking[s], "rank", rf))});
    }
    p.rounds_.push_back(std::move(round));
  }
  p.version_ = get_integer(doc, "version", "document");
  return p;
}

std::string save(const Project& project) { return to_json(project).dump(2) + "\n"; }

Project load(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(doc);
}

void save_file(const Project& project, const std::string& path) {
  write_text_file(path, save(project));
}

Project load_file(const std::string& path) { return load(read_text_file(path)); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  // Write-then-rename so readers never see a half-written document.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DocumentError("cannot write " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw DocumentError("cannot write " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw DocumentError("cannot replace " + path);
  }
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// --- ingestion ---

scale::RatingTable import_performances(std::string_view text,
                                       std::span<const scale::CriterionSpec> criteria) {
  const auto t = csv::parse(text);
  scale::RatingTable table;
  for (const auto& c : criteria) table.criteria.push_back(c.id);
  if (t.header.empty()) return table;

  // Map header columns onto declared criteria.
  std::vector<std::size_t> source(criteria.size(), t.header.size());
  for (std::size_t k = 1; k < t.header.size(); ++k) {
    std::string h = t.header[k];
    h.erase(std::remove_if(h.begin(), h.end(), [](unsigned char c) { return std::isspace(c); }),
            h.end());
    auto it = std::find(table.criteria.begin(), table.criteria.end(), h);
    if (it == table.criteria.end()) {
      throw ValidationError("unknown criterion column '" + h + "'", "header[" + std::to_string(k) + "]");
    }
    auto& slot = source[static_cast<std::size_t>(it - table.criteria.begin())];
    if (slot != t.header.size()) throw ValidationError("duplicate criterion column '" + h + "'");
    slot = k;
  }
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    if (source[c] == t.header.size()) {
      throw ValidationError("missing criterion column '" + criteria[c].id + "'", "header");
    }
  }

  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto id = cell(t, r, 0);
    if (id.empty()) throw ValidationError("row " + std::to_string(r + 2) + " has no alternative id");
    table.alternatives.push_back(id);
    for (std::size_t c = 0; c < criteria.size(); ++c) {
      const auto where = "row " + std::to_string(r + 2) + " (" + id + "), column " + criteria[c].id;
      const auto text_cell = cell(t, r, source[c]);
      const auto v = parse_human_number(text_cell);
      if (!v) {
        throw ValidationError(where + ": '" + text_cell + "' is not a number",
                              "ratings." + id + "." + criteria[c].id);
      }
      table.values.push_back(*v);
    }
  }
  scale::validate(table, criteria);
  return table;
}

std::vector<scale::CriterionSpec> import_criteria(std::string_view text) {
  const auto t = csv::parse(text);
  const auto c_id = column(t, "id", true);
  const auto c_name = column(t, "name", false);
  const auto c_dir = column(t, "direction", true);
  const auto c_min = column(t, "scale_min", true);
  const auto c_max = column(t, "scale_max", true);
  const auto c_obj = column(t, "objective", false);
  std::vector<scale::CriterionSpec> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto where = "criteria row " + std::to_string(r + 2);
    scale::CriterionSpec c;
    c.id = cell(t, r, c_id);
    c.name = cell(t, r, c_name);
    c.direction = scale::parse_direction(cell(t, r, c_dir));
    c.scale_min = number_cell(cell(t, r, c_min), where + " scale_min");
    c.scale_max = number_cell(cell(t, r, c_max), where + " scale_max");
    c.objective = parse_bool(cell(t, r, c_obj), where + " objective");
    scale::validate(c);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ahp::Comparison> import_judgments(std::string_view text) {
  const auto t = csv::parse(text);
  const auto c_row = column(t, "row_item", true);
  const auto c_col = column(t, "col_item", true);
  const auto c_num = column(t, "numerator", true);
  const auto c_den = column(t, "denominator", true);
  std::vector<ahp::Comparison> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto where = "judgment row " + std::to_string(r + 2);
    ahp::Comparison c;
    c.row_item = cell(t, r, c_row);
    c.col_item = cell(t, r, c_col);
    try {
      c.value = ahp::Ratio(integer_cell(cell(t, r, c_num), where + " numerator"),
                           integer_cell(cell(t, r, c_den), where + " denominator"));
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what(), e.field());
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ReferenceEntry> import_references(std::string_view text) {
  const auto t = csv::parse(text);
  const auto c_crit = column(t, "criterion", true);
  const auto c_levels = column(t, "levels", true);
  const auto c_values = column(t, "values", false);
  std::vector<ReferenceEntry> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    ReferenceEntry e;
    e.levels.criterion = cell(t, r, c_crit);
    const auto where = "references." + e.levels.criterion;
    e.levels.levels = number_list(cell(t, r, c_levels), where + ".levels");
    auto values = number_list(cell(t, r, c_values), where + ".values");
    if (!values.empty()) e.values = std::move(values);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace pahp::session
