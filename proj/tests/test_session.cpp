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

#include <regex>
#include <string>
#include <vector>

#include "doctest.h"
#include "pahp/error.hpp"
#include "pahp/project.hpp"
#include "pahp/report.hpp"
#include "support/case_study.hpp"

using namespace pahp;
using namespace pahp::session;
namespace cs = pahp::testing;
using Kind = naror::StatementKind;

namespace {

scale::CriterionSpec spec(std::string id, double lo = 0.0, double hi = 10.0) {
  scale::CriterionSpec s;
  s.id = id;
  s.name = "criterion " + id;
  s.scale_min = lo;
  s.scale_max = hi;
  return s;
}

// Two criteria with direct reference values, three alternatives.
Project small_project() {
  Project p("small");
  p.set_criteria({spec("g1"), spec("g2")});
  scale::RatingTable t;
  t.alternatives = {"a", "b", "c"};
  t.criteria = {"g1", "g2"};
  t.values = {10, 0, 0, 10, 5, 5};
  p.set_ratings(t);
  p.set_references(std::vector<ReferenceEntry>{
      {{"g1", {0, 5, 10}}, std::vector<double>{0, 0.5, 1}},
      {{"g2", {0, 5, 10}}, std::vector<double>{0, 0.3, 1}}});
  return p;
}

}  // namespace

TEST_CASE("case-study project survives a save/load round trip") {
  auto p = cs::case_study_project();
  for (const auto& st : cs::first_round_statements()) p.add_statement(st);
  Round r;
  r.timestamp = "2026-01-02T03:04:05Z";
  r.version = p.version();
  r.statements = p.statements();
  r.compatible = true;
  r.epsilon_star = 1.0 / 65.0;
  r.shapley = {0.1, 0.2};
  r.ranking = {{"P1", 0.6699, 1}, {"P4", 0.6546, 2}};
  p.append_round(r);

  const std::string text = save(p);
  const auto back = load(text);
  CHECK(back == p);
  CHECK(save(back) == text);
  CHECK(back.version() == p.version());
  CHECK(back.rounds().at(0).epsilon_star == r.epsilon_star);
}

TEST_CASE("empty project round trip") {
  const Project p("empty");
  const auto back = load(save(p));
  CHECK(back == p);
  CHECK(back.id() == "empty");
  CHECK(back.version() == 0);
  CHECK(to_json(p)["schema_version"] == kSchemaVersion);
}

TEST_CASE("documents are checked strictly") {
  auto doc = to_json(small_project());
  SUBCASE("unknown top-level field") {
    doc["notes"] = "hello";
    CHECK_THROWS_AS(from_json(doc), DocumentError);
  }
  SUBCASE("future schema version") {
    doc["schema_version"] = kSchemaVersion + 1;
    CHECK_THROWS_AS(from_json(doc), DocumentError);
  }
  SUBCASE("missing schema version") {
    doc.erase("schema_version");
    CHECK_THROWS_AS(from_json(doc), DocumentError);
  }
  SUBCASE("syntax error") { CHECK_THROWS_AS(load("{\"id\": "), DocumentError); }
  SUBCASE("rating outside the scale") {
    doc["ratings"][0]["values"]["g1"] = "11";
    CHECK_THROWS_AS(from_json(doc), ValidationError);
  }
}

TEST_CASE("mutators bump the version and leave the project alone on failure") {
  auto p = small_project();
  const long v = p.version();
  p.add_statement({Kind::strict_pref, {"a", "b"}, "first"});
  CHECK(p.version() == v + 1);

  const auto before = p;
  try {
    p.add_statement({Kind::strict_pref, {"a", "zz"}, ""});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "statements[1].items[1]");
  }
  CHECK(p == before);
  CHECK_THROWS_AS(p.remove_statement(5), ValidationError);
  CHECK(p == before);
  CHECK_THROWS_AS(p.set_matrix("g1", std::vector<ahp::Comparison>{{"0", "7", ahp::Ratio(3, 1)}}),
                  ValidationError);
  CHECK(p == before);

  p.remove_statement(0);
  CHECK(p.statements().empty());
  CHECK(p.version() == v + 2);
}

TEST_CASE("pairwise matrices sit on the reference levels") {
  auto p = small_project();
  const std::vector<ahp::Comparison> j{{"10", "5", ahp::Ratio(3, 1)}, {"10", "0", ahp::Ratio(9, 1)},
                                       {"5", "0", ahp::Ratio(3, 1)}};
  const auto rep = p.set_matrix("g1", j);
  CHECK(rep.cr == doctest::Approx(0.0).epsilon(1e-9));
  REQUIRE(p.find_matrix("g1") != nullptr);
  // New levels invalidate the matrix built on the old ones.
  p.set_references(ReferenceEntry{{"g1", {0, 4, 10}}, std::vector<double>{0, 0.4, 1}});
  CHECK(p.find_matrix("g1") == nullptr);
}

TEST_CASE("rounds are append-only") {
  auto p = small_project();
  const auto b1 = report::build_report(p);
  p.append_round(report::make_round(b1));
  const auto first = p.rounds().at(0);
  p.add_statement({Kind::strict_pref, {"a", "b"}, ""});
  p.append_round(report::make_round(report::build_report(p)));
  REQUIRE(p.rounds().size() == 2);
  CHECK(p.rounds()[0] == first);
  CHECK(p.rounds()[1].index == first.index + 1);
  CHECK(p.rounds()[1].statements.size() == 1);
}

TEST_CASE("ingestion accepts grouped numbers and reports bad cells") {
  const std::vector<scale::CriterionSpec> c{spec("C1", 0, 20000), spec("C2")};
  const auto t = import_performances("id,C1,C2\nP1,\"7,500\",\"0,5\"\nP2,7 500,3\n", c);
  REQUIRE(t.rows() == 2);
  CHECK(t.at(0, 0) == 7500.0);
  CHECK(t.at(0, 1) == 0.5);
  CHECK(t.at(1, 0) == 7500.0);
  CHECK_THROWS_AS(import_performances("id,C1,C9\nP1,1,2\n", c), ValidationError);
  CHECK_THROWS_AS(import_performances("id,C1,C2\nP1,abc,2\n", c), ValidationError);
  CHECK_THROWS_AS(import_judgments("row_item,col_item,numerator,denominator\na,b,0,1\n"), ValidationError);
  const auto refs = import_references("criterion,levels,values\nC1,0 5 10,0 0.5 1\nC2,1 2,\n");
  REQUIRE(refs.size() == 2);
  CHECK(refs[0].values.has_value());
  CHECK_FALSE(refs[1].values.has_value());
}

TEST_CASE("build_report on the case study") {
  const auto b = report::build_report(cs::case_study_project(), {.solve = false});
  REQUIRE(b.consistency.size() == 2);
  CHECK(b.consistency[0].criterion == "C3");
  CHECK(b.consistency[0].report.cr == doctest::Approx(0.0277).epsilon(5e-4));
  CHECK(b.consistency[1].report.cr == doctest::Approx(0.0899).epsilon(5e-4));
  CHECK(b.budget.full_ahp == 1890);
  CHECK(b.budget.parsimonious == 72);
  CHECK(b.normalized.rows() == 21);
  CHECK_FALSE(b.naror.computed);
}

TEST_CASE("build_report stage errors") {
  auto p = small_project();
  p.set_references(ReferenceEntry{{"g2", {0, 5, 10}}, std::nullopt});
  try {
    report::build_report(p);
    FAIL("expected a stage error");
  } catch (const StageError& e) {
    CHECK(e.stage() == "scale");
  }
  auto q = small_project();
  q.add_statement({Kind::strict_pref, {"a", "c"}, ""});
  q.add_statement({Kind::strict_pref, {"c", "a"}, ""});
  const auto b = report::build_report(q);
  CHECK(b.naror.computed);
  CHECK_FALSE(b.naror.compatible);
  CHECK(b.naror.conflict == std::vector<std::size_t>{0, 1});
}

TEST_CASE("build_report small instances") {
  SUBCASE("empty project") {
    const auto b = report::build_report(Project("empty"));
    CHECK(b.naror.compatible);
    CHECK(b.naror.epsilon_star == 1.0);
  }
  SUBCASE("one criterion, two alternatives") {
    Project p("one");
    p.set_criteria({spec("g1")});
    scale::RatingTable t;
    t.alternatives = {"x", "y"};
    t.criteria = {"g1"};
    t.values = {2, 8};
    p.set_ratings(t);
    p.set_references(ReferenceEntry{{"g1", {0, 10}}, std::vector<double>{0, 1}});
    p.add_statement({Kind::strict_pref, {"y", "x"}, ""});
    const auto b = report::build_report(p);
    CHECK(b.naror.compatible);
    CHECK(b.naror.epsilon_star == doctest::Approx(0.6));
    CHECK(b.naror.ranking.at(0).id == "y");
  }
  SUBCASE("what-if statements leave the project untouched") {
    const auto p = small_project();
    const auto copy = p;
    report::ReportOptions o;
    o.statements = std::vector<naror::PreferenceStatement>{{Kind::importance_strict, {"g2", "g1"}, ""}};
    const auto b = report::build_report(p, o);
    CHECK(p == copy);
    CHECK(b.statements.size() == 1);
    CHECK(b.naror.ranking.at(0).id == "b");
  }
}

TEST_CASE("report JSON is deterministic across worker counts") {
  auto p = small_project();
  p.add_statement({Kind::weak_pref, {"c", "a"}, ""});
  report::ReportOptions one, four;
  one.jobs = 1;
  four.jobs = 4;
  const auto a = report::to_json(report::build_report(p, one)).dump();
  const auto b = report::to_json(report::build_report(p, four)).dump();
  CHECK(a == b);
  CHECK_FALSE(report::to_text(report::build_report(p)).empty());
}

TEST_CASE("timestamps are UTC seconds") {
  CHECK(std::regex_match(utc_timestamp(), std::regex(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z)")));
}
