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

#include <sstream>
#include <string>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "pahp/cli.hpp"
#include "pahp/project.hpp"
#include "pahp/report.hpp"
#include "pahp/service.hpp"
#include "support/case_study.hpp"
#include "support/temp_dir.hpp"

using namespace pahp;
using namespace pahp::service;
using session::Json;
namespace cs = pahp::testing;

namespace {

struct Reply {
  int status = 0;
  Json body;
};

class Client {
 public:
  explicit Client(Service& svc) : svc_(svc) {}

  Reply call(const std::string& method, const std::string& path, const Json& body = nullptr,
             const std::string& token = "") const {
    Request r;
    r.method = method;
    r.path = path;
    if (!body.is_null()) r.body = body.dump();
    if (!token.empty()) r.headers[kTokenHeader] = token;
    const auto res = svc_.handle(r);
    Reply out;
    out.status = res.status;
    out.body = res.body.empty() ? Json() : Json::parse(res.body);
    return out;
  }

  // Creates a project from a document and returns its token.
  std::string create(const session::Project& p) const {
    const auto r = call("POST", "/projects", Json{{"document", session::to_json(p)}});
    REQUIRE(r.status == 201);
    return r.body["token"].get<std::string>();
  }

 private:
  Service& svc_;
};

session::Project case_study_with(const std::vector<naror::PreferenceStatement>& statements) {
  auto p = cs::case_study_project();
  p.set_statements(statements);
  return p;
}

}  // namespace

TEST_CASE("service project lifecycle and auth") {
  cs::TempDir dir;
  Service svc({dir.path().string(), 1});
  Client c(svc);

  const auto created = c.call("POST", "/projects", Json{{"id", "alpha"}});
  REQUIRE(created.status == 201);
  const auto token = created.body["token"].get<std::string>();
  CHECK(created.body["version"] == 0);
  CHECK(c.call("POST", "/projects", Json{{"id", "alpha"}}).status == 409);
  CHECK(c.call("POST", "/projects", Json{{"id", "bad id!"}}).status == 422);

  CHECK(c.call("GET", "/projects/alpha").status == 401);
  CHECK(c.call("GET", "/projects/alpha", nullptr, "nope").status == 401);
  CHECK(c.call("GET", "/projects/alpha", nullptr, token).status == 200);
  CHECK(c.call("GET", "/projects/ghost", nullptr, token).status == 404);
  CHECK(c.call("GET", "/elsewhere").status == 404);
  CHECK(c.call("GET", "/jobs/none").status == 404);
  const auto list = c.call("GET", "/projects");
  CHECK(list.body["projects"] == Json::array({"alpha"}));

  // A restarted service picks the project and its token up from disk.
  Service again({dir.path().string(), 1});
  Client c2(again);
  CHECK(c2.call("GET", "/projects/alpha", nullptr, token).status == 200);
}

TEST_CASE("service mutations check the version") {
  cs::TempDir dir;
  Service svc({dir.path().string(), 1});
  Client c(svc);
  auto base = cs::case_study_project();
  const long v0 = base.version();
  const auto token = c.create(base);
  const auto path = std::string("/projects/social-housing");

  const auto judgments = session::judgments_to_json(
      session::import_judgments(session::read_text_file(cs::data_file("matrix_C3.csv"))));
  const auto put = c.call("PUT", path + "/matrices/C3", Json{{"version", v0}, {"judgments", judgments}}, token);
  REQUIRE(put.status == 200);
  CHECK(put.body["version"] == v0 + 1);
  CHECK(std::stod(put.body["consistency"]["cr"].get<std::string>()) == doctest::Approx(0.0277).epsilon(5e-4));

  const auto stale = c.call("PUT", path + "/matrices/C3", Json{{"version", v0}, {"judgments", judgments}}, token);
  CHECK(stale.status == 409);
  const auto current = c.call("GET", path, nullptr, token);
  CHECK(stale.body["current"] == current.body);

  const auto bad = c.call("POST", path + "/statements",
                          Json{{"version", v0 + 1},
                               {"statement", {{"kind", "strict_pref"}, {"items", {"P1", "P99"}}}}},
                          token);
  CHECK(bad.status == 422);
  CHECK(bad.body["field"].get<std::string>().find("items[1]") != std::string::npos);

  const auto ok = c.call("POST", path + "/statements",
                         Json{{"version", v0 + 1},
                              {"statement", {{"kind", "strict_pref"}, {"items", {"P1", "P4"}}}}},
                         token);
  REQUIRE(ok.status == 200);
  CHECK(ok.body["index"] == 0);
  CHECK(c.call("DELETE", path + "/statements/3", Json{{"version", v0 + 2}}, token).status == 422);
  CHECK(c.call("DELETE", path + "/statements/0", Json{{"version", v0 + 2}}, token).status == 200);
  CHECK(c.call("PUT", path + "/ratings", Json{{"ratings", Json::array()}}, token).status == 422);
}

TEST_CASE("service what-if leaves the stored project alone") {
  cs::TempDir dir;
  Service svc({dir.path().string(), 1});
  Client c(svc);
  const auto token = c.call("POST", "/projects", Json{{"id", "empty"}}).body["token"].get<std::string>();
  const auto file = dir.file("empty.json");
  const auto before = session::read_text_file(file);

  const auto w = c.call("POST", "/projects/empty/whatif", Json::object(), token);
  REQUIRE(w.status == 200);
  CHECK(w.body["naror"]["compatible"] == true);
  CHECK(std::stod(w.body["naror"]["epsilon_star"].get<std::string>()) > 0.0);
  CHECK(session::read_text_file(file) == before);

  const auto t2 = c.create(cs::case_study_project());
  const auto file2 = dir.file("social-housing.json");
  const auto before2 = session::read_text_file(file2);
  const auto conflict = c.call(
      "POST", "/projects/social-housing/whatif",
      Json{{"statements", {{{"kind", "strict_pref"}, {"items", {"P12", "P4"}}}}}}, t2);
  REQUIRE(conflict.status == 200);
  CHECK(conflict.body["naror"]["compatible"] == false);
  CHECK(session::read_text_file(file2) == before2);
  CHECK(c.call("POST", "/projects/social-housing/whatif",
               Json{{"statements", {{{"kind", "strict_pref"}, {"items", {"P1", "P99"}}}}}}, t2)
            .status == 422);
}

TEST_CASE("service jobs match the CLI report") {
  cs::TempDir dir;
  Service svc({dir.path().string(), 2});
  Client c(svc);
  const auto project = case_study_with(cs::interaction_statements());
  const auto token = c.create(project);

  const auto sub = c.call("POST", "/projects/social-housing/compute/solve", nullptr, token);
  REQUIRE(sub.status == 202);
  const auto job = sub.body["job"].get<std::string>();
  svc.wait_for_jobs();
  const auto done = c.call("GET", "/jobs/" + job);
  REQUIRE(done.status == 200);
  REQUIRE(done.body["status"] == "done");

  cs::TempDir cli_dir;
  const auto path = cli_dir.file("p.json");
  session::save_file(project, path);
  std::ostringstream out, err;
  REQUIRE(cli::run({"--project", path, "--format", "json", "report"}, out, err) == 0);
  CHECK(Json::parse(out.str()) == done.body["result"]);

  CHECK(c.call("POST", "/projects/social-housing/compute/dance", nullptr, token).status == 404);

  const auto rel = c.call("GET", "/projects/social-housing/relations", nullptr, token);
  REQUIRE(rel.status == 200);
  CHECK(rel.body["relations"] == done.body["result"]["naror"]["relations"]);
}

TEST_CASE("service jobs report the failing stage") {
  cs::TempDir dir;
  Service svc({dir.path().string(), 1});
  Client c(svc);
  auto p = cs::case_study_project();
  p.set_references(session::ReferenceEntry{{"C1", {0, 5, 8, 10}}, std::nullopt});
  const auto token = c.create(p);
  const auto sub = c.call("POST", "/projects/social-housing/compute/normalize", nullptr, token);
  REQUIRE(sub.status == 202);
  svc.wait_for_jobs();
  const auto done = c.call("GET", "/jobs/" + sub.body["job"].get<std::string>());
  CHECK(done.body["status"] == "failed");
  CHECK(done.body["error"]["stage"] == "scale");
}

TEST_CASE("service answers over HTTP") {
  cs::TempDir dir;
  Service svc({dir.path().string(), 1});
  const int port = svc.bind_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread server([&] { svc.serve_bound(); });
  httplib::Client http("127.0.0.1", port);
  auto created = http.Post("/projects", R"({"id": "web"})", "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const auto token = Json::parse(created->body)["token"].get<std::string>();
  auto got = http.Get("/projects/web", httplib::Headers{{kTokenHeader, token}});
  REQUIRE(got);
  CHECK(got->status == 200);
  CHECK(Json::parse(got->body)["id"] == "web");
  svc.stop();
  server.join();
}
