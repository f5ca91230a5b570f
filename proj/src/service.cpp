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

#include "pahp/service.hpp"

#include <algorithm>
#include <cctype>
#include <condition_variable>
#include <filesystem>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "httplib.h"
#include "pahp/error.hpp"
#include "pahp/project.hpp"
#include "pahp/report.hpp"

namespace pahp::service {

namespace fs = std::filesystem;
using session::Json;
using session::Project;

namespace {

Response json_response(int status, const Json& body) { return {status, body.dump()}; }

Response error_response(int status, const std::string& message, const std::string& field = {}) {
  Json j;
  j["error"] = message;
  if (!field.empty()) j["field"] = field;
  return json_response(status, j);
}

std::vector<std::string> split_path(std::string path) {
  if (auto q = path.find('?'); q != std::string::npos) path.resize(q);
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(path);
  while (std::getline(is, part, '/')) {
    if (!part.empty()) parts.push_back(httplib::detail::decode_url(part, false));
  }
  return parts;
}

bool valid_id(const std::string& id) {
  return !id.empty() && id.size() <= 64 && std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '-' || c == '_' || c == '.';
  }) && id.front() != '.';
}

std::string random_hex(std::size_t bytes) {
  static std::mutex m;
  static std::random_device rd;
  std::lock_guard lock(m);
  std::ostringstream os;
  for (std::size_t k = 0; k < bytes; ++k) {
    os << "0123456789abcdef"[rd() & 0xF] << "0123456789abcdef"[rd() & 0xF];
  }
  return os.str();
}

// Thrown by handlers to short-circuit with a ready response.
struct Reply {
  Response response;
};

}  // namespace

struct Service::Impl {
  struct Entry {
    std::mutex mutex;  // serializes mutations and snapshots of this project
    Project project;
    std::string token;
  };

  struct Job {
    std::string status = "pending";
    Json result;
    Json error;
  };

  ServiceOptions options;
  std::mutex registry_mutex;
  std::map<std::string, std::shared_ptr<Entry>> projects;

  std::mutex jobs_mutex;
  std::condition_variable jobs_cv;
  std::map<std::string, Job> jobs;
  std::vector<std::thread> workers;
  int running = 0;

  httplib::Server server;

  explicit Impl(ServiceOptions o) : options(std::move(o)) {
    fs::create_directories(options.data_dir);
    for (const auto& file : fs::directory_iterator(options.data_dir)) {
      if (file.path().extension() != ".json") continue;
      auto entry = std::make_shared<Entry>();
      entry->project = session::load_file(file.path().string());
      const auto token_path = fs::path(options.data_dir) / (entry->project.id() + ".token");
      entry->token = fs::exists(token_path) ? session::read_text_file(token_path.string()) : "";
      projects[entry->project.id()] = std::move(entry);
    }
  }

  std::string document_path(const std::string& id) const {
    return (fs::path(options.data_dir) / (id + ".json")).string();
  }

  void persist(const Project& p) { session::save_file(p, document_path(p.id())); }

  std::shared_ptr<Entry> find(const std::string& id) {
    std::lock_guard lock(registry_mutex);
    auto it = projects.find(id);
    if (it == projects.end()) throw Reply{error_response(404, "unknown project '" + id + "'")};
    return it->second;
  }

  static std::string header(const Request& r, const std::string& name) {
    for (const auto& [k, v] : r.headers) {
      if (k.size() == name.size() &&
          std::equal(k.begin(), k.end(), name.begin(), [](char a, char b) {
            return std::tolower(static_cast<unsigned char>(a)) ==
                   std::tolower(static_cast<unsigned char>(b));
          })) {
        return v;
      }
    }
    return {};
  }

  static void authorize(const Entry& e, const Request& r) {
    if (header(r, kTokenHeader) != e.token) {
      throw Reply{error_response(401, "missing or wrong project token")};
    }
  }

  static Json parse_body(const Request& r) {
    if (r.body.empty()) return Json::object();
    try {
      auto j = Json::parse(r.body);
      if (!j.is_object()) throw Reply{error_response(400, "request body must be a JSON object")};
      return j;
    } catch (const nlohmann::json::parse_error& e) {
      throw Reply{error_response(400, std::string("malformed JSON: ") + e.what())};
    }
  }

  static const Json& require(const Json& body, const char* key) {
    auto it = body.find(key);
    if (it == body.end()) throw Reply{error_response(422, std::string("missing ") + key, key)};
    return *it;
  }

  // Runs `mutate` on a copy under the project lock when `version` matches,
  // then publishes and persists the copy.
  template <typename F>
  Response mutate(const std::string& id, const Request& r, F&& f) {
    auto entry = find(id);
    authorize(*entry, r);
    const auto body = parse_body(r);
    const auto& v = require(body, "version");
    if (!v.is_number_integer()) throw Reply{error_response(422, "version must be an integer", "version")};
    std::lock_guard lock(entry->mutex);
    if (v.get<long>() != entry->project.version()) {
      Json j;
      j["error"] = "version conflict";
      j["expected"] = entry->project.version();
      j["current"] = session::to_json(entry->project);
      return json_response(409, j);
    }
    Project next = entry->project;
    Json extra = f(next, body);
    persist(next);
    entry->project = std::move(next);
    Json out;
    out["version"] = entry->project.version();
    for (auto& [k, val] : extra.items()) out[k] = val;
    return json_response(200, out);
  }

  Project snapshot(const std::string& id, const Request& r) {
    auto entry = find(id);
    authorize(*entry, r);
    std::lock_guard lock(entry->mutex);
    return entry->project;
  }

  Response create(const Request& r) {
    const auto body = parse_body(r);
    Project p;
    if (auto d = body.find("document"); d != body.end()) {
      p = session::from_json(*d);
    } else {
      const auto& id = require(body, "id");
      if (!id.is_string()) throw Reply{error_response(422, "id must be a string", "id")};
      p = Project(id.get<std::string>());
    }
    if (!valid_id(p.id())) {
      return error_response(422, "project id must be 1-64 characters of [A-Za-z0-9._-]", "id");
    }
    auto entry = std::make_shared<Entry>();
    entry->token = random_hex(16);
    {
      std::lock_guard lock(registry_mutex);
      if (projects.count(p.id())) return error_response(409, "project '" + p.id() + "' exists", "id");
      entry->project = std::move(p);
      persist(entry->project);
      session::write_text_file(
          (fs::path(options.data_dir) / (entry->project.id() + ".token")).string(), entry->token);
      projects[entry->project.id()] = entry;
    }
    Json out;
    out["id"] = entry->project.id();
    out["version"] = entry->project.version();
    out["token"] = entry->token;
    return json_response(201, out);
  }

  Response submit(const Project& snapshot, const std::string& what) {
    report::ReportOptions ro;
    ro.solve = what != "normalize";
    ro.jobs = options.jobs;
    const auto id = random_hex(8);
    std::lock_guard guard(jobs_mutex);
    jobs[id] = Job{};
    ++running;
    workers.emplace_back([this, id, snapshot, ro] {
      Job done;
      try {
        done.result = report::to_json(report::build_report(snapshot, ro));
        done.status = "done";
      } catch (const StageError& e) {
        done.status = "failed";
        done.error = {{"error", e.what()}, {"stage", e.stage()}};
      } catch (const std::exception& e) {
        done.status = "failed";
        done.error = {{"error", e.what()}};
      }
      std::lock_guard lock(jobs_mutex);
      jobs[id] = std::move(done);
      --running;
      jobs_cv.notify_all();
    });
    Json out;
    out["job"] = id;
    out["status"] = "pending";
    return json_response(202, out);
  }

  Response job_status(const std::string& id) {
    std::lock_guard lock(jobs_mutex);
    auto it = jobs.find(id);
    if (it == jobs.end()) return error_response(404, "unknown job '" + id + "'");
    Json out;
    out["job"] = id;
    out["status"] = it->second.status;
    if (it->second.status == "done") out["result"] = it->second.result;
    if (it->second.status == "failed") out["error"] = it->second.error;
    return json_response(200, out);
  }

  Response route(const Request& r) {
    const auto p = split_path(r.path);
    const auto& m = r.method;
    if (p.empty()) return error_response(404, "no such route");

    if (p[0] == "jobs" && p.size() == 2 && m == "GET") return job_status(p[1]);
    if (p[0] != "projects") return error_response(404, "no such route");

    if (p.size() == 1) {
      if (m == "POST") return create(r);
      if (m == "GET") {
        Json ids = Json::array();
        std::lock_guard lock(registry_mutex);
        for (const auto& [id, _] : projects) ids.push_back(id);
        return json_response(200, Json{{"projects", ids}});
      }
      return error_response(405, "method not allowed");
    }

    const std::string& id = p[1];
    if (p.size() == 2) {
      if (m == "GET") return json_response(200, session::to_json(snapshot(id, r)));
      if (m == "PUT") {
        return mutate(id, r, [&](Project& next, const Json& body) {
          auto doc = require(body, "document");
          if (!doc.is_object()) throw Reply{error_response(422, "document must be an object", "document")};
          doc["id"] = next.id();
          doc["version"] = next.version() + 1;
          next = session::from_json(doc);
          return Json::object();
        });
      }
      return error_response(405, "method not allowed");
    }

    const std::string& section = p[2];
    if (section == "criteria" && p.size() == 3 && m == "PUT") {
      return mutate(id, r, [&](Project& next, const Json& body) {
        next.set_criteria(session::criteria_from_json(require(body, "criteria")));
        return Json::object();
      });
    }
    if (section == "alternatives" && p.size() == 3 && m == "PUT") {
      return mutate(id, r, [&](Project& next, const Json& body) {
        next.set_alternatives(session::alternatives_from_json(require(body, "alternatives")));
        return Json::object();
      });
    }
    if (section == "ratings" && p.size() == 3 && m == "PUT") {
      return mutate(id, r, [&](Project& next, const Json& body) {
        next.set_ratings(session::ratings_from_json(require(body, "ratings"), next.criteria()));
        return Json::object();
      });
    }
    if (section == "references" && p.size() == 3 && m == "PUT") {
      return mutate(id, r, [&](Project& next, const Json& body) {
        next.set_references(session::references_from_json(require(body, "references")));
        return Json::object();
      });
    }
    if (section == "matrices" && p.size() == 4 && m == "PUT") {
      return mutate(id, r, [&](Project& next, const Json& body) {
        const auto judgments = session::judgments_from_json(require(body, "judgments"));
        const auto report = next.set_matrix(p[3], judgments);
        return Json{{"consistency", report::consistency_to_json(report)}};
      });
    }
    if (section == "statements") {
      if (p.size() == 3 && m == "POST") {
        return mutate(id, r, [&](Project& next, const Json& body) {
          next.add_statement(session::statement_from_json(require(body, "statement")));
          return Json{{"index", next.statements().size() - 1}};
        });
      }
      if (p.size() == 3 && m == "PUT") {
        return mutate(id, r, [&](Project& next, const Json& body) {
          const auto& list = require(body, "statements");
          if (!list.is_array()) throw Reply{error_response(422, "statements must be an array", "statements")};
          std::vector<naror::PreferenceStatement> parsed;
          for (std::size_t k = 0; k < list.size(); ++k) {
            parsed.push_back(session::statement_from_json(list[k], "statements[" + std::to_string(k) + "]"));
          }
          next.set_statements(std::move(parsed));
          return Json::object();
        });
      }
      if (p.size() == 4 && m == "DELETE") {
        std::size_t index = 0;
        try {
          index = std::stoul(p[3]);
        } catch (const std::exception&) {
          return error_response(404, "no statement '" + p[3] + "'");
        }
        return mutate(id, r, [&](Project& next, const Json&) {
          next.remove_statement(index);
          return Json::object();
        });
      }
    }
    if (section == "compute" && p.size() == 4 && m == "POST") {
      if (p[3] != "normalize" && p[3] != "solve" && p[3] != "rank") {
        return error_response(404, "unknown computation '" + p[3] + "'");
      }
      return submit(snapshot(id, r), p[3]);
    }
    if (section == "relations" && p.size() == 3 && m == "GET") {
      const auto snap = snapshot(id, r);
      report::ReportOptions ro;
      ro.jobs = options.jobs;
      const auto bundle = report::build_report(snap, ro);
      if (!bundle.naror.compatible) {
        return error_response(422, "statements admit no compatible capacity", "statements");
      }
      Json out;
      out["version"] = snap.version();
      out["relations"] = report::relations_to_json(bundle.naror.relations);
      return json_response(200, out);
    }
    if (section == "whatif" && p.size() == 3 && m == "POST") {
      const auto snap = snapshot(id, r);
      const auto body = parse_body(r);
      std::vector<naror::PreferenceStatement> tentative;
      if (auto it = body.find("statements"); it != body.end()) {
        if (!it->is_array()) return error_response(422, "statements must be an array", "statements");
        for (std::size_t k = 0; k < it->size(); ++k) {
          auto s = session::statement_from_json((*it)[k], "statements[" + std::to_string(k) + "]");
          snap.validate_statement(s, k);
          tentative.push_back(std::move(s));
        }
      }
      report::ReportOptions ro;
      ro.jobs = options.jobs;
      ro.statements = std::move(tentative);
      return json_response(200, report::to_json(report::build_report(snap, ro)));
    }
    return error_response(404, "no such route");
  }
};

Service::Service(ServiceOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {}

Service::~Service() {
  stop();
  wait_for_jobs();
  for (auto& t : impl_->workers) {
    if (t.joinable()) t.join();
  }
}

Response Service::handle(const Request& request) {
  try {
    return impl_->route(request);
  } catch (const Reply& r) {
    return r.response;
  } catch (const StageError& e) {
    Json j{{"error", e.what()}, {"stage", e.stage()}};
    return json_response(422, j);
  } catch (const ValidationError& e) {
    return error_response(422, e.what(), e.field());
  } catch (const DocumentError& e) {
    return error_response(422, e.what(), e.field());
  } catch (const SolverStall& e) {
    return error_response(500, e.what());
  } catch (const Error& e) {
    return error_response(422, e.what());
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
}

void Service::wait_for_jobs() {
  std::unique_lock lock(impl_->jobs_mutex);
  impl_->jobs_cv.wait(lock, [&] { return impl_->running == 0; });
}

namespace {

void install_routes(httplib::Server& server, Service& service) {
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    Request r;
    r.method = req.method;
    r.path = req.path;
    r.body = req.body;
    for (const auto& [k, v] : req.headers) r.headers[k] = v;
    const auto out = service.handle(r);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  server.Get(".*", forward);
  server.Post(".*", forward);
  server.Put(".*", forward);
  server.Delete(".*", forward);
}

}  // namespace

bool Service::serve(const std::string& host, int port) {
  install_routes(impl_->server, *this);
  return impl_->server.listen(host, port);
}

int Service::bind_any_port(const std::string& host) {
  install_routes(impl_->server, *this);
  return impl_->server.bind_to_any_port(host);
}

bool Service::serve_bound() { return impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

}  // namespace pahp::service
