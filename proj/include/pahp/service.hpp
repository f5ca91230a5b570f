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

// JSON-over-HTTP front end with file-backed projects.
//
//   POST   /projects                          {"id"} or {"document"}  -> 201 {id, version, token}
//   GET    /projects                                                  -> {projects: [...]}
//   GET    /projects/{id}                                             -> project document
//   PUT    /projects/{id}                     {version, document}
//   PUT    /projects/{id}/criteria            {version, criteria}
//   PUT    /projects/{id}/alternatives        {version, alternatives}
//   PUT    /projects/{id}/ratings             {version, ratings}
//   PUT    /projects/{id}/references          {version, references}
//   PUT    /projects/{id}/matrices/{crit}     {version, judgments}    -> {version, consistency}
//   POST   /projects/{id}/statements          {version, statement}    -> {version, index}
//   PUT    /projects/{id}/statements          {version, statements}
//   DELETE /projects/{id}/statements/{index}  {version}
//   POST   /projects/{id}/compute/{normalize|solve|rank}              -> 202 {job}
//   GET    /jobs/{job}                                                -> {job, status, result|error}
//   GET    /projects/{id}/relations                                   -> {version, relations}
//   POST   /projects/{id}/whatif              {statements}            -> report bundle
//
// Everything under /projects/{id} needs the project's token in the
// X-Project-Token header. Mutations carry the version they were based on;
// a stale one gets 409 with the current document. Domain violations are 422
// with {"error", "field"}; unknown projects, jobs or routes are 404.

#include <map>
#include <memory>
#include <string>

namespace pahp::service {

struct Request {
  std::string method;
  std::string path;
  std::string body;
  std::map<std::string, std::string> headers;
};

struct Response {
  int status = 200;
  std::string body;
};

inline constexpr const char* kTokenHeader = "X-Project-Token";

struct ServiceOptions {
  /// Directory holding <id>.json and <id>.token; created if missing.
  std::string data_dir = "pahp-data";
  /// Worker threads per relation computation.
  unsigned jobs = 1;
};

class Service {
 public:
  explicit Service(ServiceOptions options);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  Response handle(const Request& request);

  /// Blocks until every submitted job has finished.
  void wait_for_jobs();

  /// Serves HTTP until stop() is called. Returns false if the socket could
  /// not be bound.
  bool serve(const std::string& host, int port);
  /// Binds to an ephemeral port and returns it (for tests); serve_bound()
  /// then runs the accept loop.
  int bind_any_port(const std::string& host);
  bool serve_bound();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pahp::service
