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

#include <stdexcept>
#include <string>
#include <utility>

namespace pahp {

/// Base of every error raised by the engine. Anything deriving from Error is a
/// domain problem with the input (exit code 1 in the CLI, 422 in the service);
/// programming errors keep using the standard library exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates a documented precondition. `field` is a dotted path to the
/// offending value when one is known (e.g. "ratings.P1.C3").
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, std::string field = {})
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Iterative method did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, int iterations)
      : Error(what), iterations_(iterations) {}
  int iterations() const noexcept { return iterations_; }

 private:
  int iterations_;
};

/// Simplex hit its pivot limit without a verdict. Kept apart from
/// infeasibility so callers never mistake a stall for a proof.
class SolverStall : public Error {
 public:
  SolverStall(const std::string& what, long pivots) : Error(what), pivots_(pivots) {}
  long pivots() const noexcept { return pivots_; }

 private:
  long pivots_;
};

/// Pipeline failure attributed to the stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Persistence document problems (schema version, unknown fields, syntax).
class DocumentError : public Error {
 public:
  explicit DocumentError(const std::string& what, std::string field = {})
      : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace pahp
