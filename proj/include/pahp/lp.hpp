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

// Small dense linear programs: a builder and a two-phase tableau simplex with
// Bland's rule. Sized for the ordinal-regression programs (tens of variables,
// a few hundred rows); no attempt at sparsity.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace pahp::lp {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, equal, greater_equal };

struct Term {
  std::size_t variable = 0;
  double coefficient = 0.0;
};

using Expression = std::vector<Term>;

struct Variable {
  std::string name;
  std::optional<double> lower;
  std::optional<double> upper;
};

struct Constraint {
  Expression terms;
  Relation relation = Relation::less_equal;
  double rhs = 0.0;
  std::string label;
};

class LinearProgram {
 public:
  /// Adds a variable with bounds lower <= x <= upper; nullopt means unbounded
  /// on that side. Returns its index. Names must be unique.
  std::size_t add_variable(std::string name, std::optional<double> lower = 0.0,
                           std::optional<double> upper = std::nullopt);
  std::size_t add_free_variable(std::string name) {
    return add_variable(std::move(name), std::nullopt, std::nullopt);
  }

  void set_objective(Sense sense, Expression terms);

  /// Labels must be unique and non-empty; every term must reference a
  /// declared variable. Throws ValidationError otherwise.
  void add_constraint(Expression terms, Relation relation, double rhs, std::string label);

  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  Sense sense() const noexcept { return sense_; }
  const Expression& objective() const noexcept { return objective_; }

  std::optional<std::size_t> find_variable(const std::string& name) const;
  bool has_label(const std::string& label) const;

 private:
  void check_terms(const Expression& terms) const;

  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  Sense sense_ = Sense::maximize;
  Expression objective_;
};

enum class Status { optimal, infeasible, unbounded };

std::string to_string(Status status);

struct LpSolution {
  Status status = Status::infeasible;
  std::vector<double> values;
  double objective_value = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> active_labels;
  long pivots = 0;
};

struct SolverOptions {
  /// Pivot elements and reduced costs below this are treated as zero.
  double feasibility_tolerance = 1e-9;
  /// Constraint slack a returned optimum may show; also the "active" cutoff.
  double report_tolerance = 1e-7;
  /// 0 picks a limit from the problem size.
  long max_pivots = 0;
};

/// Two-phase dense simplex. Deterministic: identical programs give bitwise
/// identical results. Throws SolverStall on hitting the pivot limit or when
/// the final point fails the independent feasibility re-check.
LpSolution solve(const LinearProgram& program, const SolverOptions& options = {});

/// Evaluates an expression at a point.
double evaluate(const Expression& terms, const std::vector<double>& values);

/// Largest violation of any constraint or bound at `values` (0 if feasible).
double max_violation(const LinearProgram& program, const std::vector<double>& values);

/// Human-readable listing in the usual LP file layout, for debugging.
std::string to_lp_format(const LinearProgram& program);

}  // namespace pahp::lp
