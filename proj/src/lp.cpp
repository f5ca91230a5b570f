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

#include "pahp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "pahp/decimal.hpp"
#include "pahp/error.hpp"
#include "pahp/kernels.hpp"

namespace pahp::lp {

std::size_t LinearProgram::add_variable(std::string name, std::optional<double> lower,
                                        std::optional<double> upper) {
  if (name.empty()) throw ValidationError("variable name must not be empty");
  if (find_variable(name)) throw ValidationError("duplicate variable '" + name + "'");
  if (lower && upper && *lower > *upper) {
    throw ValidationError("variable '" + name + "' has lower bound above upper bound");
  }
  variables_.push_back({std::move(name), lower, upper});
  return variables_.size() - 1;
}

void LinearProgram::check_terms(const Expression& terms) const {
  for (const auto& t : terms) {
    if (t.variable >= variables_.size()) {
      throw ValidationError("term references undeclared variable #" + std::to_string(t.variable));
    }
    if (!std::isfinite(t.coefficient)) throw ValidationError("non-finite coefficient");
  }
}

void LinearProgram::set_objective(Sense sense, Expression terms) {
  check_terms(terms);
  sense_ = sense;
  objective_ = std::move(terms);
}

void LinearProgram::add_constraint(Expression terms, Relation relation, double rhs,
                                   std::string label) {
  if (label.empty()) throw ValidationError("constraint label must not be empty");
  if (has_label(label)) throw ValidationError("duplicate constraint label '" + label + "'");
  if (!std::isfinite(rhs)) throw ValidationError("non-finite right-hand side in " + label);
  check_terms(terms);
  constraints_.push_back({std::move(terms), relation, rhs, std::move(label)});
}

std::optional<std::size_t> LinearProgram::find_variable(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  return std::nullopt;
}

bool LinearProgram::has_label(const std::string& label) const {
  return std::any_of(constraints_.begin(), constraints_.end(),
                     [&](const Constraint& c) { return c.label == label; });
}

std::string to_string(Status status) {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "unknown";
}

double evaluate(const Expression& terms, const std::vector<double>& values) {
  double s = 0.0;
  for (const auto& t : terms) s += t.coefficient * values.at(t.variable);
  return s;
}

double max_violation(const LinearProgram& program, const std::vector<double>& values) {
  double worst = 0.0;
  const auto& vars = program.variables();
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (vars[k].lower) worst = std::max(worst, *vars[k].lower - values[k]);
    if (vars[k].upper) worst = std::max(worst, values[k] - *vars[k].upper);
  }
  for (const auto& c : program.constraints()) {
    const double lhs = evaluate(c.terms, values);
    switch (c.relation) {
      case Relation::less_equal: worst = std::max(worst, lhs - c.rhs); break;
      case Relation::greater_equal: worst = std::max(worst, c.rhs - lhs); break;
      case Relation::equal: worst = std::max(worst, std::abs(lhs - c.rhs)); break;
    }
  }
  return worst;
}

namespace {

// How an original variable maps onto non-negative tableau columns.
struct ColumnMap {
  enum Kind { shift, reflect, split } kind = shift;
  std::size_t column = 0;  // y, or y+ for split (y- is column + 1)
  double offset = 0.0;     // l for shift, u for reflect
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), width_(cols + 1), a_(rows * (cols + 1), 0.0),
        obj_(cols + 1, 0.0), basis_(rows, 0), row_ids_(rows) {
    for (std::size_t i = 0; i < rows; ++i) row_ids_[i] = i;
  }

  double& at(std::size_t r, std::size_t c) { return a_[r * width_ + c]; }
  double at(std::size_t r, std::size_t c) const { return a_[r * width_ + c]; }
  double& rhs(std::size_t r) { return a_[r * width_ + cols_]; }
  std::span<double> row(std::size_t r) { return {a_.data() + r * width_, width_}; }
  std::span<double> obj() { return obj_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<double>& data() const { return a_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t r, std::size_t c) {
    auto pr = row(r);
    kernels::scale(1.0 / pr[c], pr);
    pr[c] = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      kernels::axpy_sub(f, pr, row(i));
      at(i, c) = 0.0;
    }
    const double f = obj_[c];
    if (f != 0.0) {
      kernels::axpy_sub(f, pr, obj_);
      obj_[c] = 0.0;
    }
    basis_[r] = c;
  }

  // Rebuilds every row as B^-1 times the original row (Gauss-Jordan with
  // partial pivoting over the current basis columns) and the objective row
  // from `cost`. Clears the rounding error that accumulates over pivots.
  // Returns false if the basis is numerically singular; the tableau is then
  // left unchanged.
  bool reinvert(const std::vector<double>& original, std::span<const double> cost) {
    std::vector<double> m(rows_ * width_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::copy_n(original.begin() + static_cast<long>(row_ids_[i] * width_), width_,
                  m.begin() + static_cast<long>(i * width_));
    }
    auto mrow = [&](std::size_t i) { return std::span<double>(m.data() + i * width_, width_); };
    std::vector<std::size_t> order(rows_);
    for (std::size_t i = 0; i < rows_; ++i) order[i] = i;
    for (std::size_t k = 0; k < rows_; ++k) {
      const std::size_t c = basis_[k];
      std::size_t piv = k;
      for (std::size_t i = k + 1; i < rows_; ++i) {
        if (std::abs(m[order[i] * width_ + c]) > std::abs(m[order[piv] * width_ + c])) piv = i;
      }
      std::swap(order[k], order[piv]);
      const std::size_t r = order[k];
      const double d = m[r * width_ + c];
      if (std::abs(d) < 1e-11) return false;
      kernels::scale(1.0 / d, mrow(r));
      m[r * width_ + c] = 1.0;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        const double f = m[i * width_ + c];
        if (f == 0.0) continue;
        kernels::axpy_sub(f, mrow(r), mrow(i));
        m[i * width_ + c] = 0.0;
      }
    }
    // Row k of the tableau is the one whose basic column is basis_[k]; the
    // original row identity moves with it.
    std::vector<std::size_t> ids(rows_);
    for (std::size_t k = 0; k < rows_; ++k) {
      std::copy_n(m.begin() + static_cast<long>(order[k] * width_), width_,
                  a_.begin() + static_cast<long>(k * width_));
      ids[k] = row_ids_[order[k]];
    }
    row_ids_ = std::move(ids);
    set_objective(cost);
    return true;
  }

  // obj = cost - sum_i cost[basis_i] * row_i.
  void set_objective(std::span<const double> cost) {
    std::copy(cost.begin(), cost.end(), obj_.begin());
    obj_[cols_] = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const double cb = obj_[basis_[i]];
      if (cb != 0.0) {
        kernels::axpy_sub(cb, row(i), obj_);
        obj_[basis_[i]] = 0.0;
      }
    }
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<long>(r * width_),
             a_.begin() + static_cast<long>((r + 1) * width_));
    basis_.erase(basis_.begin() + static_cast<long>(r));
    row_ids_.erase(row_ids_.begin() + static_cast<long>(r));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t width_;
  std::vector<double> a_;
  std::vector<double> obj_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> row_ids_;
};

enum class Outcome { optimal, unbounded };

// Pivots between reinversions of the tableau.
constexpr long kReinvertEvery = 25;

// Minimises `cost` with Bland's rule, starting from the tableau's basis.
// Columns flagged in `barred` never enter the basis.
Outcome run_simplex(Tableau& t, const std::vector<double>& original, const std::vector<double>& cost,
                    const std::vector<char>& barred, double tol, long& pivots, long max_pivots) {
  t.set_objective(cost);
  long since_reinvert = 0;
  for (;;) {
    auto obj = t.obj();
    std::size_t enter = t.cols();
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (!barred[j] && obj[j] < -tol) {
        enter = j;
        break;
      }
    }
    if (enter == t.cols()) {
      // Confirm optimality on a freshly reinverted tableau.
      if (since_reinvert == 0 || !t.reinvert(original, cost)) return Outcome::optimal;
      since_reinvert = 0;
      continue;
    }

    std::size_t leave = t.rows();
    double best = 0.0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      const double a = t.at(i, enter);
      if (a <= tol) continue;
      const double ratio = std::max(0.0, t.rhs(i)) / a;
      if (leave == t.rows() || ratio < best - tol ||
          (ratio <= best + tol && t.basis()[i] < t.basis()[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == t.rows()) return Outcome::unbounded;
    if (++pivots > max_pivots) {
      throw SolverStall("simplex exceeded " + std::to_string(max_pivots) + " pivots", pivots);
    }
    t.pivot(leave, enter);
    if (++since_reinvert >= kReinvertEvery && t.reinvert(original, cost)) since_reinvert = 0;
  }
}

}  // namespace

LpSolution solve(const LinearProgram& program, const SolverOptions& options) {
  const double tol = options.feasibility_tolerance;
  const auto& vars = program.variables();
  const auto& cons = program.constraints();

  // Structural columns.
  std::vector<ColumnMap> maps(vars.size());
  std::size_t structural = 0;
  struct UpperRow {
    std::size_t column;
    double bound;
  };
  std::vector<UpperRow> upper_rows;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const auto& v = vars[k];
    if (v.lower) {
      maps[k] = {ColumnMap::shift, structural++, *v.lower};
      if (v.upper) upper_rows.push_back({maps[k].column, *v.upper - *v.lower});
    } else if (v.upper) {
      maps[k] = {ColumnMap::reflect, structural++, *v.upper};
    } else {
      maps[k] = {ColumnMap::split, structural, 0.0};
      structural += 2;
    }
  }

  struct Row {
    std::vector<double> coef;
    Relation relation;
    double rhs;
  };
  std::vector<Row> rows;
  rows.reserve(cons.size() + upper_rows.size());
  for (const auto& c : cons) {
    Row r{std::vector<double>(structural, 0.0), c.relation, c.rhs};
    for (const auto& term : c.terms) {
      const auto& m = maps[term.variable];
      switch (m.kind) {
        case ColumnMap::shift:
          r.coef[m.column] += term.coefficient;
          r.rhs -= term.coefficient * m.offset;
          break;
        case ColumnMap::reflect:
          r.coef[m.column] -= term.coefficient;
          r.rhs -= term.coefficient * m.offset;
          break;
        case ColumnMap::split:
          r.coef[m.column] += term.coefficient;
          r.coef[m.column + 1] -= term.coefficient;
          break;
      }
    }
    rows.push_back(std::move(r));
  }
  for (const auto& u : upper_rows) {
    Row r{std::vector<double>(structural, 0.0), Relation::less_equal, u.bound};
    r.coef[u.column] = 1.0;
    rows.push_back(std::move(r));
  }

  // Non-negative right-hand sides; homogeneous >= rows become <= so they start
  // with a slack in the basis instead of an artificial.
  std::size_t slacks = 0;
  std::size_t artificials = 0;
  for (auto& r : rows) {
    const bool flip = r.rhs < 0.0 || (r.rhs == 0.0 && r.relation == Relation::greater_equal);
    if (flip) {
      for (double& v : r.coef) v = -v;
      r.rhs = -r.rhs;
      if (r.relation == Relation::less_equal) {
        r.relation = Relation::greater_equal;
      } else if (r.relation == Relation::greater_equal) {
        r.relation = Relation::less_equal;
      }
    }
    if (r.relation != Relation::equal) ++slacks;
    if (r.relation != Relation::less_equal) ++artificials;
  }

  const std::size_t first_artificial = structural + slacks;
  const std::size_t cols = first_artificial + artificials;
  Tableau t(rows.size(), cols);
  std::vector<char> is_artificial(cols, 0);
  {
    std::size_t s = structural;
    std::size_t a = first_artificial;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      std::copy(r.coef.begin(), r.coef.end(), t.row(i).begin());
      t.rhs(i) = r.rhs;
      if (r.relation == Relation::less_equal) {
        t.at(i, s) = 1.0;
        t.basis()[i] = s++;
      } else {
        if (r.relation == Relation::greater_equal) t.at(i, s++) = -1.0;
        t.at(i, a) = 1.0;
        is_artificial[a] = 1;
        t.basis()[i] = a++;
      }
    }
  }

  const long max_pivots =
      options.max_pivots > 0 ? options.max_pivots
                             : 50000 + 200 * static_cast<long>(rows.size() + cols);
  const std::vector<double> original = t.data();
  LpSolution out;
  double rhs_scale = 1.0;
  for (const auto& r : rows) rhs_scale = std::max(rhs_scale, std::abs(r.rhs));

  // Phase 1: minimise the sum of artificials.
  if (artificials > 0) {
    std::vector<double> cost(cols, 0.0);
    for (std::size_t j = first_artificial; j < cols; ++j) cost[j] = 1.0;
    const std::vector<char> none(cols, 0);
    run_simplex(t, original, cost, none, tol, out.pivots, max_pivots);
    if (-t.obj()[cols] > tol * rhs_scale) {
      out.status = Status::infeasible;
      return out;
    }
    // Drive remaining (zero-level) artificials out; drop redundant rows.
    for (std::size_t i = 0; i < t.rows();) {
      if (!is_artificial[t.basis()[i]]) {
        ++i;
        continue;
      }
      std::size_t enter = cols;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (std::abs(t.at(i, j)) > tol) {
          enter = j;
          break;
        }
      }
      if (enter == cols) {
        t.drop_row(i);
      } else {
        t.pivot(i, enter);
        ++i;
      }
    }
  }

  // Phase 2 on the original objective (as a minimisation).
  {
    std::vector<double> cost(cols, 0.0);
    const double sign = program.sense() == Sense::maximize ? -1.0 : 1.0;
    for (const auto& term : program.objective()) {
      const auto& m = maps[term.variable];
      const double c = sign * term.coefficient;
      switch (m.kind) {
        case ColumnMap::shift: cost[m.column] += c; break;
        case ColumnMap::reflect: cost[m.column] -= c; break;
        case ColumnMap::split:
          cost[m.column] += c;
          cost[m.column + 1] -= c;
          break;
      }
    }
    if (run_simplex(t, original, cost, is_artificial, tol, out.pivots, max_pivots) == Outcome::unbounded) {
      out.status = Status::unbounded;
      return out;
    }
  }

  std::vector<double> y(cols, 0.0);
  for (std::size_t i = 0; i < t.rows(); ++i) y[t.basis()[i]] = std::max(0.0, t.rhs(i));
  out.values.resize(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const auto& m = maps[k];
    switch (m.kind) {
      case ColumnMap::shift: out.values[k] = m.offset + y[m.column]; break;
      case ColumnMap::reflect: out.values[k] = m.offset - y[m.column]; break;
      case ColumnMap::split: out.values[k] = y[m.column] - y[m.column + 1]; break;
    }
  }
  const double violation = max_violation(program, out.values);
  if (violation > options.report_tolerance) {
    throw SolverStall("simplex returned a point violating constraints by " +
                          std::to_string(violation),
                      out.pivots);
  }
  out.status = Status::optimal;
  out.objective_value = evaluate(program.objective(), out.values);
  for (const auto& c : cons) {
    if (std::abs(evaluate(c.terms, out.values) - c.rhs) <= options.report_tolerance) {
      out.active_labels.push_back(c.label);
    }
  }
  return out;
}

std::string to_lp_format(const LinearProgram& program) {
  const auto& vars = program.variables();
  auto expr = [&](const Expression& terms) {
    std::ostringstream os;
    if (terms.empty()) os << " 0";
    for (const auto& t : terms) {
      os << (t.coefficient < 0 ? " - " : " + ") << format_decimal(std::abs(t.coefficient)) << ' '
         << vars[t.variable].name;
    }
    return os.str();
  };
  std::ostringstream os;
  os << (program.sense() == Sense::maximize ? "Maximize\n" : "Minimize\n");
  os << " obj:" << expr(program.objective()) << '\n';
  os << "Subject To\n";
  for (const auto& c : program.constraints()) {
    const char* rel = c.relation == Relation::less_equal ? "<="
                      : c.relation == Relation::equal    ? "="
                                                         : ">=";
    os << ' ' << c.label << ':' << expr(c.terms) << ' ' << rel << ' ' << format_decimal(c.rhs)
       << '\n';
  }
  os << "Bounds\n";
  for (const auto& v : vars) {
    if (v.lower && *v.lower == 0.0 && !v.upper) continue;  // default bound
    os << ' ' << (v.lower ? format_decimal(*v.lower) : std::string("-inf")) << " <= " << v.name
       << " <= " << (v.upper ? format_decimal(*v.upper) : std::string("+inf")) << '\n';
  }
  os << "End\n";
  return os.str();
}

}  // namespace pahp::lp
