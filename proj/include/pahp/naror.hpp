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

// Robust ordinal regression with a 2-additive Choquet integral.
//
// Preference statements about alternatives and criteria are compiled into a
// linear system over the Moebius masses plus one shared slack epsilon. The
// system is then probed with LPs for compatibility, necessary and possible
// preference, and a single representative capacity.
//
// Pair masses enter the programs as m_ij = p_ij - q_ij with p, q >= 0, and the
// monotonicity family "m_i + sum_{j in T} m_ij >= 0 for every T" is replaced
// by the n rows m_i - sum_j q_ij >= 0. Both describe the same set of
// capacities (the worst T collects exactly the negative m_ij), but the lifted
// form needs n rows instead of n * (2^(n-1) - 1).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pahp/choquet.hpp"
#include "pahp/lp.hpp"
#include "pahp/scale.hpp"

namespace pahp::naror {

enum class StatementKind {
  weak_pref,             // a >= b
  strict_pref,           // a > b
  indifference,          // a ~ b
  intensity_strict,      // (a, b) >* (c, d)
  intensity_indiff,      // (a, b) ~* (c, d)
  importance_strict,     // g_i more important than g_j
  importance_indiff,     // g_i as important as g_j
  interaction_positive,  // g_i, g_j synergic
  interaction_negative,  // g_i, g_j redundant
};

std::string_view to_string(StatementKind kind) noexcept;
StatementKind parse_statement_kind(std::string_view text);

/// Number of identifiers a statement of this kind takes (2 or 4).
std::size_t arity(StatementKind kind) noexcept;

/// True for kinds about criteria rather than alternatives.
bool about_criteria(StatementKind kind) noexcept;

/// True for kinds whose constraint carries epsilon.
bool is_strict(StatementKind kind) noexcept;

struct PreferenceStatement {
  StatementKind kind = StatementKind::weak_pref;
  /// Alternative ids (a, b[, c, d]) or criterion ids (g_i, g_j).
  std::vector<std::string> items;
  std::string label;

  friend bool operator==(const PreferenceStatement&, const PreferenceStatement&) = default;
};

/// Short rendering such as "P1 > P4" or "phi(C7,C10) > 0".
std::string describe(const PreferenceStatement& statement);

/// Throws ValidationError (field "statements[k]") for a wrong item count,
/// repeated identifiers, or identifiers unknown to `table`.
void validate(const PreferenceStatement& statement, const scale::NormalizedTable& table,
              std::size_t position = 0);

/// Comparisons treat epsilon values at or below this as "not positive".
inline constexpr double kEpsilonTolerance = 1e-8;

/// Compiled system E. `program` holds the variables, the base constraints and
/// one row per statement; its objective is left for the caller.
struct ConstraintSystem {
  std::vector<std::string> criteria;
  std::vector<std::string> alternatives;
  /// Row-major copy of the normalized evaluations.
  std::vector<double> evaluations;
  std::vector<PreferenceStatement> statements;

  lp::LinearProgram program;
  std::size_t epsilon = 0;
  std::vector<std::size_t> singleton_vars;
  std::vector<std::size_t> pair_pos_vars;
  std::vector<std::size_t> pair_neg_vars;
  /// LP label of each statement's row, parallel to `statements`.
  std::vector<std::string> statement_labels;

  std::size_t n() const noexcept { return criteria.size(); }

  /// C_mu(alternative) as a linear expression in the Moebius variables.
  lp::Expression choquet(std::size_t alternative) const;
  /// Shapley index of criterion i as a linear expression.
  lp::Expression shapley(std::size_t criterion) const;
  /// m_ij as a linear expression.
  lp::Expression pair_mass(std::size_t i, std::size_t j) const;

  /// Capacity read off an LP point.
  choquet::MoebiusCapacity capacity(const std::vector<double>& values) const;

  std::size_t alternative_index(std::string_view id) const;
  std::size_t criterion_index(std::string_view id) const;
};

ConstraintSystem compile(std::span<const PreferenceStatement> statements,
                         const scale::NormalizedTable& table);

struct Feasibility {
  bool feasible = false;
  /// max epsilon over E (NaN when infeasible); capped at 1.
  double epsilon_star = 0.0;
  /// Compatible: feasible with epsilon_star > kEpsilonTolerance.
  bool compatible() const noexcept { return feasible && epsilon_star > kEpsilonTolerance; }
  /// LP point at the optimum (empty when infeasible).
  std::vector<double> point;
};

Feasibility feasibility(const ConstraintSystem& system);

/// a is at least as good as b for every compatible capacity.
bool necessary(const ConstraintSystem& system, std::size_t a, std::size_t b);
/// a is at least as good as b for some compatible capacity.
bool possible(const ConstraintSystem& system, std::size_t a, std::size_t b);

struct RelationMatrices {
  std::vector<std::string> alternatives;
  /// Row-major |A| x |A| grids; cell (a, b) is "a relates to b".
  std::vector<char> necessary;
  std::vector<char> possible;

  std::size_t size() const noexcept { return alternatives.size(); }
  bool nec(std::size_t a, std::size_t b) const { return necessary.at(a * size() + b) != 0; }
  bool pos(std::size_t a, std::size_t b) const { return possible.at(a * size() + b) != 0; }

  friend bool operator==(const RelationMatrices&, const RelationMatrices&) = default;
};

/// All ordered pairs, `jobs` worker threads (0 = hardware concurrency). The
/// result does not depend on `jobs`.
RelationMatrices relations(const ConstraintSystem& system, unsigned jobs = 1);

struct Representative {
  choquet::MoebiusCapacity capacity;
  /// Stage-1 optimum: E plus gap rows for strictly-necessary pairs.
  double epsilon = 0.0;
  /// Stage-2 optimum: largest |C(a) - C(b)| over incomparable pairs.
  double delta = 0.0;
  /// LP point of the stage-2 solution.
  std::vector<double> point;
};

/// Throws Error when the system has no compatible capacity.
Representative most_representative(const ConstraintSystem& system,
                                   const RelationMatrices& relations);

struct RankedAlternative {
  std::string id;
  double value = 0.0;
  int rank = 0;

  friend bool operator==(const RankedAlternative&, const RankedAlternative&) = default;
};

/// Values closer than this share a rank.
inline constexpr double kTieTolerance = 1e-9;

/// Descending by Choquet value, dense ranks; ties listed by identifier in
/// natural order (P2 before P10).
std::vector<RankedAlternative> rank(const choquet::MoebiusCapacity& capacity,
                                    const scale::NormalizedTable& table);

/// "P2" < "P10": digit runs compare numerically.
bool natural_less(std::string_view a, std::string_view b);

/// Deletion filter over statements: returns the positions (into
/// `statements`) of one irreducible incompatible subset. Throws Error when the
/// full set is compatible.
std::vector<std::size_t> diagnose(std::span<const PreferenceStatement> statements,
                                  const scale::NormalizedTable& table);

struct SolveOptions {
  unsigned jobs = 1;
};

struct SolveOutcome {
  double epsilon_star = 0.0;
  bool has_compatible_model = false;
  RelationMatrices relations;
  choquet::MoebiusCapacity representative;
  double stage1_epsilon = 0.0;
  double stage2_delta = 0.0;
  std::vector<double> shapley;
  std::vector<RankedAlternative> ranking;
  /// When incompatible: positions of an irreducible conflicting subset.
  std::vector<std::size_t> conflict;
};

/// Compile, check, relations, representative, rank.
SolveOutcome solve(std::span<const PreferenceStatement> statements,
                   const scale::NormalizedTable& table, const SolveOptions& options = {});

/// Largest violation of the compiled constraints by `capacity` when epsilon
/// is fixed to `epsilon`, recomputed from the statements without the LP.
double constraint_violation(const ConstraintSystem& system,
                            const choquet::MoebiusCapacity& capacity, double epsilon);

}  // namespace pahp::naror
