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

#include "pahp/naror.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "pahp/error.hpp"
#include "pahp/kernels.hpp"

namespace pahp::naror {

namespace {

constexpr std::array<std::pair<StatementKind, std::string_view>, 9> kKindNames{{
    {StatementKind::weak_pref, "weak_pref"},
    {StatementKind::strict_pref, "strict_pref"},
    {StatementKind::indifference, "indifference"},
    {StatementKind::intensity_strict, "intensity_strict"},
    {StatementKind::intensity_indiff, "intensity_indiff"},
    {StatementKind::importance_strict, "importance_strict"},
    {StatementKind::importance_indiff, "importance_indiff"},
    {StatementKind::interaction_positive, "interaction_positive"},
    {StatementKind::interaction_negative, "interaction_negative"},
}};

// Stage 2 pins epsilon this far below the stage-1 optimum so rounding in the
// first solve cannot make the second one infeasible.
constexpr double kStageSlack = 1e-9;

void add_scaled(lp::Expression& into, const lp::Expression& from, double factor) {
  for (const auto& t : from) into.push_back({t.variable, t.coefficient * factor});
}

// Merges duplicate variables and drops zero coefficients so programs stay
// small and the LP listing is readable.
lp::Expression compact(lp::Expression e) {
  std::map<std::size_t, double> acc;
  for (const auto& t : e) acc[t.variable] += t.coefficient;
  lp::Expression out;
  for (const auto& [v, c] : acc) {
    if (c != 0.0) out.push_back({v, c});
  }
  return out;
}

lp::Expression difference(const ConstraintSystem& s, std::size_t a, std::size_t b) {
  lp::Expression e = s.choquet(a);
  add_scaled(e, s.choquet(b), -1.0);
  return compact(std::move(e));
}

// Statement row: lhs (relation) 0, with -epsilon folded in for strict kinds.
struct Row {
  lp::Expression lhs;
  lp::Relation relation;
};

Row statement_row(const ConstraintSystem& s, const PreferenceStatement& st) {
  const auto& it = st.items;
  lp::Expression e;
  lp::Relation rel = lp::Relation::greater_equal;
  switch (st.kind) {
    case StatementKind::weak_pref:
    case StatementKind::strict_pref:
    case StatementKind::indifference:
      e = difference(s, s.alternative_index(it[0]), s.alternative_index(it[1]));
      if (st.kind == StatementKind::indifference) rel = lp::Relation::equal;
      break;
    case StatementKind::intensity_strict:
    case StatementKind::intensity_indiff:
      e = difference(s, s.alternative_index(it[0]), s.alternative_index(it[1]));
      add_scaled(e, difference(s, s.alternative_index(it[2]), s.alternative_index(it[3])), -1.0);
      if (st.kind == StatementKind::intensity_indiff) rel = lp::Relation::equal;
      break;
    case StatementKind::importance_strict:
    case StatementKind::importance_indiff:
      e = s.shapley(s.criterion_index(it[0]));
      add_scaled(e, s.shapley(s.criterion_index(it[1])), -1.0);
      if (st.kind == StatementKind::importance_indiff) rel = lp::Relation::equal;
      break;
    case StatementKind::interaction_positive:
      e = s.pair_mass(s.criterion_index(it[0]), s.criterion_index(it[1]));
      break;
    case StatementKind::interaction_negative:
      add_scaled(e, s.pair_mass(s.criterion_index(it[0]), s.criterion_index(it[1])), -1.0);
      break;
  }
  if (is_strict(st.kind)) e.push_back({s.epsilon, -1.0});
  return {compact(std::move(e)), rel};
}

lp::LinearProgram max_epsilon(const ConstraintSystem& s) {
  lp::LinearProgram p = s.program;
  p.set_objective(lp::Sense::maximize, {{s.epsilon, 1.0}});
  return p;
}

// Returns max epsilon, or nullopt when infeasible.
std::optional<double> epsilon_of(const lp::LinearProgram& p, std::size_t epsilon) {
  const auto sol = lp::solve(p);
  if (sol.status == lp::Status::infeasible) return std::nullopt;
  if (sol.status == lp::Status::unbounded) {
    throw Error("max epsilon program reported unbounded despite the epsilon cap");
  }
  return sol.values[epsilon];
}

bool compatible_subset(std::span<const PreferenceStatement> statements,
                       const std::vector<std::size_t>& keep, const scale::NormalizedTable& table) {
  std::vector<PreferenceStatement> subset;
  subset.reserve(keep.size());
  for (auto k : keep) subset.push_back(statements[k]);
  return feasibility(compile(subset, table)).compatible();
}

}  // namespace

std::string_view to_string(StatementKind kind) noexcept {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

StatementKind parse_statement_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  throw ValidationError("unknown statement kind '" + std::string(text) + "'", "kind");
}

std::size_t arity(StatementKind kind) noexcept {
  return kind == StatementKind::intensity_strict || kind == StatementKind::intensity_indiff ? 4
                                                                                            : 2;
}

bool about_criteria(StatementKind kind) noexcept {
  switch (kind) {
    case StatementKind::importance_strict:
    case StatementKind::importance_indiff:
    case StatementKind::interaction_positive:
    case StatementKind::interaction_negative: return true;
    default: return false;
  }
}

bool is_strict(StatementKind kind) noexcept {
  switch (kind) {
    case StatementKind::strict_pref:
    case StatementKind::intensity_strict:
    case StatementKind::importance_strict:
    case StatementKind::interaction_positive:
    case StatementKind::interaction_negative: return true;
    default: return false;
  }
}

std::string describe(const PreferenceStatement& st) {
  const auto& it = st.items;
  auto at = [&](std::size_t k) { return k < it.size() ? it[k] : std::string("?"); };
  switch (st.kind) {
    case StatementKind::weak_pref: return at(0) + " >= " + at(1);
    case StatementKind::strict_pref: return at(0) + " > " + at(1);
    case StatementKind::indifference: return at(0) + " ~ " + at(1);
    case StatementKind::intensity_strict:
      return "(" + at(0) + "," + at(1) + ") >* (" + at(2) + "," + at(3) + ")";
    case StatementKind::intensity_indiff:
      return "(" + at(0) + "," + at(1) + ") ~* (" + at(2) + "," + at(3) + ")";
    case StatementKind::importance_strict: return at(0) + " more important than " + at(1);
    case StatementKind::importance_indiff: return at(0) + " as important as " + at(1);
    case StatementKind::interaction_positive: return at(0) + " and " + at(1) + " synergic";
    case StatementKind::interaction_negative: return at(0) + " and " + at(1) + " redundant";
  }
  return "?";
}

void validate(const PreferenceStatement& st, const scale::NormalizedTable& table,
              std::size_t position) {
  const std::string field = "statements[" + std::to_string(position) + "]";
  if (st.items.size() != arity(st.kind)) {
    throw ValidationError(std::string(to_string(st.kind)) + " takes " +
                              std::to_string(arity(st.kind)) + " identifiers, got " +
                              std::to_string(st.items.size()),
                          field + ".items");
  }
  const auto& ids = about_criteria(st.kind) ? table.criteria : table.alternatives;
  const char* what = about_criteria(st.kind) ? "criterion" : "alternative";
  for (std::size_t k = 0; k < st.items.size(); ++k) {
    if (std::find(ids.begin(), ids.end(), st.items[k]) == ids.end()) {
      throw ValidationError("unknown " + std::string(what) + " '" + st.items[k] + "'",
                            field + ".items[" + std::to_string(k) + "]");
    }
  }
  if (st.items[0] == st.items[1] || (st.items.size() == 4 && st.items[2] == st.items[3])) {
    throw ValidationError(describe(st) + " compares an item with itself", field + ".items");
  }
}

std::size_t ConstraintSystem::alternative_index(std::string_view id) const {
  auto it = std::find(alternatives.begin(), alternatives.end(), id);
  if (it == alternatives.end()) throw ValidationError("unknown alternative '" + std::string(id) + "'");
  return static_cast<std::size_t>(it - alternatives.begin());
}

std::size_t ConstraintSystem::criterion_index(std::string_view id) const {
  auto it = std::find(criteria.begin(), criteria.end(), id);
  if (it == criteria.end()) throw ValidationError("unknown criterion '" + std::string(id) + "'");
  return static_cast<std::size_t>(it - criteria.begin());
}

lp::Expression ConstraintSystem::pair_mass(std::size_t i, std::size_t j) const {
  const auto k = choquet::pair_index(i, j, n());
  return {{pair_pos_vars[k], 1.0}, {pair_neg_vars[k], -1.0}};
}

lp::Expression ConstraintSystem::choquet(std::size_t alternative) const {
  const std::size_t cols = n();
  const std::span<const double> x(evaluations.data() + alternative * cols, cols);
  const auto f = choquet::features(x);
  lp::Expression e;
  for (std::size_t i = 0; i < cols; ++i) {
    if (f[i] != 0.0) e.push_back({singleton_vars[i], f[i]});
  }
  for (std::size_t k = 0; k < pair_pos_vars.size(); ++k) {
    const double v = f[cols + k];
    if (v == 0.0) continue;
    e.push_back({pair_pos_vars[k], v});
    e.push_back({pair_neg_vars[k], -v});
  }
  return e;
}

lp::Expression ConstraintSystem::shapley(std::size_t criterion) const {
  lp::Expression e{{singleton_vars[criterion], 1.0}};
  for (std::size_t j = 0; j < n(); ++j) {
    if (j == criterion) continue;
    add_scaled(e, pair_mass(criterion, j), 0.5);
  }
  return e;
}

choquet::MoebiusCapacity ConstraintSystem::capacity(const std::vector<double>& values) const {
  std::vector<double> s(n());
  std::vector<double> p(pair_pos_vars.size());
  for (std::size_t i = 0; i < n(); ++i) s[i] = values.at(singleton_vars[i]);
  for (std::size_t k = 0; k < p.size(); ++k) {
    p[k] = values.at(pair_pos_vars[k]) - values.at(pair_neg_vars[k]);
  }
  return choquet::MoebiusCapacity::two_additive(std::move(s), std::move(p));
}

ConstraintSystem compile(std::span<const PreferenceStatement> statements,
                         const scale::NormalizedTable& table) {
  ConstraintSystem s;
  s.criteria = table.criteria;
  s.alternatives = table.alternatives;
  s.evaluations = table.values;
  const std::size_t n = s.criteria.size();
  if (n == 0) throw ValidationError("at least one criterion is required");
  if (n > 32) throw ValidationError("at most 32 criteria are supported");
  for (std::size_t k = 0; k < s.evaluations.size(); ++k) {
    const double v = s.evaluations[k];
    if (!(v >= 0.0 && v <= 1.0)) {
      const auto a = k / n;
      throw ValidationError("normalized evaluation " + std::to_string(v) + " outside [0, 1]",
                            "table." + s.alternatives[a] + "." + s.criteria[k % n]);
    }
  }
  for (std::size_t k = 0; k < statements.size(); ++k) validate(statements[k], table, k);
  s.statements.assign(statements.begin(), statements.end());

  auto& p = s.program;
  for (std::size_t i = 0; i < n; ++i) s.singleton_vars.push_back(p.add_variable("m_" + s.criteria[i]));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto tag = s.criteria[i] + "_" + s.criteria[j];
      s.pair_pos_vars.push_back(p.add_variable("p_" + tag));
      s.pair_neg_vars.push_back(p.add_variable("q_" + tag));
    }
  }
  // Capped so programs with no strict statement stay bounded.
  s.epsilon = p.add_variable("eps", std::nullopt, 1.0);

  lp::Expression norm;
  for (auto v : s.singleton_vars) norm.push_back({v, 1.0});
  for (std::size_t k = 0; k < s.pair_pos_vars.size(); ++k) {
    norm.push_back({s.pair_pos_vars[k], 1.0});
    norm.push_back({s.pair_neg_vars[k], -1.0});
  }
  p.add_constraint(std::move(norm), lp::Relation::equal, 1.0, "normalization");
  for (std::size_t i = 0; i < n; ++i) {
    lp::Expression mono{{s.singleton_vars[i], 1.0}};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) mono.push_back({s.pair_neg_vars[choquet::pair_index(i, j, n)], -1.0});
    }
    p.add_constraint(std::move(mono), lp::Relation::greater_equal, 0.0,
                     "monotonicity_" + s.criteria[i]);
  }

  for (std::size_t k = 0; k < s.statements.size(); ++k) {
    auto row = statement_row(s, s.statements[k]);
    auto label = "s" + std::to_string(k) + "_" + std::string(to_string(s.statements[k].kind));
    p.add_constraint(std::move(row.lhs), row.relation, 0.0, label);
    s.statement_labels.push_back(std::move(label));
  }
  return s;
}

Feasibility feasibility(const ConstraintSystem& system) {
  const auto sol = lp::solve(max_epsilon(system));
  Feasibility f;
  if (sol.status == lp::Status::infeasible) {
    f.epsilon_star = std::numeric_limits<double>::quiet_NaN();
    return f;
  }
  if (sol.status == lp::Status::unbounded) {
    throw Error("max epsilon program reported unbounded despite the epsilon cap");
  }
  f.feasible = true;
  f.epsilon_star = sol.values[system.epsilon];
  f.point = sol.values;
  return f;
}

bool necessary(const ConstraintSystem& system, std::size_t a, std::size_t b) {
  if (a == b) return true;
  auto p = max_epsilon(system);
  // E^N(a, b): C(b) >= C(a) + eps.
  auto e = difference(system, b, a);
  e.push_back({system.epsilon, -1.0});
  p.add_constraint(std::move(e), lp::Relation::greater_equal, 0.0, "probe_necessary");
  const auto eps = epsilon_of(p, system.epsilon);
  return !eps || *eps <= kEpsilonTolerance;
}

bool possible(const ConstraintSystem& system, std::size_t a, std::size_t b) {
  if (a == b) return true;
  auto p = max_epsilon(system);
  // E^P(a, b): C(a) >= C(b).
  p.add_constraint(difference(system, a, b), lp::Relation::greater_equal, 0.0, "probe_possible");
  const auto eps = epsilon_of(p, system.epsilon);
  return eps && *eps > kEpsilonTolerance;
}

RelationMatrices relations(const ConstraintSystem& system, unsigned jobs) {
  const std::size_t na = system.alternatives.size();
  RelationMatrices r;
  r.alternatives = system.alternatives;
  r.necessary.assign(na * na, 0);
  r.possible.assign(na * na, 0);
  for (std::size_t a = 0; a < na; ++a) {
    r.necessary[a * na + a] = 1;
    r.possible[a * na + a] = 1;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < na; ++b) {
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, pairs.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= pairs.size() || failed.load()) return;
      const auto [a, b] = pairs[k];
      try {
        // Each cell is written by exactly one task.
        r.necessary[a * na + b] = necessary(system, a, b) ? 1 : 0;
        r.possible[a * na + b] = possible(system, a, b) ? 1 : 0;
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return r;
}

Representative most_representative(const ConstraintSystem& system,
                                   const RelationMatrices& rel) {
  const std::size_t na = system.alternatives.size();
  if (rel.size() != na) throw ValidationError("relation matrices do not match the system");

  // Stage 1: widen every strictly-necessary gap together with epsilon.
  auto stage1 = max_epsilon(system);
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < na; ++b) {
      if (a == b || !rel.nec(a, b) || rel.nec(b, a)) continue;
      auto e = difference(system, a, b);
      e.push_back({system.epsilon, -1.0});
      stage1.add_constraint(std::move(e), lp::Relation::greater_equal, 0.0,
                            "gap_" + system.alternatives[a] + "_" + system.alternatives[b]);
    }
  }
  const auto s1 = lp::solve(stage1);
  if (s1.status != lp::Status::optimal) {
    throw Error("no compatible capacity: stage 1 is " + lp::to_string(s1.status));
  }
  const double eps1 = s1.values[system.epsilon];
  if (eps1 <= kEpsilonTolerance) {
    throw Error("no compatible capacity: stage 1 epsilon is " + std::to_string(eps1));
  }

  // Stage 2: keep epsilon at its stage-1 optimum and squeeze the largest gap
  // between incomparable alternatives.
  auto stage2 = stage1;
  const auto delta = stage2.add_variable("delta");
  stage2.add_constraint({{system.epsilon, 1.0}}, lp::Relation::greater_equal, eps1 - kStageSlack,
                        "fix_eps");
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = a + 1; b < na; ++b) {
      if (rel.nec(a, b) || rel.nec(b, a)) continue;
      const auto tag = system.alternatives[a] + "_" + system.alternatives[b];
      auto up = difference(system, a, b);
      up.push_back({delta, -1.0});
      stage2.add_constraint(std::move(up), lp::Relation::less_equal, 0.0, "spread_hi_" + tag);
      auto down = difference(system, a, b);
      down.push_back({delta, 1.0});
      stage2.add_constraint(std::move(down), lp::Relation::greater_equal, 0.0, "spread_lo_" + tag);
    }
  }
  stage2.set_objective(lp::Sense::minimize, {{delta, 1.0}});
  const auto s2 = lp::solve(stage2);
  if (s2.status != lp::Status::optimal) {
    throw Error("stage 2 of the representative capacity is " + lp::to_string(s2.status));
  }
  Representative out;
  out.point.assign(s2.values.begin(), s2.values.begin() + static_cast<long>(system.program.variables().size()));
  out.capacity = system.capacity(out.point);
  out.epsilon = eps1;
  out.delta = s2.values[delta];
  return out;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      auto da = a.substr(i, ie - i);
      auto db = b.substr(j, je - j);
      while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
      while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

std::vector<RankedAlternative> rank(const choquet::MoebiusCapacity& capacity,
                                    const scale::NormalizedTable& table) {
  std::vector<RankedAlternative> out;
  out.reserve(table.rows());
  for (std::size_t a = 0; a < table.rows(); ++a) {
    out.push_back({table.alternatives[a], choquet::choquet_moebius(table.row(a), capacity), 0});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.value != y.value) return x.value > y.value;
    return natural_less(x.id, y.id);
  });
  // Group within tolerance of each group's leader, then order groups by id.
  std::size_t start = 0;
  int r = 0;
  while (start < out.size()) {
    std::size_t end = start + 1;
    while (end < out.size() && out[start].value - out[end].value <= kTieTolerance) ++end;
    ++r;
    for (std::size_t k = start; k < end; ++k) out[k].rank = r;
    std::stable_sort(out.begin() + static_cast<long>(start), out.begin() + static_cast<long>(end),
                     [](const auto& x, const auto& y) { return natural_less(x.id, y.id); });
    start = end;
  }
  return out;
}

std::vector<std::size_t> diagnose(std::span<const PreferenceStatement> statements,
                                  const scale::NormalizedTable& table) {
  std::vector<std::size_t> keep(statements.size());
  for (std::size_t k = 0; k < keep.size(); ++k) keep[k] = k;
  if (compatible_subset(statements, keep, table)) {
    throw Error("statements are compatible; nothing to diagnose");
  }
  for (std::size_t k = 0; k < statements.size(); ++k) {
    std::vector<std::size_t> trial;
    for (auto s : keep) {
      if (s != k) trial.push_back(s);
    }
    if (!compatible_subset(statements, trial, table)) keep = std::move(trial);
  }
  return keep;
}

double constraint_violation(const ConstraintSystem& system,
                            const choquet::MoebiusCapacity& capacity, double epsilon) {
  double worst = 0.0;
  for (const auto& v : choquet::validate(capacity, 0.0)) worst = std::max(worst, v.amount);
  const std::size_t n = system.n();
  std::vector<double> c(system.alternatives.size());
  for (std::size_t a = 0; a < c.size(); ++a) {
    const std::span<const double> x(system.evaluations.data() + a * n, n);
    c[a] = choquet::choquet_moebius(x, capacity);
  }
  const auto phi = choquet::shapley(capacity);
  for (const auto& st : system.statements) {
    const auto& it = st.items;
    auto alt = [&](std::size_t k) { return c[system.alternative_index(it[k])]; };
    auto crit = [&](std::size_t k) { return system.criterion_index(it[k]); };
    double lhs = 0.0;
    switch (st.kind) {
      case StatementKind::weak_pref:
      case StatementKind::strict_pref:
      case StatementKind::indifference: lhs = alt(0) - alt(1); break;
      case StatementKind::intensity_strict:
      case StatementKind::intensity_indiff: lhs = alt(0) - alt(1) - alt(2) + alt(3); break;
      case StatementKind::importance_strict:
      case StatementKind::importance_indiff: lhs = phi[crit(0)] - phi[crit(1)]; break;
      case StatementKind::interaction_positive:
        lhs = choquet::interaction(capacity, crit(0), crit(1));
        break;
      case StatementKind::interaction_negative:
        lhs = -choquet::interaction(capacity, crit(0), crit(1));
        break;
    }
    if (is_strict(st.kind)) lhs -= epsilon;
    const bool equality =
        st.kind == StatementKind::indifference || st.kind == StatementKind::intensity_indiff ||
        st.kind == StatementKind::importance_indiff;
    worst = std::max(worst, equality ? std::abs(lhs) : -lhs);
  }
  return worst;
}

SolveOutcome solve(std::span<const PreferenceStatement> statements,
                   const scale::NormalizedTable& table, const SolveOptions& options) {
  SolveOutcome out;
  const auto system = compile(statements, table);
  const auto f = feasibility(system);
  out.epsilon_star = f.feasible ? f.epsilon_star : 0.0;
  out.has_compatible_model = f.compatible();
  if (!out.has_compatible_model) {
    out.conflict = diagnose(statements, table);
    return out;
  }
  out.relations = relations(system, options.jobs);
  const auto rep = most_representative(system, out.relations);
  out.representative = rep.capacity;
  out.stage1_epsilon = rep.epsilon;
  out.stage2_delta = rep.delta;
  out.shapley = choquet::shapley(rep.capacity);
  out.ranking = rank(rep.capacity, table);
  return out;
}

}  // namespace pahp::naror
