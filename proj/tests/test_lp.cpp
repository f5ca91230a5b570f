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

#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "pahp/error.hpp"
#include "pahp/lp.hpp"

using namespace pahp;
using namespace pahp::lp;

namespace {

struct Dense {
  std::vector<std::vector<double>> a;
  std::vector<Relation> rel;
  std::vector<double> b;
  std::vector<double> c;
  std::vector<double> lo, hi;  // finite box
};

LinearProgram to_program(const Dense& d, Sense sense) {
  LinearProgram p;
  for (std::size_t j = 0; j < d.c.size(); ++j) p.add_variable("x" + std::to_string(j), d.lo[j], d.hi[j]);
  Expression obj;
  for (std::size_t j = 0; j < d.c.size(); ++j) obj.push_back({j, d.c[j]});
  p.set_objective(sense, obj);
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    Expression e;
    for (std::size_t j = 0; j < d.c.size(); ++j) {
      if (d.a[i][j] != 0.0) e.push_back({j, d.a[i][j]});
    }
    p.add_constraint(e, d.rel[i], d.b[i], "r" + std::to_string(i));
  }
  return p;
}

// Solves a small square system by Gaussian elimination; false if singular.
bool solve_square(std::vector<std::vector<double>> m, std::vector<double> r, std::vector<double>& x) {
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i][k]) > std::abs(m[p][k])) p = i;
    if (std::abs(m[p][k]) < 1e-10) return false;
    std::swap(m[k], m[p]);
    std::swap(r[k], r[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      r[i] -= f * r[k];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double s = r[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= m[k][j] * x[j];
    x[k] = s / m[k][k];
  }
  return true;
}

// Vertex enumeration: every choice of n tight rows among constraints and box
// faces; the best feasible vertex is the optimum of a bounded program.
// Returns NaN when no vertex is feasible.
double vertex_oracle(const Dense& d, Sense sense) {
  const std::size_t n = d.c.size();
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    rows.push_back(d.a[i]);
    rhs.push_back(d.b[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    rows.push_back(e);
    rhs.push_back(d.lo[j]);
    rows.push_back(e);
    rhs.push_back(d.hi[j]);
  }
  const std::size_t m = rows.size();
  double best = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
    if (depth == n) {
      std::vector<std::vector<double>> sm;
      std::vector<double> sr;
      for (auto k : pick) {
        sm.push_back(rows[k]);
        sr.push_back(rhs[k]);
      }
      std::vector<double> x;
      if (!solve_square(sm, sr, x)) return;
      for (std::size_t j = 0; j < n; ++j)
        if (x[j] < d.lo[j] - 1e-9 || x[j] > d.hi[j] + 1e-9) return;
      for (std::size_t i = 0; i < d.a.size(); ++i) {
        double v = 0.0;
        for (std::size_t j = 0; j < n; ++j) v += d.a[i][j] * x[j];
        if (d.rel[i] == Relation::less_equal && v > d.b[i] + 1e-9) return;
        if (d.rel[i] == Relation::greater_equal && v < d.b[i] - 1e-9) return;
        if (d.rel[i] == Relation::equal && std::abs(v - d.b[i]) > 1e-9) return;
      }
      double obj = 0.0;
      for (std::size_t j = 0; j < n; ++j) obj += d.c[j] * x[j];
      if (std::isnan(best) || (sense == Sense::maximize ? obj > best : obj < best)) best = obj;
      return;
    }
    for (std::size_t k = start; k < m; ++k) {
      pick[depth] = k;
      rec(depth + 1, k + 1);
    }
  };
  rec(0, 0);
  return best;
}

Dense random_dense(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> rel(0, 5);
  Dense d;
  for (std::size_t j = 0; j < n; ++j) {
    d.c.push_back(coef(rng));
    d.lo.push_back(coef(rng) < 0 ? -3.0 : 0.0);
    d.hi.push_back(d.lo.back() + 2 + std::abs(coef(rng)));
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(n);
    for (auto& v : row) v = coef(rng);
    d.a.push_back(row);
    const int r = rel(rng);
    d.rel.push_back(r == 0 ? Relation::equal : r < 3 ? Relation::greater_equal : Relation::less_equal);
    d.b.push_back(coef(rng));
  }
  return d;
}

}  // namespace

TEST_CASE("textbook examples") {
  SUBCASE("max x, x <= 1") {
    LinearProgram p;
    const auto x = p.add_variable("x");
    p.set_objective(Sense::maximize, {{x, 1.0}});
    p.add_constraint({{x, 1.0}}, Relation::less_equal, 1.0, "cap");
    const auto s = solve(p);
    CHECK(s.status == Status::optimal);
    CHECK(s.values[x] == doctest::Approx(1.0));
    CHECK(s.objective_value == doctest::Approx(1.0));
    CHECK(s.active_labels == std::vector<std::string>{"cap"});
  }
  SUBCASE("x >= 1 and x <= 0 is infeasible") {
    LinearProgram p;
    const auto x = p.add_variable("x");
    p.set_objective(Sense::maximize, {{x, 1.0}});
    p.add_constraint({{x, 1.0}}, Relation::greater_equal, 1.0, "lo");
    p.add_constraint({{x, 1.0}}, Relation::less_equal, 0.0, "hi");
    CHECK(solve(p).status == Status::infeasible);
  }
  SUBCASE("symmetric squeeze on a free epsilon") {
    LinearProgram p;
    const auto a = p.add_variable("a", 0.0, 1.0);
    const auto b = p.add_variable("b", 0.0, 1.0);
    const auto e = p.add_free_variable("eps");
    p.set_objective(Sense::maximize, {{e, 1.0}});
    p.add_constraint({{a, 1.0}, {b, -1.0}, {e, -1.0}}, Relation::greater_equal, 0.0, "ab");
    p.add_constraint({{b, 1.0}, {a, -1.0}, {e, -1.0}}, Relation::greater_equal, 0.0, "ba");
    const auto s = solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(std::abs(s.values[e]) <= 1e-12);
  }
  SUBCASE("unbounded") {
    LinearProgram p;
    const auto x = p.add_variable("x");
    const auto y = p.add_variable("y");
    p.set_objective(Sense::maximize, {{x, 1.0}});
    p.add_constraint({{x, 1.0}, {y, -1.0}}, Relation::less_equal, 1.0, "r");
    CHECK(solve(p).status == Status::unbounded);
  }
  SUBCASE("negative epsilon optimum through a free variable") {
    LinearProgram p;
    const auto a = p.add_variable("a", 0.0, 1.0);
    const auto e = p.add_free_variable("eps");
    p.set_objective(Sense::maximize, {{e, 1.0}});
    p.add_constraint({{a, -1.0}, {e, -1.0}}, Relation::greater_equal, 0.5, "r");
    const auto s = solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(s.values[e] == doctest::Approx(-0.5));
  }
  SUBCASE("upper-bounded only and shifted variables") {
    LinearProgram p;
    const auto x = p.add_variable("x", std::nullopt, 4.0);
    const auto y = p.add_variable("y", 2.0, 3.0);
    p.set_objective(Sense::minimize, {{x, 1.0}, {y, 1.0}});
    p.add_constraint({{x, 1.0}, {y, 1.0}}, Relation::greater_equal, -1.0, "floor");
    const auto s = solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(s.objective_value == doctest::Approx(-1.0));
    CHECK(s.values[y] >= 2.0 - 1e-12);
  }
  SUBCASE("redundant equality rows") {
    LinearProgram p;
    const auto x = p.add_variable("x");
    const auto y = p.add_variable("y");
    p.set_objective(Sense::maximize, {{x, 1.0}});
    p.add_constraint({{x, 1.0}, {y, 1.0}}, Relation::equal, 1.0, "e1");
    p.add_constraint({{x, 2.0}, {y, 2.0}}, Relation::equal, 2.0, "e2");
    const auto s = solve(p);
    REQUIRE(s.status == Status::optimal);
    CHECK(s.values[x] == doctest::Approx(1.0));
  }
}

TEST_CASE("program validation") {
  LinearProgram p;
  const auto x = p.add_variable("x");
  CHECK_THROWS_AS(p.add_variable("x"), ValidationError);
  CHECK_THROWS_AS(p.add_variable(""), ValidationError);
  CHECK_THROWS_AS(p.add_variable("y", 2.0, 1.0), ValidationError);
  p.add_constraint({{x, 1.0}}, Relation::less_equal, 1.0, "c");
  CHECK_THROWS_AS(p.add_constraint({{x, 1.0}}, Relation::less_equal, 1.0, "c"), ValidationError);
  CHECK_THROWS_AS(p.add_constraint({{x, 1.0}}, Relation::less_equal, 1.0, ""), ValidationError);
  CHECK_THROWS_AS(p.add_constraint({{7, 1.0}}, Relation::less_equal, 1.0, "d"), ValidationError);
  CHECK_THROWS_AS(p.set_objective(Sense::maximize, {{x, NAN}}), ValidationError);
  CHECK(p.find_variable("x") == x);
  CHECK_FALSE(p.find_variable("z").has_value());
  CHECK(p.has_label("c"));
}

TEST_CASE("pivot limit raises SolverStall") {
  LinearProgram p;
  std::vector<std::size_t> v;
  Expression obj;
  for (int j = 0; j < 6; ++j) {
    v.push_back(p.add_variable("x" + std::to_string(j)));
    obj.push_back({v.back(), 1.0 + j});
  }
  p.set_objective(Sense::maximize, obj);
  for (int i = 0; i < 6; ++i) {
    Expression e;
    for (int j = 0; j < 6; ++j) e.push_back({v[j], 1.0 + ((i + j) % 3)});
    p.add_constraint(e, Relation::less_equal, 10.0 + i, "r" + std::to_string(i));
  }
  SolverOptions o;
  o.max_pivots = 1;
  CHECK_THROWS_AS(solve(p, o), SolverStall);
  CHECK(solve(p).status == Status::optimal);
}

TEST_CASE("random programs agree with vertex enumeration") {
  std::mt19937_64 rng(123);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    const std::size_t m = 1 + static_cast<std::size_t>(trial % 4);
    const auto d = random_dense(rng, n, m);
    const auto sense = trial % 2 ? Sense::maximize : Sense::minimize;
    const auto p = to_program(d, sense);
    const auto s = solve(p);
    const double oracle = vertex_oracle(d, sense);
    CAPTURE(trial);
    CHECK(s.status != Status::unbounded);  // finite box
    if (std::isnan(oracle)) {
      CHECK(s.status == Status::infeasible);
      ++infeasible;
    } else {
      REQUIRE(s.status == Status::optimal);
      CHECK(std::abs(s.objective_value - oracle) <= 1e-7);
      CHECK(max_violation(p, s.values) <= 1e-7);
      ++optimal;
    }
  }
  CHECK(optimal > 50);
  CHECK(infeasible > 10);
}

TEST_CASE("duality on random packing programs") {
  std::mt19937_64 rng(321);
  std::uniform_int_distribution<int> pos(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 5), m = 2 + static_cast<std::size_t>(trial % 4);
    std::vector<std::vector<double>> a(m, std::vector<double>(n));
    std::vector<double> b(m), c(n);
    for (auto& r : a)
      for (auto& v : r) v = pos(rng);
    for (auto& v : b) v = pos(rng) * 3;
    for (auto& v : c) v = pos(rng);

    // Primal: max c x, A x <= b, x >= 0.
    LinearProgram primal;
    Expression obj;
    for (std::size_t j = 0; j < n; ++j) obj.push_back({primal.add_variable("x" + std::to_string(j)), c[j]});
    primal.set_objective(Sense::maximize, obj);
    for (std::size_t i = 0; i < m; ++i) {
      Expression e;
      for (std::size_t j = 0; j < n; ++j) e.push_back({j, a[i][j]});
      primal.add_constraint(e, Relation::less_equal, b[i], "p" + std::to_string(i));
    }
    const auto ps = solve(primal);
    REQUIRE(ps.status == Status::optimal);

    // Hand-built dual point: y_i = max_j c_j is feasible for A^T y >= c
    // because every a_ij >= 1.
    double t = 0.0;
    for (std::size_t j = 0; j < n; ++j) t = std::max(t, c[j]);
    double weak = 0.0;
    for (std::size_t i = 0; i < m; ++i) weak += b[i] * t;
    CHECK(ps.objective_value <= weak + 1e-9);

    // Dual: min b y, A^T y >= c, y >= 0; strong duality.
    LinearProgram dual;
    Expression dobj;
    for (std::size_t i = 0; i < m; ++i) dobj.push_back({dual.add_variable("y" + std::to_string(i)), b[i]});
    dual.set_objective(Sense::minimize, dobj);
    for (std::size_t j = 0; j < n; ++j) {
      Expression e;
      for (std::size_t i = 0; i < m; ++i) e.push_back({i, a[i][j]});
      dual.add_constraint(e, Relation::greater_equal, c[j], "d" + std::to_string(j));
    }
    const auto ds = solve(dual);
    REQUIRE(ds.status == Status::optimal);
    CHECK(std::abs(ps.objective_value - ds.objective_value) <= 1e-7);
  }
}

TEST_CASE("identical programs give bitwise identical solutions") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = random_dense(rng, 4, 4);
    const auto p = to_program(d, Sense::maximize);
    const auto a = solve(p);
    const auto b = solve(p);
    CHECK(a.status == b.status);
    CHECK(a.values == b.values);
    CHECK(a.pivots == b.pivots);
  }
}

TEST_CASE("LP listing") {
  LinearProgram p;
  const auto x = p.add_variable("x");
  const auto e = p.add_variable("eps", std::nullopt, 1.0);
  p.set_objective(Sense::maximize, {{e, 1.0}});
  p.add_constraint({{x, 1.0}, {e, -1.0}}, Relation::greater_equal, 0.0, "s0_strict_pref");
  const auto text = to_lp_format(p);
  CHECK(text.find("Maximize") == 0);
  CHECK(text.find(" s0_strict_pref: + 1 x - 1 eps >= 0") != std::string::npos);
  CHECK(text.find("-inf <= eps <= 1") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
  CHECK(to_string(Status::unbounded) == "unbounded");
}
