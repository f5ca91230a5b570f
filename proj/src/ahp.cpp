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

#include "pahp/ahp.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pahp/error.hpp"
#include "pahp/kernels.hpp"

namespace pahp::ahp {

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) {
    throw ValidationError("judgment must be a positive ratio, got " + std::to_string(num) + "/" +
                          std::to_string(den));
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Ratio Ratio::reciprocal() const noexcept {
  Ratio r;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

bool Ratio::on_saaty_scale() const noexcept {
  return (den_ == 1 && num_ >= 1 && num_ <= 9) || (num_ == 1 && den_ >= 1 && den_ <= 9);
}

std::string Ratio::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_positive(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw ValidationError("not a judgment: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Ratio Ratio::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Ratio(parse_positive(text, text), 1);
  return Ratio(parse_positive(text.substr(0, slash), text),
               parse_positive(text.substr(slash + 1), text));
}

std::span<const Ratio> saaty_values() {
  static const std::array<Ratio, 17> values = [] {
    std::array<Ratio, 17> v;
    for (int k = 9; k >= 2; --k) v[9 - k] = Ratio(1, k);
    for (int k = 1; k <= 9; ++k) v[7 + k] = Ratio(k, 1);
    return v;
  }();
  return values;
}

PairwiseMatrix PairwiseMatrix::build(std::vector<std::string> items,
                                     std::span<const Comparison> upper, ScaleCheck check) {
  const std::size_t n = items.size();
  if (n < 2) throw ValidationError("a pairwise matrix needs at least two items");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (items[i] == items[j]) throw ValidationError("duplicate item '" + items[i] + "'");
    }
  }
  auto index_of = [&](const std::string& id) {
    const auto it = std::find(items.begin(), items.end(), id);
    if (it == items.end()) throw ValidationError("unknown item '" + id + "'");
    return static_cast<std::size_t>(it - items.begin());
  };

  PairwiseMatrix m;
  m.entries_.assign(n * n, Ratio{});
  std::vector<char> seen(n * n, 0);
  for (const auto& c : upper) {
    const std::size_t r = index_of(c.row_item);
    const std::size_t s = index_of(c.col_item);
    if (r == s) throw ValidationError("diagonal judgment for '" + c.row_item + "'");
    if (r > s) {
      throw ValidationError("judgment (" + c.row_item + ", " + c.col_item +
                            ") is not in the upper triangle");
    }
    if (seen[r * n + s]) {
      throw ValidationError("duplicate judgment for pair (" + c.row_item + ", " + c.col_item + ")");
    }
    if (check == ScaleCheck::saaty && !c.value.on_saaty_scale()) {
      throw ValidationError("judgment " + c.value.to_string() + " for (" + c.row_item + ", " +
                            c.col_item + ") is not on the nine-point scale");
    }
    seen[r * n + s] = 1;
    m.entries_[r * n + s] = c.value;
    m.entries_[s * n + r] = c.value.reciprocal();
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r + 1; s < n; ++s) {
      if (!seen[r * n + s]) {
        throw ValidationError("missing judgment for pair (" + items[r] + ", " + items[s] + ")");
      }
    }
  }
  m.values_.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) m.values_[k] = m.entries_[k].value();
  m.items_ = std::move(items);
  return m;
}

std::vector<Comparison> PairwiseMatrix::upper_triangle() const {
  std::vector<Comparison> out;
  const std::size_t n = size();
  out.reserve(n * (n - 1) / 2);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r + 1; s < n; ++s) out.push_back({items_[r], items_[s], ratio(r, s)});
  }
  return out;
}

std::string_view to_string(PriorityMethod method) noexcept {
  switch (method) {
    case PriorityMethod::eigenvector: return "eigenvector";
    case PriorityMethod::row_geometric_mean: return "row-geometric-mean";
    case PriorityMethod::row_arithmetic_mean: return "row-arithmetic-mean";
  }
  return "unknown";
}

namespace {

std::vector<double> normalized(std::vector<double> v) {
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  for (double& x : v) x /= total;
  return v;
}

}  // namespace

EigenResult principal_eigen(const PairwiseMatrix& matrix, PowerIterationOptions options) {
  if (!(options.tolerance > 0.0)) throw ValidationError("power iteration tolerance must be > 0");
  const std::size_t n = matrix.size();
  const auto a = matrix.values();
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (int it = 1; it <= options.max_iterations; ++it) {
    for (std::size_t r = 0; r < n; ++r) next[r] = kernels::dot(a.subspan(r * n, n), v);
    const double lambda = std::accumulate(next.begin(), next.end(), 0.0);
    double diff = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      next[r] /= lambda;
      diff = std::max(diff, std::abs(next[r] - v[r]));
    }
    v.swap(next);
    if (diff < options.tolerance) {
      return {{v, PriorityMethod::eigenvector}, lambda, it};
    }
  }
  throw ConvergenceError("power iteration did not converge within " +
                             std::to_string(options.max_iterations) + " iterations",
                         options.max_iterations);
}

std::vector<double> row_geometric_mean_raw(const PairwiseMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<double> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    double log_sum = 0.0;
    for (std::size_t s = 0; s < n; ++s) log_sum += std::log(matrix(r, s));
    out[r] = std::exp(log_sum / static_cast<double>(n));
  }
  return out;
}

PriorityVector row_geometric_mean(const PairwiseMatrix& matrix) {
  return {normalized(row_geometric_mean_raw(matrix)), PriorityMethod::row_geometric_mean};
}

std::vector<double> row_arithmetic_mean_raw(const PairwiseMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<double> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    double sum = 0.0;
    for (std::size_t s = 0; s < n; ++s) sum += matrix(r, s);
    out[r] = sum / static_cast<double>(n);
  }
  return out;
}

PriorityVector row_arithmetic_mean(const PairwiseMatrix& matrix) {
  return {normalized(row_arithmetic_mean_raw(matrix)), PriorityMethod::row_arithmetic_mean};
}

PriorityVector priorities(const PairwiseMatrix& matrix, PriorityMethod method) {
  switch (method) {
    case PriorityMethod::eigenvector: return principal_eigen(matrix).priorities;
    case PriorityMethod::row_geometric_mean: return row_geometric_mean(matrix);
    case PriorityMethod::row_arithmetic_mean: return row_arithmetic_mean(matrix);
  }
  throw std::invalid_argument("unknown priority method");
}

double tabled_random_index(int n) {
  static constexpr std::array<double, 10> kTable{0.0,  0.0,  0.58, 0.90, 1.12,
                                                 1.24, 1.32, 1.41, 1.45, 1.49};
  if (n < 1 || n > 10) throw std::out_of_range("no tabled random index for n=" + std::to_string(n));
  return kTable[static_cast<std::size_t>(n - 1)];
}

PairwiseMatrix random_reciprocal_matrix(int n, std::mt19937_64& rng) {
  const auto scale = saaty_values();
  std::vector<std::string> items;
  for (int i = 0; i < n; ++i) items.push_back(std::to_string(i));
  std::vector<Comparison> upper;
  for (int r = 0; r < n; ++r) {
    for (int s = r + 1; s < n; ++s) {
      // Modulo bias over 2^64 draws is below 1e-18.
      const auto pick = static_cast<std::size_t>(rng() % scale.size());
      upper.push_back({items[r], items[s], scale[pick]});
    }
  }
  return PairwiseMatrix::build(std::move(items), upper);
}

double random_index(int n, int samples, std::uint64_t seed) {
  if (n < 3 || n > 15) throw ValidationError("random index needs 3 <= n <= 15");
  if (samples < 1) throw ValidationError("random index needs at least one sample");
  std::mt19937_64 rng(seed);
  double total = 0.0;
  for (int k = 0; k < samples; ++k) {
    const auto m = random_reciprocal_matrix(n, rng);
    const double lambda = principal_eigen(m).lambda_max;
    total += (lambda - n) / (n - 1);
  }
  return total / samples;
}

double random_index(int n, const RandomIndexSource& source) {
  if (source.mode == RandomIndexSource::Mode::tabled && n <= 10) return tabled_random_index(n);
  if (n < 3) return 0.0;
  return random_index(n, source.samples, source.seed);
}

ConsistencyReport consistency(const PairwiseMatrix& matrix, const RandomIndexSource& source) {
  const int n = static_cast<int>(matrix.size());
  ConsistencyReport report;
  report.lambda_max = principal_eigen(matrix).lambda_max;
  if (n <= 2) {
    // Every 2x2 reciprocal matrix is consistent.
    report.ci = 0.0;
    report.ri = n >= 1 ? random_index(n, source) : 0.0;
    report.cr = 0.0;
    report.acceptable = true;
    return report;
  }
  report.ci = (report.lambda_max - n) / (n - 1);
  report.ri = random_index(n, source);
  if (report.ri > 0.0) {
    report.cr = report.ci / report.ri;
  } else if (report.ci > 0.0) {
    report.cr = std::numeric_limits<double>::infinity();
    report.degenerate = true;
  }
  report.acceptable = !report.degenerate && report.cr <= kAcceptableConsistencyRatio;
  return report;
}

bool is_cardinally_consistent(const PairwiseMatrix& matrix, double tolerance) {
  const std::size_t n = matrix.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t k = 0; k < n; ++k) {
        const double lhs = matrix(r, s) * matrix(s, k);
        const double rhs = matrix(r, k);
        if (std::abs(lhs - rhs) > tolerance * rhs) return false;
      }
    }
  }
  return true;
}

std::vector<double> classic_ahp_score(std::span<const PriorityVector> per_criterion,
                                      const PriorityVector& weights) {
  if (per_criterion.size() != weights.weights.size()) {
    throw ValidationError("criterion count mismatch: " + std::to_string(per_criterion.size()) +
                          " priority vectors, " + std::to_string(weights.weights.size()) +
                          " weights");
  }
  if (per_criterion.empty()) return {};
  const std::size_t alternatives = per_criterion.front().weights.size();
  std::vector<double> score(alternatives, 0.0);
  for (std::size_t j = 0; j < per_criterion.size(); ++j) {
    const auto& e = per_criterion[j].weights;
    if (e.size() != alternatives) {
      throw ValidationError("criterion " + std::to_string(j) + " has " + std::to_string(e.size()) +
                            " priorities, expected " + std::to_string(alternatives));
    }
    for (std::size_t a = 0; a < alternatives; ++a) score[a] += e[a] * weights.weights[j];
  }
  return score;
}

}  // namespace pahp::ahp
