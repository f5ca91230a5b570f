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

// Pairwise comparison matrices, priority derivation and consistency analysis.
//
// Judgments are kept as exact rationals so that reciprocity is exact; floating
// point only enters when priorities are derived.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pahp::ahp {

/// Positive rational in lowest terms.
class Ratio {
 public:
  Ratio() = default;
  /// Throws ValidationError unless num > 0 and den > 0.
  Ratio(std::int64_t num, std::int64_t den);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  Ratio reciprocal() const noexcept;

  /// True when the value or its reciprocal is an integer in 1..9.
  bool on_saaty_scale() const noexcept;

  /// "3", "1/7", "5/3".
  std::string to_string() const;
  /// Accepts "k" or "p/q" with positive integers.
  static Ratio parse(std::string_view text);

  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

/// The 17 values of the nine-point scale, ascending: 1/9 ... 1/2, 1, 2 ... 9.
std::span<const Ratio> saaty_values();

/// One upper-triangle record of the exchange format.
struct Comparison {
  std::string row_item;
  std::string col_item;
  Ratio value;

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

enum class ScaleCheck { saaty, any_positive };

class PairwiseMatrix {
 public:
  PairwiseMatrix() = default;

  /// Builds a reciprocal matrix from one judgment per unordered item pair.
  /// Each record must have row_item before col_item in `items` order.
  /// Throws ValidationError on a missing, duplicate or misoriented pair, an
  /// unknown item, fewer than two items, or a value off the nine-point scale
  /// (unless `check` is any_positive).
  static PairwiseMatrix build(std::vector<std::string> items, std::span<const Comparison> upper,
                              ScaleCheck check = ScaleCheck::saaty);

  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<std::string>& items() const noexcept { return items_; }
  const Ratio& ratio(std::size_t r, std::size_t s) const { return entries_.at(r * size() + s); }
  double operator()(std::size_t r, std::size_t s) const { return values_.at(r * size() + s); }
  /// Row-major doubles.
  std::span<const double> values() const noexcept { return values_; }

  /// Upper triangle in row-major order, i.e. the exchange records.
  std::vector<Comparison> upper_triangle() const;

  friend bool operator==(const PairwiseMatrix& a, const PairwiseMatrix& b) {
    return a.items_ == b.items_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<std::string> items_;
  std::vector<Ratio> entries_;
  std::vector<double> values_;
};

enum class PriorityMethod { eigenvector, row_geometric_mean, row_arithmetic_mean };

std::string_view to_string(PriorityMethod method) noexcept;

struct PriorityVector {
  std::vector<double> weights;
  PriorityMethod method = PriorityMethod::eigenvector;
};

struct PowerIterationOptions {
  double tolerance = 1e-10;
  int max_iterations = 10000;
};

struct EigenResult {
  PriorityVector priorities;
  double lambda_max = 0.0;
  int iterations = 0;
};

/// Power iteration from the uniform vector, L1-normalised at every step,
/// stopping once successive iterates differ by less than the tolerance in max
/// norm. lambda_max is the sum of A*v for the final normalised v.
/// Throws ConvergenceError when max_iterations is exhausted.
EigenResult principal_eigen(const PairwiseMatrix& matrix, PowerIterationOptions options = {});

/// Unnormalised (prod_s a_rs)^(1/n).
std::vector<double> row_geometric_mean_raw(const PairwiseMatrix& matrix);
PriorityVector row_geometric_mean(const PairwiseMatrix& matrix);

/// Unnormalised (sum_s a_rs) / n.
std::vector<double> row_arithmetic_mean_raw(const PairwiseMatrix& matrix);
PriorityVector row_arithmetic_mean(const PairwiseMatrix& matrix);

PriorityVector priorities(const PairwiseMatrix& matrix, PriorityMethod method);

/// Where the random index comes from.
struct RandomIndexSource {
  enum class Mode { tabled, monte_carlo };
  Mode mode = Mode::tabled;
  int samples = 500;
  std::uint64_t seed = 0;

  static RandomIndexSource tabled() { return {}; }
  static RandomIndexSource monte_carlo(int samples, std::uint64_t seed) {
    return {Mode::monte_carlo, samples, seed};
  }
};

/// Classic values for n = 1..10. Throws std::out_of_range outside that range.
double tabled_random_index(int n);

/// Reciprocal matrix whose upper triangle is drawn uniformly from the 17
/// scale values. Items are "0".."n-1".
PairwiseMatrix random_reciprocal_matrix(int n, std::mt19937_64& rng);

/// Mean consistency index over `samples` random reciprocal matrices.
/// Requires 3 <= n <= 15 and samples >= 1.
double random_index(int n, int samples, std::uint64_t seed);

/// Tabled value for n <= 10, Monte Carlo otherwise (or always, in
/// monte_carlo mode).
double random_index(int n, const RandomIndexSource& source);

inline constexpr double kAcceptableConsistencyRatio = 0.10;

struct ConsistencyReport {
  double lambda_max = 0.0;
  double ci = 0.0;
  double ri = 0.0;
  double cr = 0.0;
  bool acceptable = true;
  /// ri == 0 while ci > 0; cr is +infinity.
  bool degenerate = false;
};

ConsistencyReport consistency(const PairwiseMatrix& matrix,
                              const RandomIndexSource& source = RandomIndexSource::tabled());

/// a_rs * a_sk == a_rk within relative tolerance, for every triple.
bool is_cardinally_consistent(const PairwiseMatrix& matrix, double tolerance = 1e-9);

/// U(a) = sum_j e_a^(j) * w_j. Every per-criterion vector must have the same
/// length and `weights` one entry per criterion; throws ValidationError
/// otherwise.
std::vector<double> classic_ahp_score(std::span<const PriorityVector> per_criterion,
                                      const PriorityVector& weights);

}  // namespace pahp::ahp
