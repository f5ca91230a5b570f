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

// Capacities (fuzzy measures), their Moebius representation, the Choquet
// integral in both forms, and Shapley / interaction indices for 2-additive
// capacities.
//
// Criterion subsets are bitmasks over criterion indices (bit i = criterion i).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pahp::choquet {

using Mask = std::uint32_t;

constexpr Mask singleton(std::size_t i) noexcept { return Mask{1} << i; }
constexpr Mask full_set(std::size_t n) noexcept {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Sorted criterion indices in `mask`.
std::vector<std::size_t> members(Mask mask);

/// Position of the pair {i, j} (i != j) in lexicographic pair order over n.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);

/// Dense set function over all 2^n subsets, indexed by mask.
struct Capacity {
  std::size_t n = 0;
  std::vector<double> values;

  double operator()(Mask s) const { return values.at(s); }
};

enum class Additivity { general, two_additive };

class MoebiusCapacity {
 public:
  MoebiusCapacity() = default;

  /// 2-additive masses: `singletons` has n entries, `pairs` n(n-1)/2 in
  /// lexicographic order. No validation (see validate()).
  static MoebiusCapacity two_additive(std::vector<double> singletons, std::vector<double> pairs);

  /// General masses over all 2^n subsets, indexed by mask; masses[0] must be 0.
  /// Limited to n <= 20.
  static MoebiusCapacity general(std::size_t n, std::vector<double> masses);

  /// Uniform additive capacity, 1/n on each singleton.
  static MoebiusCapacity uniform(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Additivity additivity() const noexcept { return additivity_; }

  /// m(T); zero for |T| > 2 on a 2-additive capacity.
  double mass(Mask subset) const;

  /// 2-additive only: singleton and pair blocks.
  std::span<const double> singleton_masses() const;
  std::span<const double> pair_masses() const;

  /// Singletons followed by pairs; the coefficient vector that the Choquet
  /// feature expansion is dotted with. 2-additive only.
  std::vector<double> coefficients() const;

  /// Re-expresses a general capacity whose masses vanish on subsets larger
  /// than pairs (within `tolerance`). Throws ValidationError otherwise.
  MoebiusCapacity to_two_additive(double tolerance = 1e-12) const;

  friend bool operator==(const MoebiusCapacity&, const MoebiusCapacity&) = default;

 private:
  std::size_t n_ = 0;
  Additivity additivity_ = Additivity::two_additive;
  std::vector<double> singles_;
  std::vector<double> pairs_;
  std::vector<double> dense_;
};

/// mu(S) = sum over B subset of S of m(B).
double moebius_to_capacity(const MoebiusCapacity& m, Mask subset);

/// Whole capacity (n <= 20).
Capacity to_capacity(const MoebiusCapacity& m);

/// Moebius inversion m(S) = sum_{B subset S} (-1)^{|S \ B|} mu(B).
/// Throws ValidationError if mu is not normalised (mu(empty)=0, mu(G)=1) or
/// not monotone, within 1e-12.
MoebiusCapacity capacity_to_moebius(const Capacity& mu);

/// Choquet integral from its definition: sort ascending, weight increments by
/// the capacity of the upper sets.
double choquet_general(std::span<const double> x, const Capacity& mu);

/// sum_T m(T) * min_{i in T} x_i.
double choquet_moebius(std::span<const double> x, const MoebiusCapacity& m);

/// x followed by min(x_i, x_j) in pair order. choquet_moebius(x, m) for a
/// 2-additive m equals dot(features(x), m.coefficients()).
std::vector<double> features(std::span<const double> x);
void features(std::span<const double> x, std::span<double> out);

struct Violation {
  /// "normalization", "singleton_nonnegativity", "monotonicity",
  /// "empty_set", "additivity".
  std::string constraint;
  /// Criterion the monotonicity instance is anchored on, or -1.
  int criterion = -1;
  /// T of the violated instance (for 2-additive monotonicity: the criteria
  /// with negative interaction, which is the tightest instance).
  Mask subset = 0;
  /// How far the constraint is violated (positive).
  double amount = 0.0;
  std::string message;
};

inline constexpr double kValidationTolerance = 1e-9;

/// Empty iff the capacity is normalised and monotone within tolerance.
std::vector<Violation> validate(const MoebiusCapacity& m, double tolerance = kValidationTolerance);

/// phi_i = m_i + sum_j m_ij / 2. Throws ValidationError for a general
/// capacity.
std::vector<double> shapley(const MoebiusCapacity& m);

/// m({i, j}). Throws ValidationError for i == j or a general capacity.
double interaction(const MoebiusCapacity& m, std::size_t i, std::size_t j);

}  // namespace pahp::choquet
