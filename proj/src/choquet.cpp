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

#include "pahp/choquet.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pahp/error.hpp"
#include "pahp/kernels.hpp"

namespace pahp::choquet {

namespace {

constexpr std::size_t kMaxDense = 20;

std::string describe(Mask mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i : members(mask)) {
    os << (first ? "" : ",") << 'g' << (i + 1);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

std::vector<std::size_t> members(Mask mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i == j) throw ValidationError("pair index needs two distinct criteria");
  if (i > j) std::swap(i, j);
  // Pairs (0,1)..(0,n-1) come first, then (1,2).., so row i starts after
  // sum_{k<i} (n-1-k) entries.
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

MoebiusCapacity MoebiusCapacity::two_additive(std::vector<double> singletons,
                                              std::vector<double> pairs) {
  const std::size_t n = singletons.size();
  if (pairs.size() != kernels::pair_count(n)) {
    throw ValidationError("2-additive capacity over " + std::to_string(n) + " criteria needs " +
                          std::to_string(kernels::pair_count(n)) + " pair masses, got " +
                          std::to_string(pairs.size()));
  }
  if (n > 32) throw ValidationError("at most 32 criteria are supported");
  MoebiusCapacity m;
  m.n_ = n;
  m.additivity_ = Additivity::two_additive;
  m.singles_ = std::move(singletons);
  m.pairs_ = std::move(pairs);
  return m;
}

MoebiusCapacity MoebiusCapacity::general(std::size_t n, std::vector<double> masses) {
  if (n > kMaxDense) throw ValidationError("general capacities are limited to 20 criteria");
  if (masses.size() != (std::size_t{1} << n)) {
    throw ValidationError("general capacity over " + std::to_string(n) + " criteria needs " +
                          std::to_string(std::size_t{1} << n) + " masses");
  }
  if (masses[0] != 0.0) throw ValidationError("m(empty set) must be 0");
  MoebiusCapacity m;
  m.n_ = n;
  m.additivity_ = Additivity::general;
  m.dense_ = std::move(masses);
  return m;
}

MoebiusCapacity MoebiusCapacity::uniform(std::size_t n) {
  return two_additive(std::vector<double>(n, 1.0 / static_cast<double>(n)),
                      std::vector<double>(kernels::pair_count(n), 0.0));
}

double MoebiusCapacity::mass(Mask subset) const {
  if (additivity_ == Additivity::general) return dense_.at(subset);
  const int k = std::popcount(subset);
  if (k == 1) return singles_.at(static_cast<std::size_t>(std::countr_zero(subset)));
  if (k == 2) {
    const auto ij = members(subset);
    return pairs_.at(pair_index(ij[0], ij[1], n_));
  }
  return 0.0;
}

std::span<const double> MoebiusCapacity::singleton_masses() const {
  if (additivity_ != Additivity::two_additive) throw ValidationError("capacity is not 2-additive");
  return singles_;
}

std::span<const double> MoebiusCapacity::pair_masses() const {
  if (additivity_ != Additivity::two_additive) throw ValidationError("capacity is not 2-additive");
  return pairs_;
}

std::vector<double> MoebiusCapacity::coefficients() const {
  if (additivity_ != Additivity::two_additive) throw ValidationError("capacity is not 2-additive");
  std::vector<double> c(singles_);
  c.insert(c.end(), pairs_.begin(), pairs_.end());
  return c;
}

MoebiusCapacity MoebiusCapacity::to_two_additive(double tolerance) const {
  if (additivity_ == Additivity::two_additive) return *this;
  std::vector<double> s(n_);
  std::vector<double> p(kernels::pair_count(n_));
  for (Mask t = 1; t < dense_.size(); ++t) {
    const int k = std::popcount(t);
    if (k == 1) {
      s[static_cast<std::size_t>(std::countr_zero(t))] = dense_[t];
    } else if (k == 2) {
      const auto ij = members(t);
      p[pair_index(ij[0], ij[1], n_)] = dense_[t];
    } else if (std::abs(dense_[t]) > tolerance) {
      throw ValidationError("capacity has mass " + std::to_string(dense_[t]) + " on " +
                            describe(t) + "; it is not 2-additive");
    }
  }
  return two_additive(std::move(s), std::move(p));
}

double moebius_to_capacity(const MoebiusCapacity& m, Mask subset) {
  if (m.additivity() == Additivity::two_additive) {
    const auto idx = members(subset);
    double total = 0.0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      total += m.singleton_masses()[idx[a]];
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        total += m.pair_masses()[pair_index(idx[a], idx[b], m.size())];
      }
    }
    return total;
  }
  double total = 0.0;
  // Enumerate submasks of subset, including the empty set (mass 0).
  for (Mask b = subset;; b = (b - 1) & subset) {
    total += m.mass(b);
    if (b == 0) break;
  }
  return total;
}

Capacity to_capacity(const MoebiusCapacity& m) {
  const std::size_t n = m.size();
  if (n > kMaxDense) throw ValidationError("dense capacities are limited to 20 criteria");
  Capacity mu{n, std::vector<double>(std::size_t{1} << n)};
  for (Mask s = 0; s < mu.values.size(); ++s) mu.values[s] = m.mass(s);
  // Zeta transform: mu(S) = sum_{B subset S} m(B).
  for (std::size_t i = 0; i < n; ++i) {
    for (Mask s = 0; s < mu.values.size(); ++s) {
      if (s & singleton(i)) mu.values[s] += mu.values[s ^ singleton(i)];
    }
  }
  return mu;
}

MoebiusCapacity capacity_to_moebius(const Capacity& mu) {
  const std::size_t n = mu.n;
  if (n > kMaxDense || mu.values.size() != (std::size_t{1} << n)) {
    throw ValidationError("capacity must be defined on all 2^n subsets");
  }
  constexpr double tol = 1e-12;
  if (std::abs(mu.values[0]) > tol) throw ValidationError("capacity of the empty set must be 0");
  if (std::abs(mu.values[full_set(n)] - 1.0) > tol) {
    throw ValidationError("capacity of the full set must be 1");
  }
  for (Mask s = 0; s < mu.values.size(); ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((s & singleton(i)) == 0 && mu.values[s | singleton(i)] < mu.values[s] - tol) {
        throw ValidationError("capacity is not monotone: mu(" + describe(s | singleton(i)) +
                              ") < mu(" + describe(s) + ")");
      }
    }
  }
  std::vector<double> m(mu.values);
  // Moebius transform, the inverse of the zeta transform above.
  for (std::size_t i = 0; i < n; ++i) {
    for (Mask s = 0; s < m.size(); ++s) {
      if (s & singleton(i)) m[s] -= m[s ^ singleton(i)];
    }
  }
  m[0] = 0.0;
  return MoebiusCapacity::general(n, std::move(m));
}

double choquet_general(std::span<const double> x, const Capacity& mu) {
  const std::size_t n = x.size();
  if (mu.n != n) throw ValidationError("evaluation vector and capacity disagree on n");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b]; });
  double total = 0.0;
  double previous = 0.0;
  Mask upper = full_set(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double v = x[order[k]];
    total += (v - previous) * mu(upper);
    previous = v;
    upper &= ~singleton(order[k]);
  }
  return total;
}

std::vector<double> features(std::span<const double> x) {
  std::vector<double> f(x.size() + kernels::pair_count(x.size()));
  features(x, f);
  return f;
}

void features(std::span<const double> x, std::span<double> out) {
  std::copy(x.begin(), x.end(), out.begin());
  kernels::pairwise_min(x, out.subspan(x.size()));
}

double choquet_moebius(std::span<const double> x, const MoebiusCapacity& m) {
  if (m.size() != x.size()) throw ValidationError("evaluation vector and capacity disagree on n");
  if (m.additivity() == Additivity::two_additive) {
    const auto f = features(x);
    const auto c = m.coefficients();
    return kernels::dot(f, c);
  }
  double total = 0.0;
  for (Mask t = 1; t < (Mask{1} << m.size()); ++t) {
    const double mass = m.mass(t);
    if (mass == 0.0) continue;
    double lo = 1.0 / 0.0;
    for (auto i : members(t)) lo = std::min(lo, x[i]);
    total += mass * lo;
  }
  return total;
}

std::vector<Violation> validate(const MoebiusCapacity& m, double tolerance) {
  std::vector<Violation> out;
  const std::size_t n = m.size();
  double total = 0.0;
  if (m.additivity() == Additivity::two_additive) {
    for (double v : m.singleton_masses()) total += v;
    for (double v : m.pair_masses()) total += v;
  } else {
    if (std::abs(m.mass(0)) > tolerance) {
      out.push_back({"empty_set", -1, 0, std::abs(m.mass(0)), "m(empty set) must be 0"});
    }
    for (Mask t = 1; t < (Mask{1} << n); ++t) total += m.mass(t);
  }
  if (std::abs(total - 1.0) > tolerance) {
    out.push_back({"normalization", -1, full_set(n), std::abs(total - 1.0),
                   "Moebius masses sum to " + std::to_string(total) + ", expected 1"});
  }

  if (m.additivity() == Additivity::two_additive) {
    const auto s = m.singleton_masses();
    const auto p = m.pair_masses();
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] < -tolerance) {
        out.push_back({"singleton_nonnegativity", static_cast<int>(i), 0, -s[i],
                       "m({g" + std::to_string(i + 1) + "}) = " + std::to_string(s[i]) + " < 0"});
      }
      // Tightest T: every j with negative interaction.
      Mask worst = 0;
      double value = s[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double mij = p[pair_index(i, j, n)];
        if (mij < 0.0) {
          worst |= singleton(j);
          value += mij;
        }
      }
      if (worst != 0 && value < -tolerance) {
        out.push_back({"monotonicity", static_cast<int>(i), worst, -value,
                       "monotonicity fails for g" + std::to_string(i + 1) + " with T = " +
                           describe(worst) + ": " + std::to_string(value) + " < 0"});
      }
    }
    return out;
  }

  // General capacity: mu(R + i) - mu(R) >= 0 for every R not containing i.
  const auto mu = to_capacity(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (Mask r = 0; r < mu.values.size(); ++r) {
      if (r & singleton(i)) continue;
      const double gain = mu.values[r | singleton(i)] - mu.values[r];
      if (gain < -tolerance) {
        out.push_back({"monotonicity", static_cast<int>(i), r, -gain,
                       "monotonicity fails for g" + std::to_string(i + 1) + " with R = " +
                           describe(r)});
      }
    }
  }
  return out;
}

std::vector<double> shapley(const MoebiusCapacity& m) {
  if (m.additivity() != Additivity::two_additive) {
    throw ValidationError("Shapley values are implemented for 2-additive capacities only");
  }
  const std::size_t n = m.size();
  const auto s = m.singleton_masses();
  const auto p = m.pair_masses();
  std::vector<double> phi(s.begin(), s.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double half = p[pair_index(i, j, n)] / 2.0;
      phi[i] += half;
      phi[j] += half;
    }
  }
  return phi;
}

double interaction(const MoebiusCapacity& m, std::size_t i, std::size_t j) {
  if (m.additivity() != Additivity::two_additive) {
    throw ValidationError("interaction indices are implemented for 2-additive capacities only");
  }
  if (i == j) throw ValidationError("interaction needs two distinct criteria");
  if (i >= m.size() || j >= m.size()) throw ValidationError("criterion index out of range");
  return m.pair_masses()[pair_index(i, j, m.size())];
}

}  // namespace pahp::choquet
