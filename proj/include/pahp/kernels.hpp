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

// Data-parallel inner loops shared by the solver and the aggregation code.
//
// Every kernel has a scalar reference implementation; vector variants (AVX2 on
// x86-64, NEON on AArch64) are picked once at startup from what the CPU
// reports. Elementwise kernels (axpy, scale, pairwise_min) round identically
// in every variant. Reductions (dot) may differ in the last bits because the
// summation order changes; within a single process the choice is fixed, so
// results stay bitwise reproducible run to run.
//
// Set PAHP_ISA=scalar in the environment to pin the reference path.

#include <cstddef>
#include <span>
#include <string_view>

namespace pahp::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  /// y[i] -= alpha * x[i]
  void (*axpy_sub)(double alpha, const double* x, double* y, std::size_t n);
  /// y[i] *= alpha
  void (*scale)(double alpha, double* y, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// out[k] = min(x[i], x[j]) for i < j in lexicographic pair order.
  void (*pairwise_min)(const double* x, std::size_t n, double* out);
};

bool supported(Isa isa) noexcept;

/// Kernel table for a specific ISA. Throws std::invalid_argument when the ISA
/// is not compiled in or not supported by this CPU.
const KernelTable& table_for(Isa isa);

/// Table chosen at startup.
const KernelTable& active() noexcept;

namespace scalar {
void axpy_sub(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void pairwise_min(const double* x, std::size_t n, double* out);
}  // namespace scalar

inline void axpy_sub(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy_sub(alpha, x.data(), y.data(), y.size());
}

inline void scale(double alpha, std::span<double> y) { active().scale(alpha, y.data(), y.size()); }

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}

constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - (n > 0 ? 1 : 0)) / 2; }

inline void pairwise_min(std::span<const double> x, std::span<double> out) {
  active().pairwise_min(x.data(), x.size(), out.data());
}

}  // namespace pahp::kernels
