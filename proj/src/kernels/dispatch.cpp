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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "pahp/kernels.hpp"

namespace pahp::kernels {

#if defined(PAHP_HAVE_AVX2_TU)
namespace avx2 {
void axpy_sub(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void pairwise_min(const double* x, std::size_t n, double* out);
}  // namespace avx2
#endif

#if defined(PAHP_HAVE_NEON_TU)
namespace neon {
void axpy_sub(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void pairwise_min(const double* x, std::size_t n, double* out);
}  // namespace neon
#endif

namespace {

constexpr KernelTable kScalar{Isa::scalar, scalar::axpy_sub, scalar::scale, scalar::dot,
                              scalar::pairwise_min};
#if defined(PAHP_HAVE_AVX2_TU)
constexpr KernelTable kAvx2{Isa::avx2, avx2::axpy_sub, avx2::scale, avx2::dot, avx2::pairwise_min};
#endif
#if defined(PAHP_HAVE_NEON_TU)
constexpr KernelTable kNeon{Isa::neon, neon::axpy_sub, neon::scale, neon::dot, neon::pairwise_min};
#endif

const KernelTable& select() noexcept {
  if (const char* forced = std::getenv("PAHP_ISA")) {
    const std::string want(forced);
    if (want == "scalar") return kScalar;
#if defined(PAHP_HAVE_NEON_TU)
    if (want == "neon") return kNeon;
#endif
    // avx2 or anything unknown falls through to detection.
  }
#if defined(PAHP_HAVE_AVX2_TU)
  if (supported(Isa::avx2)) return kAvx2;
#endif
#if defined(PAHP_HAVE_NEON_TU)
  return kNeon;
#else
  return kScalar;
#endif
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(PAHP_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(PAHP_HAVE_NEON_TU)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table_for(Isa isa) {
  if (!supported(isa)) {
    throw std::invalid_argument("kernel ISA not available: " + std::string(to_string(isa)));
  }
  switch (isa) {
#if defined(PAHP_HAVE_AVX2_TU)
    case Isa::avx2: return kAvx2;
#endif
#if defined(PAHP_HAVE_NEON_TU)
    case Isa::neon: return kNeon;
#endif
    default: return kScalar;
  }
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace pahp::kernels
