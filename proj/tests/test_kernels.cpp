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
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pahp/kernels.hpp"

namespace k = pahp::kernels;

namespace {

std::vector<k::Isa> available() {
  std::vector<k::Isa> out;
  for (auto isa : {k::Isa::scalar, k::Isa::avx2, k::Isa::neon}) {
    if (k::supported(isa)) out.push_back(isa);
  }
  return out;
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels are always available and active is one of the supported tables") {
  CHECK(k::supported(k::Isa::scalar));
  CHECK(k::supported(k::active().isa));
  CHECK(k::table_for(k::Isa::scalar).isa == k::Isa::scalar);
}

TEST_CASE("unsupported ISA is rejected") {
  for (auto isa : {k::Isa::avx2, k::Isa::neon}) {
    if (!k::supported(isa)) CHECK_THROWS_AS(k::table_for(isa), std::invalid_argument);
  }
}

TEST_CASE("every available kernel table matches the scalar reference") {
  const auto& ref = k::table_for(k::Isa::scalar);
  std::mt19937_64 rng(7);
  for (auto isa : available()) {
    CAPTURE(k::to_string(isa));
    const auto& t = k::table_for(isa);
    // Lengths straddle every vector width and remainder.
    for (std::size_t n = 0; n <= 37; ++n) {
      CAPTURE(n);
      const auto x = random_vector(rng, n);
      const auto y0 = random_vector(rng, n);
      const double alpha = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);

      auto ya = y0, yb = y0;
      ref.axpy_sub(alpha, x.data(), ya.data(), n);
      t.axpy_sub(alpha, x.data(), yb.data(), n);
      CHECK(ya == yb);  // bitwise: no contraction on either path

      ya = y0;
      yb = y0;
      ref.scale(alpha, ya.data(), n);
      t.scale(alpha, yb.data(), n);
      CHECK(ya == yb);

      double mag = 0.0;
      for (std::size_t i = 0; i < n; ++i) mag += std::abs(x[i] * y0[i]);
      CHECK(std::abs(ref.dot(x.data(), y0.data(), n) - t.dot(x.data(), y0.data(), n)) <=
            1e-14 * (1.0 + mag));

      std::vector<double> pa(k::pair_count(n)), pb(k::pair_count(n));
      ref.pairwise_min(x.data(), n, pa.data());
      t.pairwise_min(x.data(), n, pb.data());
      CHECK(pa == pb);
    }
  }
}

TEST_CASE("pairwise_min follows lexicographic pair order") {
  const std::vector<double> x{0.3, 0.9, 0.1, 0.5};
  std::vector<double> out(k::pair_count(x.size()));
  k::pairwise_min(x, out);
  CHECK(out == std::vector<double>{0.3, 0.1, 0.3, 0.1, 0.5, 0.1});
  CHECK(k::pair_count(0) == 0);
  CHECK(k::pair_count(1) == 0);
  CHECK(k::pair_count(10) == 45);
}

TEST_CASE("dot and axpy on small hand examples") {
  const std::vector<double> x{1, 2, 3};
  std::vector<double> y{4, 5, 6};
  CHECK(k::dot(x, y) == 32.0);
  k::axpy_sub(2.0, x, y);
  CHECK(y == std::vector<double>{2, 1, 0});
  k::scale(0.5, y);
  CHECK(y == std::vector<double>{1, 0.5, 0});
}
