// Copyright 2026 The ppt-blocks Authors
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

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pptb/block.hpp"
#include "pptb/matrix.hpp"

namespace pptb {

/// xoshiro256** seeded through splitmix64. The exact algorithm is part of the
/// reproducibility contract: changing it invalidates the golden files under
/// tests/data.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next(); }

  std::uint64_t next();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller: u1 in (0, 1], u2 in [0, 1),
  /// z0 = sqrt(-2 ln u1) cos(2 pi u2), z1 = sqrt(-2 ln u1) sin(2 pi u2);
  /// z0 is returned first and z1 is cached for the next call.
  double normal();
  /// (z0 + i z1) / sqrt(2), so E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::uint64_t s_[4];
  std::optional<double> spare_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Per-sample seed: seed XOR splitmix64(index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

enum class SampleMethod {
  ginibre,
  psd,
  pd,
  unitary,
  psd_block,
  ppt_separable,
  ppt_rejection,
  // 7 of every 10 samples separable, the rest by rejection.
  ppt_mixed,
};

std::string to_string(SampleMethod m);
SampleMethod parse_sample_method(const std::string& s);

/// Deterministic recipe for a stream of random instances.
struct SampleSpec {
  int n = 2;
  std::uint64_t seed = 0;
  int count = 1;
  SampleMethod method = SampleMethod::ppt_separable;
  // psd: rank; ppt_separable: number of product terms; ppt_rejection:
  // Wishart column count (0 means 2n).
  int r = 0;
  double cond_cap = 100.0;
  long budget = 100000;
};

DenseMatrix random_ginibre(Rng& rng, int rows, int cols);
ComplexMatrix random_ginibre(int n, std::uint64_t seed);

/// (G + G^*) / 2 for Ginibre G.
HermitianMatrix random_hermitian(Rng& rng, int n);
HermitianMatrix random_hermitian(int n, std::uint64_t seed);

/// G G^* with G an n x rank Ginibre matrix (rank <= 0 means n).
HermitianMatrix random_psd(Rng& rng, int n, int rank = 0);
HermitianMatrix random_psd(int n, std::uint64_t seed, int rank = 0);

/// G^*G + delta I with delta chosen so the condition number is at most
/// cond_cap, then scaled to unit mean eigenvalue.
HermitianMatrix random_pd(Rng& rng, int n, double cond_cap);
HermitianMatrix random_pd(int n, std::uint64_t seed, double cond_cap);

/// Haar unitary: Gram-Schmidt QR of a Ginibre sample with R's diagonal
/// made positive.
ComplexMatrix random_unitary(Rng& rng, int n);
ComplexMatrix random_unitary(int n, std::uint64_t seed);

/// A random PSD 2n x 2n matrix split into blocks.
Block2x2 random_psd_block(Rng& rng, int n);
Block2x2 random_psd_block(int n, std::uint64_t seed);

/// sum_k P_k (x) Q_k for 2x2 P_k and n x n Q_k: A = sum p11 Q, X = sum p12 Q,
/// B = sum p22 Q.
Block2x2 separable_block(const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& terms);

/// separable_block with P_k random 2x2 PSD and Q_k random n x n PSD.
Block2x2 random_ppt_separable(Rng& rng, int n, int r);
Block2x2 random_ppt_separable(int n, std::uint64_t seed, int r);

struct RejectionSample {
  Block2x2 block;
  long attempts;
  double acceptance_rate;  // 1 / attempts for a single accepted draw
};

/// Draws Wishart 2n x 2n matrices until one passes is_ppt at the strict
/// tolerance. Throws BudgetExhausted after `budget` draws.
RejectionSample random_ppt_rejection(Rng& rng, int n, long budget, int wishart_cols = 0);
RejectionSample random_ppt_rejection(int n, std::uint64_t seed, long budget, int wishart_cols = 0);

}  // namespace pptb
