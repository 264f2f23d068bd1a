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

#include "pptb/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pptb/linalg.hpp"

namespace pptb {
namespace {

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return seed ^ splitmix64(index);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& word : s_) {
    word = splitmix64(state);
    state += 0x9e3779b97f4a7c15ULL;
  }
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::numbers::sqrt2;
}

std::string to_string(SampleMethod m) {
  switch (m) {
    case SampleMethod::ginibre: return "ginibre";
    case SampleMethod::psd: return "psd";
    case SampleMethod::pd: return "pd";
    case SampleMethod::unitary: return "unitary";
    case SampleMethod::psd_block: return "psd_block";
    case SampleMethod::ppt_separable: return "ppt_separable";
    case SampleMethod::ppt_rejection: return "ppt_rejection";
    case SampleMethod::ppt_mixed: return "ppt_mixed";
  }
  return "unknown";
}

SampleMethod parse_sample_method(const std::string& s) {
  for (SampleMethod m : {SampleMethod::ginibre, SampleMethod::psd, SampleMethod::pd,
                         SampleMethod::unitary, SampleMethod::psd_block,
                         SampleMethod::ppt_separable, SampleMethod::ppt_rejection,
                         SampleMethod::ppt_mixed}) {
    if (to_string(m) == s) return m;
  }
  throw std::invalid_argument("unknown sample method '" + s + "'");
}

DenseMatrix random_ginibre(Rng& rng, int rows, int cols) {
  DenseMatrix g(rows, cols);
  // Row-major fill order is part of the stream contract.
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

ComplexMatrix random_ginibre(int n, std::uint64_t seed) {
  Rng rng(seed);
  return ComplexMatrix(random_ginibre(rng, n, n));
}

HermitianMatrix random_hermitian(Rng& rng, int n) {
  return HermitianMatrix::symmetrized(random_ginibre(rng, n, n));
}

HermitianMatrix random_hermitian(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_hermitian(rng, n);
}

HermitianMatrix random_psd(Rng& rng, int n, int rank) {
  const DenseMatrix g = random_ginibre(rng, n, rank > 0 ? rank : n);
  return HermitianMatrix::symmetrized(g * g.adjoint());
}

HermitianMatrix random_psd(int n, std::uint64_t seed, int rank) {
  Rng rng(seed);
  return random_psd(rng, n, rank);
}

HermitianMatrix random_pd(Rng& rng, int n, double cond_cap) {
  if (!(cond_cap >= 1.0)) throw std::invalid_argument("random_pd: cond_cap must be >= 1");
  const DenseMatrix g = random_ginibre(rng, n, n);
  if (cond_cap == 1.0) return HermitianMatrix::identity(n);
  const HermitianMatrix gram = HermitianMatrix::symmetrized(g.adjoint() * g);
  const EigenSystem es = herm_eig(gram);
  const double hi = es.eigenvalues.front();
  const double lo = std::max(es.eigenvalues.back(), 0.0);
  // (hi + delta) / (lo + delta) <= cond_cap, with a hair of margin.
  const double delta = std::max(0.0, (hi - cond_cap * lo) / (cond_cap - 1.0)) * (1.0 + 1e-9);
  const HermitianMatrix shifted = gram + delta * HermitianMatrix::identity(n);
  return (static_cast<double>(n) / shifted.trace()) * shifted;
}

HermitianMatrix random_pd(int n, std::uint64_t seed, double cond_cap) {
  Rng rng(seed);
  return random_pd(rng, n, cond_cap);
}

ComplexMatrix random_unitary(Rng& rng, int n) {
  DenseMatrix q = random_ginibre(rng, n, n);
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
    }
    // Gram-Schmidt leaves R_jj = ||q_j|| > 0, which fixes the phases.
    q.col(j) /= q.col(j).norm();
  }
  return ComplexMatrix(std::move(q));
}

ComplexMatrix random_unitary(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(rng, n);
}

Block2x2 random_psd_block(Rng& rng, int n) { return Block2x2::split(random_psd(rng, 2 * n)); }

Block2x2 random_psd_block(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_psd_block(rng, n);
}

Block2x2 separable_block(const std::vector<std::pair<HermitianMatrix, HermitianMatrix>>& terms) {
  if (terms.empty()) throw std::invalid_argument("separable_block: no terms");
  const int n = terms.front().second.n();
  DenseMatrix a = DenseMatrix::Zero(n, n);
  DenseMatrix x = DenseMatrix::Zero(n, n);
  DenseMatrix b = DenseMatrix::Zero(n, n);
  for (const auto& [p, q] : terms) {
    if (p.n() != 2 || q.n() != n) throw DimensionMismatch("separable_block: term dimensions");
    a += p(0, 0) * q.dense();
    x += p(0, 1) * q.dense();
    b += p(1, 1) * q.dense();
  }
  return Block2x2(HermitianMatrix::symmetrized(a), ComplexMatrix(std::move(x)),
                  HermitianMatrix::symmetrized(b));
}

Block2x2 random_ppt_separable(Rng& rng, int n, int r) {
  if (r < 1) throw std::invalid_argument("random_ppt_separable: r must be >= 1");
  std::vector<std::pair<HermitianMatrix, HermitianMatrix>> terms;
  for (int k = 0; k < r; ++k) {
    HermitianMatrix p = random_psd(rng, 2);
    HermitianMatrix q = random_psd(rng, n);
    terms.emplace_back(std::move(p), std::move(q));
  }
  return separable_block(terms);
}

Block2x2 random_ppt_separable(int n, std::uint64_t seed, int r) {
  Rng rng(seed);
  return random_ppt_separable(rng, n, r);
}

RejectionSample random_ppt_rejection(Rng& rng, int n, long budget, int wishart_cols) {
  if (budget < 1) throw std::invalid_argument("random_ppt_rejection: budget must be >= 1");
  const int cols = wishart_cols > 0 ? wishart_cols : 2 * n;
  for (long attempt = 1; attempt <= budget; ++attempt) {
    const DenseMatrix g = random_ginibre(rng, 2 * n, cols);
    Block2x2 block = Block2x2::split(HermitianMatrix::symmetrized(g * g.adjoint()));
    if (is_ppt(block, kStrictTol).pass()) {
      return RejectionSample{std::move(block), attempt, 1.0 / static_cast<double>(attempt)};
    }
  }
  throw BudgetExhausted("random_ppt_rejection: no PPT block within " + std::to_string(budget) +
                            " draws",
                        budget, 0.0);
}

RejectionSample random_ppt_rejection(int n, std::uint64_t seed, long budget, int wishart_cols) {
  Rng rng(seed);
  return random_ppt_rejection(rng, n, budget, wishart_cols);
}

}  // namespace pptb
