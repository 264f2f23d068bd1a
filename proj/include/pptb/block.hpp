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

#include <array>
#include <utility>

#include "pptb/certificate.hpp"
#include "pptb/matrix.hpp"

namespace pptb {

/// The 2x2 block H = [A, X; X^*, B] with n x n blocks.
class Block2x2 {
 public:
  Block2x2(HermitianMatrix a, ComplexMatrix x, HermitianMatrix b);

  /// Splits a 2n x 2n Hermitian matrix into its four n x n blocks.
  static Block2x2 split(const HermitianMatrix& h);

  int n() const { return a_.n(); }
  const HermitianMatrix& a() const { return a_; }
  const ComplexMatrix& x() const { return x_; }
  const HermitianMatrix& b() const { return b_; }

  bool operator==(const Block2x2& o) const = default;

 private:
  HermitianMatrix a_;
  ComplexMatrix x_;
  HermitianMatrix b_;
};

HermitianMatrix assemble(const Block2x2& b);

/// [A, X; X^*, B] -> [A, X^*; X, B].
Block2x2 partial_transpose(const Block2x2& b);

/// Eigenvalue test on the assembled block: min_eig(H) >= -tol * max(1, ||H||_F).
Certificate is_positive(const Block2x2& b, double tol = kDefaultTol);

/// Both H and its partial transpose positive; the gap is the smaller of the two.
Certificate is_ppt(const Block2x2& b, double tol = kDefaultTol);

/// Cross-check of is_ppt through both Schur complements B - X^* A^{-1} X and
/// B - X A^{-1} X^*. Throws NotPD when A is not strictly positive definite.
Certificate schur_criterion(const Block2x2& b, double tol = kDefaultTol);

Block2x2 negate_offdiag(const Block2x2& b);

/// [A, X; X^*, B] -> [B, X^*; X, A].
Block2x2 swap_blocks(const Block2x2& b);

/// Certifies [0, X; X^*, 0] <= H / 2.
Certificate offdiag_compression(const Block2x2& b, double tol = kDefaultTol);

/// The eight blocks (A, -+X, B), (A, -+X^*, B), (B, -+X^*, A), (B, -+X, A),
/// in that order with the + variant first in each pair.
std::array<Block2x2, 8> ppt_variants(const Block2x2& b);

/// (A, e^{i theta} X, B).
Block2x2 rotate_offdiag(const Block2x2& b, double theta);

/// ((A + B)/2, X, (A + B)/2).
Block2x2 average_diagonal(const Block2x2& b);

/// (A1 # A2, X, B1 # B2) for two blocks sharing the off-diagonal X.
Block2x2 ando_mix(const Block2x2& b1, const Block2x2& b2);

/// (A # B, X, A # B).
Block2x2 geometric_mean_block(const Block2x2& b);

/// Re(X) = (X + X^*)/2, Im(X) = (X - X^*)/(2i).
std::pair<HermitianMatrix, HermitianMatrix> cartesian_parts(const ComplexMatrix& x);

/// diag(e^{i theta} I, I) of size 2n; W H W^* rotates the off-diagonal.
ComplexMatrix phase_conjugator(int n, double theta);

/// diag(U, I) of size 2n; with X = U|X| and G = A # B,
/// W^* [G, X; X^*, G] W = [U^*GU, |X|; |X|, G].
ComplexMatrix unitary_conjugator(const ComplexMatrix& u);

/// (1/sqrt 2) [I, -I; I, I] of size 2n.
ComplexMatrix block_hadamard(int n);

/// diag(-I, I) of size 2n.
ComplexMatrix sign_conjugator(int n);

/// [0, I; I, 0] of size 2n.
ComplexMatrix swap_conjugator(int n);

}  // namespace pptb
