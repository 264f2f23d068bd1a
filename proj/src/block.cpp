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

#include "pptb/block.hpp"

#include <cmath>
#include <numbers>

#include "pptb/linalg.hpp"

namespace pptb {

Block2x2::Block2x2(HermitianMatrix a, ComplexMatrix x, HermitianMatrix b)
    : a_(std::move(a)), x_(std::move(x)), b_(std::move(b)) {
  if (a_.n() != x_.n() || b_.n() != x_.n()) {
    throw DimensionMismatch("block dimensions disagree: A is " + std::to_string(a_.n()) +
                            ", X is " + std::to_string(x_.n()) + ", B is " +
                            std::to_string(b_.n()));
  }
}

Block2x2 Block2x2::split(const HermitianMatrix& h) {
  if (h.n() % 2 != 0) throw DimensionMismatch("cannot split an odd-dimensional matrix into 2x2 blocks");
  const int n = h.n() / 2;
  const DenseMatrix& d = h.dense();
  return Block2x2(HermitianMatrix::symmetrized(d.topLeftCorner(n, n)),
                  ComplexMatrix(DenseMatrix(d.topRightCorner(n, n))),
                  HermitianMatrix::symmetrized(d.bottomRightCorner(n, n)));
}

HermitianMatrix assemble(const Block2x2& b) {
  const int n = b.n();
  DenseMatrix h(2 * n, 2 * n);
  h.topLeftCorner(n, n) = b.a().dense();
  h.topRightCorner(n, n) = b.x().dense();
  h.bottomLeftCorner(n, n) = b.x().dense().adjoint();
  h.bottomRightCorner(n, n) = b.b().dense();
  return HermitianMatrix::symmetrized(h);
}

Block2x2 partial_transpose(const Block2x2& b) { return Block2x2(b.a(), b.x().adjoint(), b.b()); }

Certificate is_positive(const Block2x2& b, double tol) {
  const HermitianMatrix h = assemble(b);
  return Certificate::single("positive",
                             loewner_link("0", "H", HermitianMatrix::zero(h.n()), h, tol));
}

Certificate is_ppt(const Block2x2& b, double tol) {
  const HermitianMatrix zero = HermitianMatrix::zero(2 * b.n());
  Certificate c;
  c.name = "ppt";
  c.lhs = "0";
  c.rhs = "H, H^tau";
  c.tol = tol;
  c.links.push_back(loewner_link("0", "H", zero, assemble(b), tol));
  c.links.push_back(loewner_link("0", "H^tau", zero, assemble(partial_transpose(b)), tol));
  return c;
}

Certificate schur_criterion(const Block2x2& b, double tol) {
  const HermitianMatrix a_inv = pd_inverse(b.a());
  const DenseMatrix& x = b.x().dense();
  const HermitianMatrix zero = HermitianMatrix::zero(b.n());
  const HermitianMatrix s1 =
      b.b() - HermitianMatrix::symmetrized(x.adjoint() * a_inv.dense() * x);
  const HermitianMatrix s2 =
      b.b() - HermitianMatrix::symmetrized(x * a_inv.dense() * x.adjoint());
  Certificate c;
  c.name = "schur";
  c.lhs = "0";
  c.rhs = "B - X^* A^-1 X, B - X A^-1 X^*";
  c.tol = tol;
  c.links.push_back(loewner_link("0", "B - X^* A^-1 X", zero, s1, tol));
  c.links.push_back(loewner_link("0", "B - X A^-1 X^*", zero, s2, tol));
  return c;
}

Block2x2 negate_offdiag(const Block2x2& b) { return Block2x2(b.a(), -b.x(), b.b()); }

Block2x2 swap_blocks(const Block2x2& b) { return Block2x2(b.b(), b.x().adjoint(), b.a()); }

Certificate offdiag_compression(const Block2x2& b, double tol) {
  const int n = b.n();
  const Block2x2 offdiag(HermitianMatrix::zero(n), b.x(), HermitianMatrix::zero(n));
  return Certificate::single("offdiag-compression",
                             loewner_link("[0, X; X^*, 0]", "H / 2", assemble(offdiag),
                                          0.5 * assemble(b), tol));
}

std::array<Block2x2, 8> ppt_variants(const Block2x2& b) {
  const ComplexMatrix& x = b.x();
  const ComplexMatrix xs = x.adjoint();
  return {Block2x2(b.a(), x, b.b()),  Block2x2(b.a(), -x, b.b()),
          Block2x2(b.a(), xs, b.b()), Block2x2(b.a(), -xs, b.b()),
          Block2x2(b.b(), xs, b.a()), Block2x2(b.b(), -xs, b.a()),
          Block2x2(b.b(), x, b.a()),  Block2x2(b.b(), -x, b.a())};
}

Block2x2 rotate_offdiag(const Block2x2& b, double theta) {
  return Block2x2(b.a(), std::polar(1.0, theta) * b.x(), b.b());
}

Block2x2 average_diagonal(const Block2x2& b) {
  const HermitianMatrix mean = 0.5 * (b.a() + b.b());
  return Block2x2(mean, b.x(), mean);
}

Block2x2 ando_mix(const Block2x2& b1, const Block2x2& b2) {
  if (b1.n() != b2.n()) throw DimensionMismatch("ando_mix of blocks with different dimensions");
  if (relative_distance(b1.x(), b2.x()) > 1e-12) {
    throw MatrixError("ando_mix requires both blocks to share the same off-diagonal X");
  }
  return Block2x2(geometric_mean(b1.a(), b2.a()), b1.x(), geometric_mean(b1.b(), b2.b()));
}

Block2x2 geometric_mean_block(const Block2x2& b) {
  require_pd(b.b(), "B");
  const HermitianMatrix g = geometric_mean(b.a(), b.b());
  return Block2x2(g, b.x(), g);
}

std::pair<HermitianMatrix, HermitianMatrix> cartesian_parts(const ComplexMatrix& x) {
  const DenseMatrix& d = x.dense();
  const DenseMatrix re = 0.5 * (d + d.adjoint());
  const DenseMatrix im = (d - d.adjoint()) / Complex(0.0, 2.0);
  return {HermitianMatrix::symmetrized(re), HermitianMatrix::symmetrized(im)};
}

ComplexMatrix phase_conjugator(int n, double theta) {
  DenseMatrix w = DenseMatrix::Identity(2 * n, 2 * n);
  w.topLeftCorner(n, n) *= std::polar(1.0, theta);
  return ComplexMatrix(std::move(w));
}

ComplexMatrix unitary_conjugator(const ComplexMatrix& u) {
  const int n = u.n();
  DenseMatrix w = DenseMatrix::Identity(2 * n, 2 * n);
  w.topLeftCorner(n, n) = u.dense();
  return ComplexMatrix(std::move(w));
}

ComplexMatrix block_hadamard(int n) {
  DenseMatrix j(2 * n, 2 * n);
  const DenseMatrix id = DenseMatrix::Identity(n, n);
  j << id, -id, id, id;
  return ComplexMatrix(DenseMatrix(j / std::numbers::sqrt2));
}

ComplexMatrix sign_conjugator(int n) {
  DenseMatrix s = DenseMatrix::Identity(2 * n, 2 * n);
  s.topLeftCorner(n, n) *= -1.0;
  return ComplexMatrix(std::move(s));
}

ComplexMatrix swap_conjugator(int n) {
  DenseMatrix s = DenseMatrix::Zero(2 * n, 2 * n);
  s.topRightCorner(n, n).setIdentity();
  s.bottomLeftCorner(n, n).setIdentity();
  return ComplexMatrix(std::move(s));
}

}  // namespace pptb
