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

#include <string>

#include "pptb/block.hpp"
#include "pptb/certificate.hpp"
#include "pptb/matrix.hpp"
#include "pptb/sampling.hpp"

namespace pptb {

enum class FunctionalKind {
  trace,
  determinant,
  spectral_radius,
  elem_sym_eig,
  top_k_singular_product,
  ky_fan_norm,
  schatten_norm,
  frobenius,
  operator_norm,
};

/// How L(U M V) = L(M) is meant to hold.
enum class Invariance {
  two_sided,   // any unitaries U, V (functions of the singular values)
  similarity,  // V = U^* (functions of the eigenvalues)
};

/// A Lieb function or unitarily invariant norm, identified by a short
/// string: "trace", "det", "specrad", "esym:k", "prod-sv:k", "kyfan:k",
/// "schatten:p" (p >= 1 or "inf"), "frobenius", "opnorm".
class Functional {
 public:
  static Functional trace() { return Functional(FunctionalKind::trace); }
  static Functional determinant() { return Functional(FunctionalKind::determinant); }
  static Functional spectral_radius() { return Functional(FunctionalKind::spectral_radius); }
  static Functional elem_sym(int k);
  static Functional singular_product(int k);
  static Functional ky_fan(int k);
  static Functional schatten(double p);
  static Functional frobenius() { return Functional(FunctionalKind::frobenius); }
  static Functional operator_norm() { return Functional(FunctionalKind::operator_norm); }

  /// Throws std::invalid_argument on unknown names or out-of-range parameters.
  static Functional parse(const std::string& id);

  std::string id() const;
  FunctionalKind kind() const { return kind_; }
  int k() const { return k_; }
  double p() const { return p_; }

  bool is_norm() const;
  bool unitarily_invariant() const { return true; }
  Invariance invariance() const;

  /// Throws std::out_of_range when k exceeds the matrix dimension.
  Complex evaluate(const ComplexMatrix& m) const;
  double evaluate_real(const ComplexMatrix& m) const { return evaluate(m).real(); }

  bool operator==(const Functional& o) const = default;

 private:
  explicit Functional(FunctionalKind kind, int k = 0, double p = 0.0) : kind_(kind), k_(k), p_(p) {}

  FunctionalKind kind_;
  int k_;
  double p_;
};

/// Samples the two Lieb axioms: 0 <= L(X) <= L(Y) for X <= Y PSD (Y = X + G^*G),
/// and |L(X^*Y)|^2 <= L(X^*X) L(Y^*Y) on Ginibre pairs. The certificate keeps
/// the worst link per axiom.
Certificate check_lieb_axioms(const Functional& l, const SampleSpec& samples,
                              double tol = kDefaultTol);

/// |L(Z)|^2 <= L(X) L(Y) for a PSD block [X, Z^*; Z, Y]; with the block stored
/// as (A, X', B) this reads |L(X'^*)|^2 <= L(A) L(B). Throws NotPSD.
Certificate check_block_lieb(const Functional& l, const Block2x2& block, double tol = kDefaultTol);

/// L(X # Y) <= sqrt(L(X) L(Y)) for PD X, Y. Throws NotPD.
Certificate check_gm_lieb(const Functional& l, const HermitianMatrix& x, const HermitianMatrix& y,
                          double tol = kDefaultTol);

}  // namespace pptb
