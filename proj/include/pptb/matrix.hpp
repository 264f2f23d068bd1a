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

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "pptb/errors.hpp"

namespace pptb {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

/// Dense square complex matrix with finite entries and n >= 1.
///
/// Arithmetic is delegated to Eigen; this type only pins the invariants the
/// rest of the library relies on.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(DenseMatrix m);

  /// Row-major construction from nested lists, e.g. {{0, 1}, {0, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(int n);
  static ComplexMatrix zero(int n);
  static ComplexMatrix diagonal(std::span<const double> d);
  static ComplexMatrix diagonal(std::initializer_list<double> d);

  int n() const { return static_cast<int>(m_.rows()); }
  const DenseMatrix& dense() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  ComplexMatrix adjoint() const;
  double frobenius() const { return m_.norm(); }
  Complex trace() const { return m_.trace(); }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  ComplexMatrix operator-() const;
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m);

  bool operator==(const ComplexMatrix& o) const { return m_ == o.m_; }

 private:
  DenseMatrix m_;
};

/// Hermitian matrix. Construction symmetrizes (M + M*)/2 and rejects inputs
/// whose antihermitian part exceeds 1e-12 * max(1, ||M||_F).
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m);
  explicit HermitianMatrix(const DenseMatrix& m) : HermitianMatrix(ComplexMatrix(m)) {}
  HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : HermitianMatrix(ComplexMatrix(rows)) {}

  static HermitianMatrix identity(int n);
  static HermitianMatrix zero(int n);
  static HermitianMatrix diagonal(std::initializer_list<double> d);
  static HermitianMatrix diagonal(std::span<const double> d);

  /// Skips the antihermitian check; the caller guarantees M is Hermitian up
  /// to roundoff. Still symmetrizes.
  static HermitianMatrix symmetrized(const DenseMatrix& m);

  int n() const { return m_.n(); }
  const ComplexMatrix& matrix() const { return m_; }
  const DenseMatrix& dense() const { return m_.dense(); }
  operator const ComplexMatrix&() const { return m_; }  // NOLINT
  Complex operator()(int i, int j) const { return m_(i, j); }
  double frobenius() const { return m_.frobenius(); }
  double trace() const { return m_.trace().real(); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  HermitianMatrix operator-() const;
  friend HermitianMatrix operator*(double s, const HermitianMatrix& m);

  /// Unitary congruence T* M T.
  HermitianMatrix congruence(const ComplexMatrix& t) const;

  bool operator==(const HermitianMatrix& o) const { return m_ == o.m_; }

 private:
  struct Trusted {};
  HermitianMatrix(ComplexMatrix m, Trusted) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// ||A - B||_F / max(1, ||B||_F).
double relative_distance(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<Complex> to_std(const DenseVector& v);

}  // namespace pptb
