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

#include "pptb/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pptb {

ComplexMatrix::ComplexMatrix(DenseMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw DimensionMismatch("matrix must be square, got " + std::to_string(m_.rows()) + "x" +
                            std::to_string(m_.cols()));
  }
  if (m_.rows() == 0) throw DimensionMismatch("matrix dimension must be at least 1");
  if (!m_.allFinite()) throw MatrixError("matrix has non-finite entries");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix([&] {
        const auto n = static_cast<Eigen::Index>(rows.size());
        DenseMatrix m(n, n);
        Eigen::Index i = 0;
        for (const auto& row : rows) {
          if (static_cast<Eigen::Index>(row.size()) != n)
            throw DimensionMismatch("ragged matrix literal");
          Eigen::Index j = 0;
          for (const auto& v : row) m(i, j++) = v;
          ++i;
        }
        return m;
      }()) {}

ComplexMatrix ComplexMatrix::identity(int n) { return ComplexMatrix(DenseMatrix::Identity(n, n)); }

ComplexMatrix ComplexMatrix::zero(int n) { return ComplexMatrix(DenseMatrix::Zero(n, n)); }

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  DenseMatrix m = DenseMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> d) {
  return diagonal(std::span<const double>(d.begin(), d.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(DenseMatrix(m_.adjoint())); }

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  if (n() != o.n()) throw DimensionMismatch("matrix sum of different dimensions");
  return ComplexMatrix(DenseMatrix(m_ + o.m_));
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  if (n() != o.n()) throw DimensionMismatch("matrix difference of different dimensions");
  return ComplexMatrix(DenseMatrix(m_ - o.m_));
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (n() != o.n()) throw DimensionMismatch("matrix product of different dimensions");
  return ComplexMatrix(DenseMatrix(m_ * o.m_));
}

ComplexMatrix ComplexMatrix::operator-() const { return ComplexMatrix(DenseMatrix(-m_)); }

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
  return ComplexMatrix(DenseMatrix(s * m.m_));
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) : m_(m) {
  const DenseMatrix& d = m.dense();
  const double skew = (d - d.adjoint()).norm();
  if (skew > 1e-12 * std::max(1.0, d.norm())) {
    throw MatrixError("matrix is not Hermitian (||M - M*||_F = " + std::to_string(skew) + ")");
  }
  m_ = ComplexMatrix(DenseMatrix(0.5 * (d + d.adjoint())));
}

HermitianMatrix HermitianMatrix::symmetrized(const DenseMatrix& m) {
  return HermitianMatrix(ComplexMatrix(DenseMatrix(0.5 * (m + m.adjoint()))), Trusted{});
}

HermitianMatrix HermitianMatrix::identity(int n) {
  return HermitianMatrix(ComplexMatrix::identity(n), Trusted{});
}

HermitianMatrix HermitianMatrix::zero(int n) {
  return HermitianMatrix(ComplexMatrix::zero(n), Trusted{});
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> d) {
  return HermitianMatrix(ComplexMatrix::diagonal(d), Trusted{});
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
  return HermitianMatrix(ComplexMatrix::diagonal(d), Trusted{});
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  return HermitianMatrix(m_ + o.m_, Trusted{});
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  return HermitianMatrix(m_ - o.m_, Trusted{});
}

HermitianMatrix HermitianMatrix::operator-() const { return HermitianMatrix(-m_, Trusted{}); }

HermitianMatrix operator*(double s, const HermitianMatrix& m) {
  return HermitianMatrix(Complex(s) * m.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix HermitianMatrix::congruence(const ComplexMatrix& t) const {
  if (t.n() != n()) throw DimensionMismatch("congruence by matrix of different dimension");
  return symmetrized(t.dense().adjoint() * dense() * t.dense());
}

double relative_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n() != b.n()) throw DimensionMismatch("relative_distance of different dimensions");
  return (a.dense() - b.dense()).norm() / std::max(1.0, b.frobenius());
}

std::vector<Complex> to_std(const DenseVector& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace pptb
