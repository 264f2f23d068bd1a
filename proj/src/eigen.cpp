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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <string>

#include "pptb/linalg.hpp"

namespace pptb {
namespace {

std::atomic<double> g_eigenvalue_fault{0.0};

double off_diagonal_mass(const DenseMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Applies the rotation J with J_pp = J_qq = c, J_pq = s e, J_qp = -s conj(e)
// as A <- J^* A J and V <- V J.
void rotate(DenseMatrix& a, DenseMatrix& v, Eigen::Index p, Eigen::Index q, double c, double s,
            Complex e) {
  const Eigen::Index n = a.rows();
  const Complex se = s * e;
  const Complex sec = s * std::conj(e);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - sec * akq;
    a(k, q) = se * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - se * aqk;
    a(q, k) = sec * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - sec * vkq;
    v(k, q) = se * vkp + c * vkq;
  }
}

}  // namespace

EigenSystem herm_eig(const HermitianMatrix& m, const JacobiOptions& opts) {
  const Eigen::Index n = m.n();
  DenseMatrix a = m.dense();
  DenseMatrix v = DenseMatrix::Identity(n, n);
  const double target = opts.rel_tol * a.norm();

  int sweep = 0;
  double off = off_diagonal_mass(a);
  while (off > target) {
    if (sweep == opts.max_sweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                                 std::to_string(opts.max_sweeps) +
                                 " sweeps (off-diagonal mass " + std::to_string(off) + ")",
                             off);
    }
    ++sweep;
    // Threshold pivoting: early sweeps only rotate the large entries.
    const double threshold = sweep <= 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double g = 100.0 * mag;
        if (sweep > 4 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        if (mag <= threshold) continue;
        const double theta = (aqq - app) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        rotate(a, v, p, q, c, t * c, apq / mag);
      }
    }
    off = off_diagonal_mass(a);
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  const double fault = g_eigenvalue_fault.load(std::memory_order_relaxed) * std::max(1.0, m.frobenius());
  std::vector<double> values(static_cast<std::size_t>(n));
  DenseMatrix basis(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    values[static_cast<std::size_t>(k)] = a(src, src).real() - fault;
    basis.col(k) = v.col(src);
  }
  return EigenSystem{std::move(values), ComplexMatrix(std::move(basis)), sweep};
}

void set_eigenvalue_fault(double shift) { g_eigenvalue_fault.store(shift, std::memory_order_relaxed); }

double min_eig(const HermitianMatrix& m) { return herm_eig(m).eigenvalues.back(); }

}  // namespace pptb
