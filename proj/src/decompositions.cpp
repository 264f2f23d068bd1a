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
#include <cmath>
#include <numeric>
#include <string>

#include "pptb/linalg.hpp"

namespace pptb {
namespace {

// Orthogonalizes column j of w against the filled columns twice (classical
// Gram-Schmidt with reorthogonalization). Returns the remaining norm.
double orthogonalize(DenseMatrix& w, Eigen::Index j, const std::vector<bool>& filled) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index k = 0; k < w.cols(); ++k) {
      if (k == j || !filled[static_cast<std::size_t>(k)]) continue;
      const Complex proj = w.col(k).dot(w.col(j));
      w.col(j) -= proj * w.col(k);
    }
  }
  return w.col(j).norm();
}

}  // namespace

SvdSystem svd(const ComplexMatrix& x, const JacobiOptions& opts) {
  const Eigen::Index n = x.n();
  const EigenSystem gram = herm_eig(HermitianMatrix::symmetrized(x.dense().adjoint() * x.dense()), opts);

  DenseMatrix v = gram.basis.dense();
  DenseMatrix y = x.dense() * v;
  std::vector<double> norms(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) norms[static_cast<std::size_t>(j)] = y.col(j).norm();

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return norms[static_cast<std::size_t>(i)] > norms[static_cast<std::size_t>(j)];
  });

  DenseMatrix right(n, n);
  DenseMatrix left = DenseMatrix::Zero(n, n);
  std::vector<double> singulars(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    right.col(k) = v.col(src);
    left.col(k) = y.col(src);
    singulars[static_cast<std::size_t>(k)] = norms[static_cast<std::size_t>(src)];
  }

  // Left factor: normalized columns of X V for the numerically nonzero
  // singular values, orthonormal completion for the rest.
  const double cutoff = 1e-12 * singulars.front();
  std::vector<bool> filled(static_cast<std::size_t>(n), false);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double s = singulars[static_cast<std::size_t>(k)];
    if (s == 0.0 || s <= cutoff) continue;
    left.col(k) /= s;
    const double rest = orthogonalize(left, k, filled);
    if (rest < 0.5) {
      left.col(k).setZero();
      continue;
    }
    left.col(k) /= rest;
    filled[static_cast<std::size_t>(k)] = true;
  }
  // Completion: the standard basis vector with the largest component
  // outside the span of the columns chosen so far.
  for (Eigen::Index k = 0; k < n; ++k) {
    if (filled[static_cast<std::size_t>(k)]) continue;
    double best = -1.0;
    DenseVector best_col;
    for (Eigen::Index c = 0; c < n; ++c) {
      left.col(k) = DenseVector::Unit(n, c);
      const double rest = orthogonalize(left, k, filled);
      if (rest > best + 1e-12) {
        best = rest;
        best_col = left.col(k) / rest;
      }
    }
    if (best <= 0.0) throw MatrixError("svd: failed to complete the left singular basis");
    left.col(k) = best_col;
    filled[static_cast<std::size_t>(k)] = true;
  }

  return SvdSystem{ComplexMatrix(std::move(left)), std::move(singulars),
                   ComplexMatrix(std::move(right))};
}

std::vector<double> singular_values(const ComplexMatrix& x, const JacobiOptions& opts) {
  return svd(x, opts).singulars;
}

PolarFactors polar(const ComplexMatrix& x) {
  const SvdSystem s = svd(x);
  const DenseMatrix& v = s.right.dense();
  Eigen::VectorXd sigma(x.n());
  for (int j = 0; j < x.n(); ++j) sigma(j) = s.singulars[static_cast<std::size_t>(j)];
  DenseMatrix unitary = s.left.dense() * v.adjoint();
  DenseMatrix modulus = v * sigma.cast<Complex>().asDiagonal() * v.adjoint();
  return PolarFactors{ComplexMatrix(std::move(unitary)), HermitianMatrix::symmetrized(modulus)};
}

double psd_scale(const HermitianMatrix& p) { return std::max(1.0, p.frobenius()); }

double pd_threshold(const HermitianMatrix& p) { return 1e-10 * std::max(1.0, p.frobenius()); }

void require_pd(const HermitianMatrix& p, const char* what) {
  const double lo = min_eig(p);
  if (!(lo > pd_threshold(p))) {
    throw NotPD(std::string(what) + " is not positive definite (min eigenvalue " +
                    std::to_string(lo) + ")",
                lo);
  }
}

HermitianMatrix psd_power(const HermitianMatrix& p, double power, double tol) {
  const EigenSystem es = herm_eig(p);
  const double floor = -tol * psd_scale(p);
  const double lo = es.eigenvalues.back();
  if (lo < floor) {
    throw NotPSD("matrix is not positive semidefinite (min eigenvalue " + std::to_string(lo) + ")",
                 lo, to_std(es.basis.dense().col(p.n() - 1)));
  }
  if (power < 0.0 && !(lo > pd_threshold(p))) {
    throw NotPD("negative power of a matrix that is not positive definite", lo);
  }
  Eigen::VectorXd d(p.n());
  for (int j = 0; j < p.n(); ++j) {
    const double lambda = std::max(es.eigenvalues[static_cast<std::size_t>(j)], 0.0);
    d(j) = power == 1.0 ? lambda : std::pow(lambda, power);
  }
  const DenseMatrix& u = es.basis.dense();
  return HermitianMatrix::symmetrized(u * d.cast<Complex>().asDiagonal() * u.adjoint());
}

HermitianMatrix psd_sqrt(const HermitianMatrix& p, double tol) { return psd_power(p, 0.5, tol); }

HermitianMatrix pd_inverse(const HermitianMatrix& p) {
  require_pd(p, "pd_inverse argument");
  return psd_power(p, -1.0);
}

HermitianMatrix geometric_mean(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.n() != b.n()) throw DimensionMismatch("geometric_mean of different dimensions");
  const EigenSystem es = herm_eig(a);
  const double lo = es.eigenvalues.back();
  if (!(lo > pd_threshold(a))) {
    throw NotPD("geometric_mean: first argument is not positive definite (min eigenvalue " +
                    std::to_string(lo) + ")",
                lo);
  }
  const DenseMatrix& u = es.basis.dense();
  Eigen::VectorXd root(a.n());
  for (int j = 0; j < a.n(); ++j) root(j) = std::sqrt(es.eigenvalues[static_cast<std::size_t>(j)]);
  const DenseMatrix half = u * root.cast<Complex>().asDiagonal() * u.adjoint();
  const DenseMatrix inv_half = u * root.cwiseInverse().cast<Complex>().asDiagonal() * u.adjoint();

  const HermitianMatrix inner = HermitianMatrix::symmetrized(inv_half * b.dense() * inv_half);
  const HermitianMatrix inner_root = psd_sqrt(inner);
  return HermitianMatrix::symmetrized(half * inner_root.dense() * half);
}

HermitianMatrix geometric_mean_reg(const HermitianMatrix& a, const HermitianMatrix& b, double eps) {
  const HermitianMatrix shift = eps * HermitianMatrix::identity(a.n());
  return geometric_mean(a + shift, b + shift);
}

HermitianMatrix frac_power_quarter_half(const HermitianMatrix& x, const HermitianMatrix& y) {
  const HermitianMatrix y_quarter = psd_power(y, 0.25);
  const HermitianMatrix x_half = psd_sqrt(x);
  return HermitianMatrix::symmetrized(y_quarter.dense() * x_half.dense() * y_quarter.dense());
}

Certificate loewner_leq(const HermitianMatrix& m, const HermitianMatrix& n, double tol) {
  if (m.n() != n.n()) throw DimensionMismatch("loewner_leq of different dimensions");
  return Certificate::single("loewner", loewner_link("M", "N", m, n, tol));
}

}  // namespace pptb
