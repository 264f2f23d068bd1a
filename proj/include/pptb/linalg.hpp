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

#include <vector>

#include "pptb/certificate.hpp"
#include "pptb/matrix.hpp"

namespace pptb {

struct JacobiOptions {
  // Converged when the off-diagonal Frobenius mass is <= rel_tol * ||M||_F.
  double rel_tol = 1e-13;
  int max_sweeps = 40;
};

/// Tightened settings used to re-verify counterexample candidates.
inline constexpr JacobiOptions kTightJacobi{1e-15, 80};

/// Eigenvalues sorted descending, with the eigenvectors as unitary columns.
struct EigenSystem {
  std::vector<double> eigenvalues;
  ComplexMatrix basis;
  int sweeps = 0;
};

/// X = left * diag(singulars) * right^*.
struct SvdSystem {
  ComplexMatrix left;
  std::vector<double> singulars;
  ComplexMatrix right;
};

struct PolarFactors {
  ComplexMatrix unitary;
  HermitianMatrix modulus;
};

/// Cyclic Jacobi with threshold pivoting. Throws ConvergenceError when the
/// sweep budget runs out.
EigenSystem herm_eig(const HermitianMatrix& m, const JacobiOptions& opts = {});

/// Fault-injection hook for self-tests: herm_eig subtracts
/// shift * max(1, ||M||_F) from every eigenvalue. Zero disables it.
void set_eigenvalue_fault(double shift);

SvdSystem svd(const ComplexMatrix& x, const JacobiOptions& opts = {});

std::vector<double> singular_values(const ComplexMatrix& x, const JacobiOptions& opts = {});

/// X = U |X| with U = W V^* taken from svd(X), so singular X gets a
/// deterministic unitary factor.
PolarFactors polar(const ComplexMatrix& x);

double min_eig(const HermitianMatrix& m);

/// PSD threshold scale used by psd_sqrt / psd_power: max(1, ||P||_F).
double psd_scale(const HermitianMatrix& p);

/// P^power for PSD P. Eigenvalues in [-tol*scale, 0) are clamped to zero;
/// anything lower throws NotPSD. Negative powers require strict PD.
HermitianMatrix psd_power(const HermitianMatrix& p, double power, double tol = kDefaultTol);

HermitianMatrix psd_sqrt(const HermitianMatrix& p, double tol = kDefaultTol);

/// PD threshold 1e-10 * max(1, ||P||_F).
double pd_threshold(const HermitianMatrix& p);

/// Throws NotPD with the minimum eigenvalue if P is not strictly PD.
void require_pd(const HermitianMatrix& p, const char* what);

HermitianMatrix pd_inverse(const HermitianMatrix& p);

/// A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2}. A must be strictly PD, B PSD.
HermitianMatrix geometric_mean(const HermitianMatrix& a, const HermitianMatrix& b);

/// (A + eps I) # (B + eps I), for arguments on the PSD boundary.
HermitianMatrix geometric_mean_reg(const HermitianMatrix& a, const HermitianMatrix& b, double eps);

/// Y^{1/4} X^{1/2} Y^{1/4}.
HermitianMatrix frac_power_quarter_half(const HermitianMatrix& x, const HermitianMatrix& y);

/// Certifies M <= N in Loewner order: pass iff min_eig(N - M) >= -tol * max(1, ||N - M||_F).
Certificate loewner_leq(const HermitianMatrix& m, const HermitianMatrix& n,
                        double tol = kDefaultTol);

}  // namespace pptb
