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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pptb {

/// Base class for every error raised by the library.
class MatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public MatrixError {
 public:
  using MatrixError::MatrixError;
};

/// Raised when a matrix that must be positive semidefinite has an eigenvalue
/// below the clamping band. Carries the offending eigenvalue and eigenvector.
class NotPSD : public MatrixError {
 public:
  NotPSD(const std::string& what, double eigenvalue,
         std::vector<std::complex<double>> witness)
      : MatrixError(what), eigenvalue_(eigenvalue), witness_(std::move(witness)) {}

  double eigenvalue() const { return eigenvalue_; }
  const std::vector<std::complex<double>>& witness() const { return witness_; }

 private:
  double eigenvalue_;
  std::vector<std::complex<double>> witness_;
};

/// Raised when strict positive definiteness is required but the minimum
/// eigenvalue does not clear the PD threshold.
class NotPD : public MatrixError {
 public:
  NotPD(const std::string& what, double min_eigenvalue)
      : MatrixError(what), min_eigenvalue_(min_eigenvalue) {}

  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class NotPPT : public MatrixError {
 public:
  NotPPT(const std::string& what, double gap) : MatrixError(what), gap_(gap) {}
  double gap() const { return gap_; }

 private:
  double gap_;
};

/// Jacobi sweep budget exhausted before the off-diagonal mass converged.
class ConvergenceError : public MatrixError {
 public:
  ConvergenceError(const std::string& what, double off_diagonal_residual)
      : MatrixError(what), residual_(off_diagonal_residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

class BudgetExhausted : public MatrixError {
 public:
  BudgetExhausted(const std::string& what, long attempts, double acceptance_rate)
      : MatrixError(what), attempts_(attempts), acceptance_rate_(acceptance_rate) {}

  long attempts() const { return attempts_; }
  double acceptance_rate() const { return acceptance_rate_; }

 private:
  long attempts_;
  double acceptance_rate_;
};

}  // namespace pptb
