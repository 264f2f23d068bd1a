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

#include <optional>
#include <string>
#include <vector>

#include "pptb/matrix.hpp"

namespace pptb {

/// Default relative tolerance for Loewner and scalar checks.
inline constexpr double kDefaultTol = 1e-8;
/// Tolerance used when enforcing PPT preconditions before running verifiers.
inline constexpr double kStrictTol = 1e-10;
/// Verdicts with |gap| below this many tolerances (times scale) are marginal.
inline constexpr double kMarginalFactor = 10.0;

/// Which side of the tolerance band the claim asserts.
enum class Sense {
  holds,     // claim: gap >= -tol * scale
  violated,  // claim: gap < -tol * scale (a demonstrated violation)
};

/// One inequality, either in Loewner order (gap = min eigenvalue of
/// rhs - lhs, with an eigenvector witness) or between scalars
/// (gap = rhs - lhs).
struct Link {
  std::string lhs;
  std::string rhs;
  Sense sense = Sense::holds;
  double gap = 0.0;
  double scale = 1.0;
  double tol = kDefaultTol;
  bool pass = false;
  bool marginal = false;
  // Equality holds identically (e.g. determinant links at k = n), so
  // closeness to the boundary carries no information.
  bool tight = false;

  std::optional<double> lhs_value;
  std::optional<double> rhs_value;
  std::vector<Complex> witness;
  std::optional<HermitianMatrix> difference;  // rhs - lhs, Loewner links only

  bool is_loewner() const { return difference.has_value(); }
};

Link scalar_link(std::string lhs_desc, std::string rhs_desc, double lhs, double rhs, double tol,
                 Sense sense = Sense::holds);

Link loewner_link(std::string lhs_desc, std::string rhs_desc, const HermitianMatrix& lhs,
                  const HermitianMatrix& rhs, double tol, Sense sense = Sense::holds);

/// Flags a link whose two sides agree identically; it is never marginal.
void mark_tight(Link& link);

/// Verdict of one verifier on one input. Chains keep one link per claim;
/// the summary fields describe the worst link (smallest gap / scale).
struct Certificate {
  std::string name;
  std::string lhs;
  std::string rhs;
  double tol = kDefaultTol;
  std::vector<Link> links;
  std::string error;  // non-empty when a precondition failed

  static Certificate single(std::string name, Link link);
  static Certificate failed_precondition(std::string name, std::string error, double tol);

  bool pass() const;
  bool marginal() const;
  const Link* worst() const;
  double gap() const;
  double scale() const;
  const std::vector<Complex>& witness() const;
};

/// Re-derives a link's verdict without the Jacobi eigensolver: Loewner
/// passes are confirmed by a shifted Cholesky factorization, failures by the
/// Rayleigh quotient of the recorded witness, scalars by recomputing the
/// slack. Returns true when the independent verdict matches `link.pass`.
bool recheck(const Link& link);

bool recheck(const Certificate& cert);

}  // namespace pptb
