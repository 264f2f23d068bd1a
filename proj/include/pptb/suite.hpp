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

#include <cstdint>
#include <string>
#include <vector>

#include "pptb/block.hpp"

namespace pptb {

/// Outcome of one invariant check over a seeded batch.
struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Random Hermitian matrices with n = 2 + i % 7: reconstruction residual
/// <= 1e-10 relative and the whole batch under `max_seconds`.
SuiteCheck check_eigensolver(int count, std::uint64_t seed, double max_seconds = 10.0);

/// Random PD pairs (cond <= 1000, n = 1 + i % 6): symmetry and Riccati
/// identity within 1e-7 relative, AM-GM Loewner gap >= -1e-8 scale.
SuiteCheck check_gm_identities(int count, std::uint64_t seed);

/// verify_extremal_gm on random PD pairs: every certificate passes.
SuiteCheck check_extremal(int count, std::uint64_t seed);

/// Every verifier except extremal-gm on `count` ppt_mixed samples per
/// dimension: no failures or precondition errors, fewer than 1% of samples
/// with a marginal certificate, under `max_seconds` in total.
SuiteCheck check_theorem_suite(const std::vector<int>& dims, int count, std::uint64_t seed, int threads,
                               double max_seconds = 300.0);

/// schur_criterion against is_ppt on random PSD blocks (A PD); a
/// disagreement is allowed only when one of the two verdicts is marginal.
SuiteCheck check_schur_oracle(int count, std::uint64_t seed);

/// Closure of PPT blocks under the block transforms, and the unitary
/// conjugations that realize them, to 1e-12 relative.
SuiteCheck check_closure(int count, std::uint64_t seed);

/// A PPT block with s_2(X) > s_2((A+B)/2): A = B = R1 + R2 + I/10,
/// X = R1 - R2 for rank-one projectors R1, R2 at 60 degrees.
Block2x2 analytic_sj_violation();

/// The violation re-certifies, including the independent re-check.
SuiteCheck check_stored_violation(const Block2x2& b, int j);

/// A j = 1 hunt never certifies a hit and its best ratio stays within 1 + 10 tol.
SuiteCheck check_j1_hunt(int n, long samples, std::uint64_t seed);

/// The reduced suite behind the `selftest` command.
std::vector<SuiteCheck> run_selftest(std::uint64_t seed);

}  // namespace pptb
