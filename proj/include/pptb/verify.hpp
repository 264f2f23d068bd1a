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
#include <optional>
#include <string>
#include <vector>

#include "pptb/block.hpp"
#include "pptb/certificate.hpp"
#include "pptb/functionals.hpp"
#include "pptb/sampling.hpp"

namespace pptb {

/// Throws NotPPT unless is_ppt passes at kStrictTol, then NotPD unless A
/// and B are strictly positive definite (when `need_pd`).
void require_ppt(const Block2x2& b, bool need_pd = true);

/// |X| <= (A # B) # U^*(A # B)U with X = U|X|.
Certificate verify_main(const Block2x2& b, double tol = kDefaultTol);

/// |X| <= ((A # B) + U^*(A # B)U) / 2, plus the comparison of the two
/// right-hand sides and of the two Loewner gaps.
Certificate verify_lee(const Block2x2& b, double tol = kDefaultTol);

/// L(|X|) <= L(A # B).
Certificate verify_lieb_gm(const Block2x2& b, const Functional& l, double tol = kDefaultTol);

/// ||X|| <= ||A # B|| <= ||A^{1/2} B^{1/2}|| <= ||A + B|| / 2.
Certificate verify_norm_chain(const Block2x2& b, const Functional& norm, double tol = kDefaultTol);

/// tr(X^*X) <= tr((A # B)^2) <= tr(AB) <= tr((A + B)^2) / 2.
Certificate verify_trace_chain(const Block2x2& b, double tol = kDefaultTol);

/// prod s_j(X) <= prod s_j(A # B) <= prod s_j(B^{1/4} A^{1/2} B^{1/4})
/// <= prod s_j(A^{1/2} B^{1/2}) over j <= k, compared as sums of logs with
/// singular values clamped at 1e-300. Throws std::out_of_range for k > n.
Certificate verify_singular_product_chain(const Block2x2& b, int k, double tol = kDefaultTol);

/// s_j(X) <= s_i(A # B) <= s_i((A + B)/2) with i = floor((j + 1)/2), all j.
Certificate verify_half_index(const Block2x2& b, double tol = kDefaultTol);

/// ||H|| <= ||A + B||. Needs PPT only.
Certificate verify_hiroshima(const Block2x2& b, const Functional& norm, double tol = kDefaultTol);

/// +-Re(X) <= A # B and +-Im(X) <= A # B.
Certificate verify_re_im(const Block2x2& b, double tol = kDefaultTol);

/// [X, G; G, Y] >= 0 for G = X # Y, and for 10 random PSD directions D of
/// unit Frobenius norm the block with G + eps D (eps = 1e-3 ||G||_F) is not
/// PSD. Throws NotPD.
Certificate verify_extremal_gm(const HermitianMatrix& x, const HermitianMatrix& y, std::uint64_t seed,
                               double tol = kDefaultTol);

enum class VerifierId {
  main,
  lee,
  lieb_gm,
  norm_chain,
  trace_chain,
  sv_product,
  half_index,
  hiroshima,
  re_im,
  extremal_gm,
};

std::string to_string(VerifierId v);
/// Throws std::invalid_argument on unknown names.
VerifierId parse_verifier(const std::string& name);
const std::vector<VerifierId>& all_verifiers();

struct VerifyConfig {
  std::vector<VerifierId> verifiers = all_verifiers();
  // Functionals for lieb-gm, norm-chain and hiroshima; empty selects the
  // defaults for the block dimension.
  std::vector<Functional> functionals;
  double tol = kDefaultTol;
};

/// kyfan:1..n and schatten:1, 2, inf.
std::vector<Functional> default_norms(int n);
/// kyfan:1, schatten:3, prod-sv:min(2, n), det.
std::vector<Functional> default_lieb_functionals(int n);

/// One certificate per enabled verifier. Parameterized verifiers merge the
/// links of every parameter value; precondition failures become
/// certificates with `error` set.
std::vector<Certificate> run_verifiers(const Block2x2& b, const VerifyConfig& cfg, std::uint64_t seed);

struct VerificationReport {
  long sample_id = 0;
  std::uint64_t seed = 0;
  int dimension = 0;
  std::string source;
  int regenerated = 0;
  std::vector<Certificate> certificates;
  int marginal_count = 0;
  int failure_count = 0;
  int error_count = 0;
};

VerificationReport verify_block(const Block2x2& b, const VerifyConfig& cfg, long sample_id,
                                std::uint64_t seed, std::string source);

/// A verifier-ready sample: PPT at kStrictTol outside the marginal band
/// with A and B strictly PD. Rejected draws are replaced using
/// derive_seed(derive_seed(seed, i), attempt), up to 100 attempts.
struct CampaignSample {
  Block2x2 block;
  std::uint64_t seed;
  std::string source;
  int regenerated;
};

CampaignSample campaign_sample(const SampleSpec& spec, long index);

/// Worker count: PPT_BLOCKS_THREADS if set, else the hardware concurrency.
int default_threads();

/// Reports ordered by sample id regardless of the thread count.
std::vector<VerificationReport> run_campaign(const SampleSpec& spec, const VerifyConfig& cfg,
                                             int threads = 1);

struct CampaignSummary {
  long samples = 0;
  long certificates = 0;
  long passed = 0;
  long marginal = 0;
  long failed = 0;
  long errors = 0;
};

CampaignSummary summarize(const std::vector<VerificationReport>& reports);

/// Certificate that b is PPT and s_j(X) > s_j((A + B)/2): the PPT links in
/// the holds sense, the singular-value link in the violated sense.
Certificate certify_sj_violation(const Block2x2& b, int j, double tol = kDefaultTol);

/// A certified hit: the certificate passes with no marginal link, the
/// independent re-check agrees, and the violation survives both the
/// tightened Jacobi settings and a reference SVD.
bool confirm_sj_violation(const Block2x2& b, int j, double tol = kDefaultTol);

struct HuntReport {
  int j = 0;
  int n = 0;
  std::uint64_t seed = 0;
  long samples = 0;
  long evaluations = 0;
  bool hit = false;
  double best_ratio = 0.0;
  std::string best_source;
  std::optional<Block2x2> best_block;
  std::optional<Certificate> certificate;
};

/// Samples separable and rejection PPT blocks alternately (spec.count
/// draws), hill-climbing from the best candidate every 1000 draws and at
/// the end, until a certified hit. Throws std::out_of_range unless
/// 1 <= j <= n and n >= 2.
HuntReport hunt_sj_counterexample(const SampleSpec& spec, int j, double tol = kDefaultTol);

}  // namespace pptb
