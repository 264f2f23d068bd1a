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

#include "pptb/suite.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pptb/io.hpp"
#include "pptb/linalg.hpp"
#include "pptb/sampling.hpp"
#include "pptb/verify.hpp"

namespace pptb {
namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SuiteCheck finish(std::string name, bool pass, const std::ostringstream& detail, const Stopwatch& clock) {
  std::string text = detail.str();
  while (text.ends_with("; ")) text.resize(text.size() - 2);
  return SuiteCheck{std::move(name), pass, std::move(text), clock.seconds()};
}

double rel(const DenseMatrix& got, const DenseMatrix& want) {
  return (got - want).norm() / std::max(1.0, want.norm());
}

DenseMatrix conj(const ComplexMatrix& w, const HermitianMatrix& h) {
  return w.dense() * h.dense() * w.dense().adjoint();
}

}  // namespace

SuiteCheck check_eigensolver(int count, std::uint64_t seed, double max_seconds) {
  Stopwatch clock;
  double worst = 0.0;
  bool ok = true;
  std::ostringstream detail;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + i % 7;
    const HermitianMatrix m = random_hermitian(n, derive_seed(seed, static_cast<std::uint64_t>(i)));
    try {
      const EigenSystem es = herm_eig(m);
      Eigen::VectorXd d(n);
      for (int k = 0; k < n; ++k) d(k) = es.eigenvalues[static_cast<std::size_t>(k)];
      const DenseMatrix& v = es.basis.dense();
      const double r = (v * d.cast<Complex>().asDiagonal() * v.adjoint() - m.dense()).norm() / m.frobenius();
      worst = std::max(worst, r);
    } catch (const MatrixError& e) {
      ok = false;
      detail << "sample " << i << ": " << e.what() << "; ";
    }
  }
  const double seconds = clock.seconds();
  ok = ok && worst <= 1e-10 && seconds < max_seconds;
  detail << count << " matrices, max residual " << worst;
  if (seconds >= max_seconds) detail << ", over the " << max_seconds << " s limit";
  return finish("eigensolver", ok, detail, clock);
}

SuiteCheck check_gm_identities(int count, std::uint64_t seed) {
  Stopwatch clock;
  double sym = 0.0, riccati = 0.0, amgm = INFINITY;
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int n = 1 + i % 6;
    const HermitianMatrix a = random_pd(rng, n, 1000.0);
    const HermitianMatrix b = random_pd(rng, n, 1000.0);
    const HermitianMatrix g = geometric_mean(a, b);
    sym = std::max(sym, rel(geometric_mean(b, a).dense(), g.dense()));
    riccati = std::max(riccati, rel(g.dense() * pd_inverse(a).dense() * g.dense(), b.dense()));
    const Certificate c = loewner_leq(g, 0.5 * (a + b), 1e-8);
    amgm = std::min(amgm, c.gap() / c.scale());
  }
  std::ostringstream detail;
  detail << count << " pairs, symmetry " << sym << ", Riccati " << riccati << ", min AM-GM gap/scale " << amgm;
  return finish("gm-identities", sym <= 1e-7 && riccati <= 1e-7 && amgm >= -1e-8, detail, clock);
}

SuiteCheck check_extremal(int count, std::uint64_t seed) {
  Stopwatch clock;
  int failed = 0, perturbations = 0;
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const int n = 1 + i % 6;
    const HermitianMatrix x = random_pd(rng, n, 100.0);
    const HermitianMatrix y = random_pd(rng, n, 100.0);
    const Certificate c = verify_extremal_gm(x, y, rng.next());
    if (!c.pass() || !recheck(c)) ++failed;
    perturbations += static_cast<int>(c.links.size()) - 1;
  }
  std::ostringstream detail;
  detail << count << " pairs, " << perturbations << " upward perturbations, " << failed << " failing pairs";
  return finish("extremal-gm", failed == 0, detail, clock);
}

SuiteCheck check_theorem_suite(const std::vector<int>& dims, int count, std::uint64_t seed, int threads,
                               double max_seconds) {
  Stopwatch clock;
  VerifyConfig cfg;
  cfg.verifiers.clear();
  for (VerifierId v : all_verifiers())
    if (v != VerifierId::extremal_gm) cfg.verifiers.push_back(v);

  long samples = 0, marginal_samples = 0, failures = 0, errors = 0, certificates = 0, rechecks = 0;
  std::ostringstream detail;
  for (int n : dims) {
    const SampleSpec spec{.n = n, .seed = seed, .count = count, .method = SampleMethod::ppt_mixed};
    for (const VerificationReport& r : run_campaign(spec, cfg, threads)) {
      ++samples;
      if (r.marginal_count > 0) ++marginal_samples;
      failures += r.failure_count;
      errors += r.error_count;
      for (const Certificate& c : r.certificates) {
        ++certificates;
        if (!recheck(c)) ++rechecks;
        if (!c.pass() && failures + errors <= 5) {
          detail << "n=" << n << " sample " << r.sample_id << " " << c.name << " failed"
                 << (c.error.empty() ? "" : ": " + c.error) << "; ";
        }
      }
    }
  }
  const double seconds = clock.seconds();
  const double rate = samples ? static_cast<double>(marginal_samples) / static_cast<double>(samples) : 0.0;
  detail << samples << " samples, " << certificates << " certificates, " << failures << " failures, " << errors
         << " errors, " << rechecks << " re-check mismatches, marginal rate " << rate * 100 << "%";
  if (seconds >= max_seconds) detail << ", over the " << max_seconds << " s limit";
  const bool ok = failures == 0 && errors == 0 && rechecks == 0 && rate < 0.01 && seconds < max_seconds;
  return finish("theorem-suite", ok, detail, clock);
}

SuiteCheck check_schur_oracle(int count, std::uint64_t seed) {
  Stopwatch clock;
  int disagreements = 0, excused = 0, ppt = 0;
  std::ostringstream log;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + i % 3;
    const Block2x2 b = random_psd_block(n, derive_seed(seed, static_cast<std::uint64_t>(i)));
    const Certificate eig = is_ppt(b);
    const Certificate schur = schur_criterion(b);
    if (eig.pass()) ++ppt;
    if (eig.pass() == schur.pass()) continue;
    if (eig.marginal() || schur.marginal()) {
      ++excused;
      log << "sample " << i << " inside the marginal band (eig gap " << eig.gap() << ", Schur gap " << schur.gap()
          << "); ";
    } else {
      ++disagreements;
      log << "sample " << i << " disagrees (eig " << eig.pass() << ", Schur " << schur.pass() << "); ";
    }
  }
  std::ostringstream detail;
  detail << count << " blocks (" << ppt << " PPT), " << disagreements << " disagreements, " << excused
         << " marginal; " << log.str();
  return finish("schur-oracle", disagreements == 0, detail, clock);
}

SuiteCheck check_closure(int count, std::uint64_t seed) {
  Stopwatch clock;
  int failed = 0;
  double worst = 0.0;
  std::ostringstream log;
  auto expect = [&](bool ok, int i, const char* what) {
    if (!ok) {
      ++failed;
      if (failed <= 5) log << "sample " << i << ": " << what << "; ";
    }
  };
  for (int i = 0; i < count; ++i) {
    const int n = 2 + i % 3;
    const SampleSpec spec{.n = n, .seed = seed, .count = count, .method = SampleMethod::ppt_mixed};
    const Block2x2 b = campaign_sample(spec, i).block;
    Rng rng(derive_seed(seed ^ 0xc105e, static_cast<std::uint64_t>(i)));
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    const HermitianMatrix h = assemble(b);
    const HermitianMatrix ht = assemble(partial_transpose(b));

    for (const Block2x2& v : ppt_variants(b)) expect(is_positive(v).pass(), i, "sign/swap variant not PSD");
    expect(is_ppt(partial_transpose(b)).pass(), i, "partial transpose not PPT");
    expect(is_ppt(rotate_offdiag(b, theta)).pass(), i, "rotation not PPT");
    expect(is_ppt(average_diagonal(b)).pass(), i, "averaged diagonal not PPT");
    expect(is_ppt(geometric_mean_block(b)).pass(), i, "geometric-mean block not PPT");
    expect(offdiag_compression(b).pass(), i, "off-diagonal compression");
    const Block2x2 b2(b.a() + random_psd(rng, n), b.x(), b.b() + random_psd(rng, n));
    expect(is_positive(ando_mix(b, b2)).pass(), i, "Ando mix not PSD");

    // Conjugations realizing the transforms.
    const ComplexMatrix w = phase_conjugator(n, theta);
    const Block2x2 rotated = rotate_offdiag(b, theta);
    double r = rel(conj(w, h), assemble(rotated).dense());
    r = std::max(r, rel(w.dense().adjoint() * ht.dense() * w.dense(), assemble(partial_transpose(rotated)).dense()));
    r = std::max(r, rel(conj(swap_conjugator(n), h), assemble(swap_blocks(b)).dense()));
    r = std::max(r, rel(conj(sign_conjugator(n), h), assemble(negate_offdiag(b)).dense()));

    const PolarFactors pf = polar(b.x());
    const HermitianMatrix g = geometric_mean(b.a(), b.b());
    const ComplexMatrix wu = unitary_conjugator(pf.unitary);
    const HermitianMatrix gx = assemble(Block2x2(g, b.x(), g));
    r = std::max(r, rel(wu.dense().adjoint() * gx.dense() * wu.dense(),
                        assemble(Block2x2(g.congruence(pf.unitary), pf.modulus, g)).dense()));

    const ComplexMatrix j = block_hadamard(n);
    const HermitianMatrix re = cartesian_parts(b.x()).first;
    r = std::max(r, rel(j.dense().adjoint() * assemble(Block2x2(g, re, g)).dense() * j.dense(),
                        assemble(Block2x2(g + re, ComplexMatrix::zero(n), g - re)).dense()));
    worst = std::max(worst, r);
  }
  std::ostringstream detail;
  detail << count << " blocks, " << failed << " failed transforms, max conjugation residual " << worst << "; "
         << log.str();
  return finish("closure", failed == 0 && worst <= 1e-12, detail, clock);
}

Block2x2 analytic_sj_violation() {
  const double c = 0.5, s = std::sqrt(3.0) / 2;
  const HermitianMatrix r1 = HermitianMatrix::diagonal({1.0, 0.0});
  const HermitianMatrix r2{{c * c, c * s}, {c * s, s * s}};
  const HermitianMatrix diag = r1 + r2 + 0.1 * HermitianMatrix::identity(2);
  return Block2x2(diag, r1 - r2, diag);
}

SuiteCheck check_stored_violation(const Block2x2& b, int j) {
  Stopwatch clock;
  const Certificate c = certify_sj_violation(b, j);
  const bool ok = c.pass() && !c.marginal() && recheck(c) && confirm_sj_violation(b, j);
  std::ostringstream detail;
  const Link& l = c.links.back();
  detail << "s_" << j << "(X) = " << *l.lhs_value << " > s_" << j << "((A+B)/2) = " << *l.rhs_value
         << (ok ? ", re-certified" : ", NOT re-certified");
  return finish("stored-violation", ok, detail, clock);
}

SuiteCheck check_j1_hunt(int n, long samples, std::uint64_t seed) {
  Stopwatch clock;
  const HuntReport r = hunt_sj_counterexample(SampleSpec{.n = n, .seed = seed, .count = static_cast<int>(samples)}, 1);
  std::ostringstream detail;
  detail << "n=" << n << ", " << r.samples << " samples, " << r.evaluations << " evaluations, best ratio "
         << r.best_ratio << (r.hit ? ", HIT" : ", no hit");
  return finish("j1-hunt", !r.hit && r.best_ratio <= 1.0 + kMarginalFactor * kDefaultTol, detail, clock);
}

std::vector<SuiteCheck> run_selftest(std::uint64_t seed) {
  std::vector<SuiteCheck> out;
  out.push_back(check_eigensolver(50, seed));
  out.push_back(check_gm_identities(50, seed));
  out.push_back(check_extremal(20, seed));
  out.push_back(check_theorem_suite({2, 3}, 30, seed, 1));
  out.push_back(check_schur_oracle(100, seed));
  out.push_back(check_closure(50, seed));
  out.push_back(check_stored_violation(analytic_sj_violation(), 2));
  out.push_back(check_j1_hunt(2, 300, seed));

  Stopwatch clock;
  const SampleSpec spec{.n = 2, .seed = seed, .count = 10, .method = SampleMethod::ppt_mixed};
  std::string first, second;
  for (const VerificationReport& r : run_campaign(spec, VerifyConfig{}, 1)) first += to_json(r).dump() + "\n";
  for (const VerificationReport& r : run_campaign(spec, VerifyConfig{}, 2)) second += to_json(r).dump() + "\n";
  std::ostringstream detail;
  detail << "two campaigns of " << spec.count << " samples, " << first.size() << " bytes each";
  out.push_back(finish("determinism", first == second, detail, clock));
  return out;
}

}  // namespace pptb
