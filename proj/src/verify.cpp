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

#include "pptb/verify.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "pptb/linalg.hpp"

namespace pptb {
namespace {

constexpr double kLogFloor = 1e-300;
constexpr int kMaxRegenerations = 100;
constexpr int kClimbEvery = 1000;
constexpr int kClimbSteps = 200;

HermitianMatrix mean_gm(const Block2x2& b) { return geometric_mean(b.a(), b.b()); }

ComplexMatrix half_product(const Block2x2& b) {
  return ComplexMatrix(psd_sqrt(b.a()).dense() * psd_sqrt(b.b()).dense());
}

Certificate make(std::string name, std::string lhs, std::string rhs, double tol, std::vector<Link> links) {
  Certificate c;
  c.name = std::move(name);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.tol = tol;
  c.links = std::move(links);
  return c;
}

double log_prod(const std::vector<double>& s, int k) {
  double sum = 0.0;
  for (int j = 0; j < k; ++j) sum += std::log(std::max(s[static_cast<std::size_t>(j)], kLogFloor));
  return sum;
}

void require_norm(const Functional& f) {
  if (!f.is_norm()) throw std::invalid_argument("'" + f.id() + "' is not a unitarily invariant norm");
}

Certificate merge(std::string name, std::vector<Certificate> parts, double tol) {
  Certificate c = make(std::move(name), "", "", tol, {});
  for (Certificate& p : parts) {
    if (c.lhs.empty()) {
      c.lhs = p.lhs;
      c.rhs = p.rhs;
    }
    for (Link& l : p.links) c.links.push_back(std::move(l));
  }
  return c;
}

bool accepted(const Block2x2& b) {
  const Certificate ppt = is_ppt(b, kStrictTol);
  if (!ppt.pass() || ppt.marginal()) return false;
  return min_eig(b.a()) > pd_threshold(b.a()) && min_eig(b.b()) > pd_threshold(b.b());
}

double sj_ratio(const Block2x2& b, int j) {
  const double sx = singular_values(b.x())[static_cast<std::size_t>(j - 1)];
  const double sm = singular_values(0.5 * (b.a() + b.b()))[static_cast<std::size_t>(j - 1)];
  if (sm > 0.0) return sx / sm;
  return sx > 0.0 ? INFINITY : 0.0;
}

}  // namespace

void require_ppt(const Block2x2& b, bool need_pd) {
  const Certificate ppt = is_ppt(b, kStrictTol);
  if (!ppt.pass()) {
    throw NotPPT("block is not PPT (min eigenvalue " + std::to_string(ppt.gap()) + " on " +
                     ppt.worst()->rhs + ")",
                 ppt.gap());
  }
  if (need_pd) {
    require_pd(b.a(), "A");
    require_pd(b.b(), "B");
  }
}

Certificate verify_main(const Block2x2& b, double tol) {
  require_ppt(b);
  const PolarFactors pf = polar(b.x());
  const HermitianMatrix g = mean_gm(b);
  const HermitianMatrix rhs = geometric_mean(g, g.congruence(pf.unitary));
  return Certificate::single("main", loewner_link("|X|", "(A#B) # U^*(A#B)U", pf.modulus, rhs, tol));
}

Certificate verify_lee(const Block2x2& b, double tol) {
  require_ppt(b);
  const PolarFactors pf = polar(b.x());
  const HermitianMatrix g = mean_gm(b);
  const HermitianMatrix rotated = g.congruence(pf.unitary);
  const HermitianMatrix rhs_main = geometric_mean(g, rotated);
  const HermitianMatrix rhs_lee = 0.5 * (g + rotated);
  const Link main = loewner_link("|X|", "(A#B) # U^*(A#B)U", pf.modulus, rhs_main, tol);
  Link lee = loewner_link("|X|", "((A#B) + U^*(A#B)U)/2", pf.modulus, rhs_lee, tol);
  Link rhs = loewner_link("(A#B) # U^*(A#B)U", "((A#B) + U^*(A#B)U)/2", rhs_main, rhs_lee, tol);
  Link gaps = scalar_link("gap(main)", "gap(lee)", main.gap, lee.gap, tol);
  return make("lee", "|X|", "((A#B) + U^*(A#B)U)/2", tol, {std::move(lee), std::move(rhs), std::move(gaps)});
}

Certificate verify_lieb_gm(const Block2x2& b, const Functional& l, double tol) {
  require_ppt(b);
  const PolarFactors pf = polar(b.x());
  const std::string id = l.id();
  return Certificate::single("lieb-gm[" + id + "]",
                             scalar_link(id + "(|X|)", id + "(A#B)", l.evaluate_real(pf.modulus),
                                         l.evaluate_real(mean_gm(b)), tol));
}

Certificate verify_norm_chain(const Block2x2& b, const Functional& norm, double tol) {
  require_norm(norm);
  require_ppt(b);
  const std::string id = norm.id();
  const double nx = norm.evaluate_real(b.x());
  const double ng = norm.evaluate_real(mean_gm(b));
  const double nh = norm.evaluate_real(half_product(b));
  const double nm = 0.5 * norm.evaluate_real(b.a() + b.b());
  const std::string sx = id + "(X)", sg = id + "(A#B)", sh = id + "(A^1/2 B^1/2)", sm = id + "(A+B)/2";
  return make("norm-chain[" + id + "]", sx, sm, tol,
              {scalar_link(sx, sg, nx, ng, tol), scalar_link(sg, sh, ng, nh, tol),
               scalar_link(sh, sm, nh, nm, tol)});
}

Certificate verify_trace_chain(const Block2x2& b, double tol) {
  require_ppt(b);
  const double t0 = b.x().dense().squaredNorm();
  const double t1 = mean_gm(b).dense().squaredNorm();
  const double t2 = (b.a().dense() * b.b().dense()).trace().real();
  const double t3 = 0.5 * (b.a() + b.b()).dense().squaredNorm();
  return make("trace-chain", "tr(X^*X)", "tr((A+B)^2)/2", tol,
              {scalar_link("tr(X^*X)", "tr((A#B)^2)", t0, t1, tol), scalar_link("tr((A#B)^2)", "tr(AB)", t1, t2, tol),
               scalar_link("tr(AB)", "tr((A+B)^2)/2", t2, t3, tol)});
}

Certificate verify_singular_product_chain(const Block2x2& b, int k, double tol) {
  if (k < 1 || k > b.n()) {
    throw std::out_of_range("sv-product: k = " + std::to_string(k) + " outside 1.." + std::to_string(b.n()));
  }
  require_ppt(b);
  const double lx = log_prod(singular_values(b.x()), k);
  const double lg = log_prod(singular_values(mean_gm(b)), k);
  const double lf = log_prod(singular_values(frac_power_quarter_half(b.a(), b.b())), k);
  const double lh = log_prod(singular_values(half_product(b)), k);
  const std::string tag = "log prod_{j<=" + std::to_string(k) + "} s_j";
  const std::string sx = tag + "(X)", sg = tag + "(A#B)", sf = tag + "(B^1/4 A^1/2 B^1/4)",
                    sh = tag + "(A^1/2 B^1/2)";
  Link l1 = scalar_link(sx, sg, lx, lg, tol);
  Link l2 = scalar_link(sg, sf, lg, lf, tol);
  Link l3 = scalar_link(sf, sh, lf, lh, tol);
  // At k = n all three right-hand products equal sqrt(det A det B).
  if (k == b.n()) {
    mark_tight(l2);
    mark_tight(l3);
  }
  return make("sv-product[k=" + std::to_string(k) + "]", sx, sh, tol, {std::move(l1), std::move(l2), std::move(l3)});
}

Certificate verify_half_index(const Block2x2& b, double tol) {
  require_ppt(b);
  const std::vector<double> sx = singular_values(b.x());
  const std::vector<double> sg = singular_values(mean_gm(b));
  const std::vector<double> sm = singular_values(0.5 * (b.a() + b.b()));
  std::vector<Link> links;
  for (int j = 1; j <= b.n(); ++j) {
    const int i = (j + 1) / 2;
    const std::string dx = "s_" + std::to_string(j) + "(X)";
    const std::string dg = "s_" + std::to_string(i) + "(A#B)";
    const std::string dm = "s_" + std::to_string(i) + "((A+B)/2)";
    const auto jj = static_cast<std::size_t>(j - 1), ii = static_cast<std::size_t>(i - 1);
    links.push_back(scalar_link(dx, dg, sx[jj], sg[ii], tol));
    links.push_back(scalar_link(dg, dm, sg[ii], sm[ii], tol));
  }
  return make("half-index", "s_j(X)", "s_[(j+1)/2]((A+B)/2)", tol, std::move(links));
}

Certificate verify_hiroshima(const Block2x2& b, const Functional& norm, double tol) {
  require_norm(norm);
  require_ppt(b, false);
  const std::string id = norm.id();
  Link link = scalar_link(id + "(H)", id + "(A+B)", norm.evaluate_real(assemble(b)),
                          norm.evaluate_real(b.a() + b.b()), tol);
  // The trace norm of a PSD block is its trace, which equals tr(A + B).
  if (norm.kind() == FunctionalKind::schatten_norm && norm.p() == 1.0) mark_tight(link);
  return Certificate::single("hiroshima[" + id + "]", std::move(link));
}

Certificate verify_re_im(const Block2x2& b, double tol) {
  require_ppt(b);
  const HermitianMatrix g = mean_gm(b);
  const auto [re, im] = cartesian_parts(b.x());
  return make("re-im", "+-Re(X), +-Im(X)", "A#B", tol,
              {loewner_link("Re(X)", "A#B", re, g, tol), loewner_link("-Re(X)", "A#B", -re, g, tol),
               loewner_link("Im(X)", "A#B", im, g, tol), loewner_link("-Im(X)", "A#B", -im, g, tol)});
}

Certificate verify_extremal_gm(const HermitianMatrix& x, const HermitianMatrix& y, std::uint64_t seed,
                               double tol) {
  if (x.n() != y.n()) throw DimensionMismatch("verify_extremal_gm of different dimensions");
  require_pd(x, "X");
  require_pd(y, "Y");
  const int n = x.n();
  const HermitianMatrix g = geometric_mean(x, y);
  const HermitianMatrix zero = HermitianMatrix::zero(2 * n);
  std::vector<Link> links;
  // The block at Z = X # Y is singular by construction.
  links.push_back(loewner_link("0", "[X, G; G, Y]", zero, assemble(Block2x2(x, g, y)), tol));
  mark_tight(links.back());

  const double eps = 1e-3 * g.frobenius();
  Rng rng(seed);
  for (int i = 0; i < 10; ++i) {
    const HermitianMatrix d = random_psd(rng, n);
    const HermitianMatrix z = g + (eps / d.frobenius()) * d;
    links.push_back(loewner_link("0", "[X, G+eD_" + std::to_string(i) + "; G+eD_" + std::to_string(i) + ", Y]",
                                 zero, assemble(Block2x2(x, z, y)), tol, Sense::violated));
  }
  return make("extremal-gm", "0", "[X, Z; Z, Y] at Z = X#Y and above", tol, std::move(links));
}

std::string to_string(VerifierId v) {
  switch (v) {
    case VerifierId::main: return "main";
    case VerifierId::lee: return "lee";
    case VerifierId::lieb_gm: return "lieb-gm";
    case VerifierId::norm_chain: return "norm-chain";
    case VerifierId::trace_chain: return "trace-chain";
    case VerifierId::sv_product: return "sv-product";
    case VerifierId::half_index: return "half-index";
    case VerifierId::hiroshima: return "hiroshima";
    case VerifierId::re_im: return "re-im";
    case VerifierId::extremal_gm: return "extremal-gm";
  }
  return "unknown";
}

VerifierId parse_verifier(const std::string& name) {
  for (VerifierId v : all_verifiers())
    if (to_string(v) == name) return v;
  throw std::invalid_argument("unknown verifier '" + name + "'");
}

const std::vector<VerifierId>& all_verifiers() {
  static const std::vector<VerifierId> kAll{
      VerifierId::main,       VerifierId::lee,        VerifierId::lieb_gm,   VerifierId::norm_chain,
      VerifierId::trace_chain, VerifierId::sv_product, VerifierId::half_index, VerifierId::hiroshima,
      VerifierId::re_im,      VerifierId::extremal_gm};
  return kAll;
}

std::vector<Functional> default_norms(int n) {
  std::vector<Functional> out;
  for (int k = 1; k <= n; ++k) out.push_back(Functional::ky_fan(k));
  out.push_back(Functional::schatten(1.0));
  out.push_back(Functional::schatten(2.0));
  out.push_back(Functional::schatten(INFINITY));
  return out;
}

std::vector<Functional> default_lieb_functionals(int n) {
  return {Functional::ky_fan(1), Functional::schatten(3.0), Functional::singular_product(std::min(2, n)),
          Functional::determinant()};
}

std::vector<Certificate> run_verifiers(const Block2x2& b, const VerifyConfig& cfg, std::uint64_t seed) {
  const int n = b.n();
  const double tol = cfg.tol;
  const std::vector<Functional> lieb = cfg.functionals.empty() ? default_lieb_functionals(n) : cfg.functionals;
  const std::vector<Functional> norms = cfg.functionals.empty() ? default_norms(n) : cfg.functionals;

  std::vector<Certificate> out;
  for (VerifierId v : cfg.verifiers) {
    const std::string name = to_string(v);
    try {
      std::vector<Certificate> parts;
      switch (v) {
        case VerifierId::main: out.push_back(verify_main(b, tol)); break;
        case VerifierId::lee: out.push_back(verify_lee(b, tol)); break;
        case VerifierId::trace_chain: out.push_back(verify_trace_chain(b, tol)); break;
        case VerifierId::half_index: out.push_back(verify_half_index(b, tol)); break;
        case VerifierId::re_im: out.push_back(verify_re_im(b, tol)); break;
        case VerifierId::extremal_gm:
          out.push_back(verify_extremal_gm(b.a(), b.b(), derive_seed(seed, 0x6d), tol));
          break;
        case VerifierId::lieb_gm:
          for (const Functional& l : lieb) parts.push_back(verify_lieb_gm(b, l, tol));
          out.push_back(merge(name, std::move(parts), tol));
          break;
        case VerifierId::norm_chain:
          for (const Functional& l : norms) parts.push_back(verify_norm_chain(b, l, tol));
          out.push_back(merge(name, std::move(parts), tol));
          break;
        case VerifierId::hiroshima:
          for (const Functional& l : norms) parts.push_back(verify_hiroshima(b, l, tol));
          out.push_back(merge(name, std::move(parts), tol));
          break;
        case VerifierId::sv_product:
          for (int k = 1; k <= n; ++k) parts.push_back(verify_singular_product_chain(b, k, tol));
          out.push_back(merge(name, std::move(parts), tol));
          break;
      }
    } catch (const MatrixError& e) {
      out.push_back(Certificate::failed_precondition(name, e.what(), tol));
    } catch (const std::out_of_range& e) {
      out.push_back(Certificate::failed_precondition(name, e.what(), tol));
    }
  }
  return out;
}

VerificationReport verify_block(const Block2x2& b, const VerifyConfig& cfg, long sample_id, std::uint64_t seed,
                                std::string source) {
  VerificationReport r;
  r.sample_id = sample_id;
  r.seed = seed;
  r.dimension = b.n();
  r.source = std::move(source);
  r.certificates = run_verifiers(b, cfg, seed);
  for (const Certificate& c : r.certificates) {
    if (!c.error.empty()) {
      ++r.error_count;
    } else if (!c.pass()) {
      ++r.failure_count;
    }
    if (c.marginal()) ++r.marginal_count;
  }
  return r;
}

CampaignSample campaign_sample(const SampleSpec& spec, long index) {
  SampleMethod method = spec.method;
  if (method == SampleMethod::ppt_mixed) {
    method = index % 10 < 7 ? SampleMethod::ppt_separable : SampleMethod::ppt_rejection;
  }
  if (method != SampleMethod::ppt_separable && method != SampleMethod::ppt_rejection) {
    throw std::invalid_argument("campaigns need a PPT sample method, not '" + to_string(spec.method) + "'");
  }
  const std::uint64_t base = derive_seed(spec.seed, static_cast<std::uint64_t>(index));
  for (int attempt = 0;; ++attempt) {
    const std::uint64_t seed = attempt == 0 ? base : derive_seed(base, static_cast<std::uint64_t>(attempt));
    Rng rng(seed);
    Block2x2 b = method == SampleMethod::ppt_separable
                     ? random_ppt_separable(rng, spec.n, spec.r > 0 ? spec.r : spec.n + 1)
                     : random_ppt_rejection(rng, spec.n, spec.budget, spec.method == SampleMethod::ppt_mixed ? 0 : spec.r)
                           .block;
    if (accepted(b) || attempt + 1 == kMaxRegenerations) {
      return CampaignSample{std::move(b), seed, to_string(method), attempt};
    }
  }
}

int default_threads() {
  if (const char* env = std::getenv("PPT_BLOCKS_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

std::vector<VerificationReport> run_campaign(const SampleSpec& spec, const VerifyConfig& cfg, int threads) {
  const long count = std::max(0, spec.count);
  std::vector<VerificationReport> reports(static_cast<std::size_t>(count));
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (long i = next++; i < count; i = next++) {
      try {
        CampaignSample s = campaign_sample(spec, i);
        VerificationReport r = verify_block(s.block, cfg, i, s.seed, s.source);
        r.regenerated = s.regenerated;
        reports[static_cast<std::size_t>(i)] = std::move(r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };

  const int workers = static_cast<int>(std::clamp<long>(threads, 1, std::max<long>(1, count)));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

CampaignSummary summarize(const std::vector<VerificationReport>& reports) {
  CampaignSummary s;
  s.samples = static_cast<long>(reports.size());
  for (const VerificationReport& r : reports) {
    for (const Certificate& c : r.certificates) {
      ++s.certificates;
      if (!c.error.empty()) {
        ++s.errors;
      } else if (c.pass()) {
        ++s.passed;
      } else {
        ++s.failed;
      }
      if (c.marginal()) ++s.marginal;
    }
  }
  return s;
}

Certificate certify_sj_violation(const Block2x2& b, int j, double tol) {
  if (j < 1 || j > b.n()) {
    throw std::out_of_range("j = " + std::to_string(j) + " outside 1.." + std::to_string(b.n()));
  }
  Certificate c = is_ppt(b, tol);
  c.name = "sj-violation[j=" + std::to_string(j) + "]";
  const auto jj = static_cast<std::size_t>(j - 1);
  const std::string tag = std::to_string(j);
  c.links.push_back(scalar_link("s_" + tag + "(X)", "s_" + tag + "((A+B)/2)", singular_values(b.x())[jj],
                                singular_values(0.5 * (b.a() + b.b()))[jj], tol, Sense::violated));
  c.lhs = c.links.back().lhs;
  c.rhs = c.links.back().rhs;
  return c;
}

bool confirm_sj_violation(const Block2x2& b, int j, double tol) {
  const Certificate c = certify_sj_violation(b, j, tol);
  if (!c.pass() || c.marginal() || !recheck(c)) return false;
  const auto jj = static_cast<Eigen::Index>(j - 1);
  const HermitianMatrix m = 0.5 * (b.a() + b.b());
  auto clear = [&](double sx, double sm) { return sx - sm > kMarginalFactor * tol * std::max(1.0, sm); };
  const double tight_x = singular_values(b.x(), kTightJacobi)[static_cast<std::size_t>(jj)];
  const double tight_m = singular_values(m, kTightJacobi)[static_cast<std::size_t>(jj)];
  const double ref_x = Eigen::JacobiSVD<DenseMatrix>(b.x().dense()).singularValues()(jj);
  const double ref_m = Eigen::JacobiSVD<DenseMatrix>(m.dense()).singularValues()(jj);
  return clear(tight_x, tight_m) && clear(ref_x, ref_m);
}

HuntReport hunt_sj_counterexample(const SampleSpec& spec, int j, double tol) {
  const int n = spec.n;
  if (n < 2) throw std::out_of_range("hunt needs n >= 2");
  if (j < 1 || j > n) throw std::out_of_range("j = " + std::to_string(j) + " outside 1.." + std::to_string(n));

  HuntReport report;
  report.j = j;
  report.n = n;
  report.seed = spec.seed;
  double best = -1.0;

  // Returns true on a certified hit.
  auto consider = [&](const Block2x2& b, const std::string& source, double ratio) {
    ++report.evaluations;
    if (ratio > best) {
      best = ratio;
      report.best_ratio = ratio;
      report.best_block = b;
      report.best_source = source;
    }
    if (ratio > 1.0 && confirm_sj_violation(b, j, tol)) {
      report.hit = true;
      report.best_ratio = ratio;
      report.best_block = b;
      report.best_source = source;
      report.certificate = certify_sj_violation(b, j, tol);
      return true;
    }
    return false;
  };

  // Coordinate perturbations of X, kept when PPT survives and the ratio grows.
  Rng climb_rng(derive_seed(spec.seed, 0x68756e74));
  auto climb = [&]() {
    if (!report.best_block) return false;
    Block2x2 current = *report.best_block;
    double ratio = best;
    double sigma = 0.1 * std::max(current.x().frobenius(), 1e-3) / n;
    const std::string source = report.best_source.ends_with("+climb") ? report.best_source
                                                                       : report.best_source + "+climb";
    for (int step = 0; step < kClimbSteps; ++step) {
      DenseMatrix x = current.x().dense();
      const auto p = static_cast<Eigen::Index>(climb_rng.next() % static_cast<std::uint64_t>(n));
      const auto q = static_cast<Eigen::Index>(climb_rng.next() % static_cast<std::uint64_t>(n));
      x(p, q) += sigma * climb_rng.complex_normal();
      Block2x2 trial(current.a(), ComplexMatrix(std::move(x)), current.b());
      const Certificate ppt = is_ppt(trial, kStrictTol);
      const double r = ppt.pass() && !ppt.marginal() ? sj_ratio(trial, j) : -1.0;
      if (r > ratio) {
        ratio = r;
        current = std::move(trial);
        sigma *= 1.5;
        if (consider(current, source, r)) return true;
      } else {
        sigma = std::max(sigma * 0.7, 1e-8);
      }
    }
    return false;
  };

  for (long i = 0; i < spec.count; ++i) {
    Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(i)));
    std::optional<Block2x2> b;
    std::string source;
    if (i % 2 == 0) {
      const int r = spec.r > 0 ? spec.r : 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n + 1));
      b = random_ppt_separable(rng, n, r);
      source = "ppt_separable";
    } else {
      try {
        b = random_ppt_rejection(rng, n, spec.budget).block;
        source = "ppt_rejection";
      } catch (const BudgetExhausted&) {
      }
    }
    ++report.samples;
    if (b && consider(*b, source, sj_ratio(*b, j))) return report;
    if ((i + 1) % kClimbEvery == 0 && climb()) return report;
  }
  climb();
  return report;
}

}  // namespace pptb
