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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pptb/io.hpp"
#include "pptb/linalg.hpp"
#include "pptb/suite.hpp"
#include "pptb/verify.hpp"

namespace pptb::cli {
namespace {

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  int n = 2;
  std::uint64_t seed = 0;
  int count = 1;
  std::string method = "ppt_separable";
  int r = 0;
  long budget = 100000;
  double cond_cap = 100.0;
  double tol = kDefaultTol;
  std::vector<std::string> only;
  bool all = false;
  std::vector<std::string> norms;
  int j = 2;
  std::string replay;
  double inject_fault = 0.0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SampleSpec spec_from(const Options& o) {
  SampleSpec s;
  s.n = o.n;
  s.seed = o.seed;
  s.count = o.count;
  try {
    s.method = parse_sample_method(o.method);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  s.r = o.r;
  s.budget = o.budget;
  s.cond_cap = o.cond_cap;
  if (s.n < 1) throw UsageError("--n must be >= 1");
  if (s.count < 0) throw UsageError("--count must be >= 0");
  if (s.budget < 1) throw UsageError("--budget must be >= 1");
  return s;
}

bool is_ppt_method(SampleMethod m) {
  return m == SampleMethod::ppt_separable || m == SampleMethod::ppt_rejection || m == SampleMethod::ppt_mixed;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

// Runs `body` with the report stream: the --output file or `out`.
int with_output(const Options& o, std::ostream& out, std::ostream& err,
                const std::function<int(std::ostream&)>& body) {
  if (o.output.empty()) return body(out);
  std::ofstream file(o.output);
  if (!file) {
    err << "error: cannot write '" << o.output << "'\n";
    return kUsage;
  }
  return body(file);
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.input.empty()) throw UsageError("check needs --input");
  const Block2x2 b = read_block_file(o.input);
  const Certificate psd = is_positive(b, o.tol);
  const Certificate ppt = is_ppt(b, o.tol);
  std::optional<Certificate> schur;
  std::string schur_note;
  try {
    schur = schur_criterion(b, o.tol);
  } catch (const NotPD& e) {
    schur_note = "A is not positive definite";
  }
  return with_output(o, out, err, [&](std::ostream& os) {
    if (o.format == "json") {
      Json j{{"type", "check"}, {"n", b.n()}, {"positive", to_json(psd)}, {"ppt", to_json(ppt)}};
      j["schur"] = schur ? to_json(*schur) : Json(nullptr);
      os << j.dump() << "\n";
    } else {
      os << "PSD: " << (psd.pass() ? "pass" : "fail") << " (H min eig " << fmt(psd.gap()) << ")\n";
      os << "PPT: " << (ppt.pass() ? "pass" : "fail") << " (H min eig " << fmt(ppt.links[0].gap)
         << ", H^tau min eig " << fmt(ppt.links[1].gap) << ")\n";
      if (schur) {
        os << "Schur: " << (schur->pass() ? "pass" : "fail") << " (B - X^* A^-1 X min eig "
           << fmt(schur->links[0].gap) << ", B - X A^-1 X^* min eig " << fmt(schur->links[1].gap) << ")\n";
      } else {
        os << "Schur: skipped (" << schur_note << ")\n";
      }
    }
    return ppt.pass() ? kOk : kFailure;
  });
}

VerifyConfig verify_config(const Options& o, std::optional<int> n) {
  VerifyConfig cfg;
  cfg.tol = o.tol;
  if (o.all) {
    cfg.verifiers = all_verifiers();
  } else {
    cfg.verifiers.clear();
    for (const std::string& name : o.only) {
      if (name.empty()) continue;
      try {
        cfg.verifiers.push_back(parse_verifier(name));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (cfg.verifiers.empty()) throw UsageError("no verifiers selected (use --only NAME[,NAME...] or --all)");
  }
  const bool needs_norm = std::any_of(cfg.verifiers.begin(), cfg.verifiers.end(), [](VerifierId v) {
    return v == VerifierId::norm_chain || v == VerifierId::hiroshima;
  });
  for (const std::string& id : o.norms) {
    try {
      cfg.functionals.push_back(Functional::parse(id));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const Functional& f = cfg.functionals.back();
    if (needs_norm && !f.is_norm()) throw UsageError("'" + id + "' is not a unitarily invariant norm");
    if (n && f.k() > *n) throw UsageError("'" + id + "' needs k <= n = " + std::to_string(*n));
  }
  return cfg;
}

void write_table(std::ostream& os, const VerificationReport& r) {
  os << "sample " << r.sample_id << " (n=" << r.dimension << ", " << r.source << "): "
     << r.certificates.size() - static_cast<std::size_t>(r.failure_count + r.error_count) << " pass, "
     << r.marginal_count << " marginal, " << r.failure_count << " fail, " << r.error_count << " error\n";
  for (const Certificate& c : r.certificates) {
    if (!c.error.empty()) {
      os << "  " << c.name << ": error: " << c.error << "\n";
    } else if (!c.pass()) {
      const Link* w = c.worst();
      os << "  " << c.name << ": FAIL " << w->lhs << " <= " << w->rhs << " (gap " << fmt(w->gap) << ")\n";
    }
  }
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<VerificationReport> reports;
  if (!o.input.empty()) {
    const VerifyConfig cfg = verify_config(o, std::nullopt);
    reports.push_back(verify_block(read_block_file(o.input), cfg, 0, 0, "file"));
  } else {
    const SampleSpec spec = spec_from(o);
    if (!is_ppt_method(spec.method)) {
      throw UsageError("verify samples need --method ppt_separable, ppt_rejection or ppt_mixed");
    }
    const VerifyConfig cfg = verify_config(o, spec.n);
    reports = run_campaign(spec, cfg, default_threads());
  }
  const CampaignSummary summary = summarize(reports);
  return with_output(o, out, err, [&](std::ostream& os) {
    for (const VerificationReport& r : reports) {
      if (o.format == "json") {
        os << to_json(r).dump() << "\n";
      } else {
        write_table(os, r);
      }
    }
    if (o.format == "json") {
      os << to_json(summary).dump() << "\n";
    } else {
      os << "summary: " << summary.samples << " samples, " << summary.certificates << " certificates, "
         << summary.passed << " pass, " << summary.marginal << " marginal, " << summary.failed << " fail, "
         << summary.errors << " error\n";
    }
    return summary.failed == 0 && summary.errors == 0 ? kOk : kFailure;
  });
}

int cmd_sample(const Options& o, std::ostream& out, std::ostream& err) {
  const SampleSpec spec = spec_from(o);
  return with_output(o, out, err, [&](std::ostream& os) {
    for (int i = 0; i < spec.count; ++i) {
      Json line{{"type", "sample"}, {"index", i}, {"method", to_string(spec.method)}};
      std::optional<Block2x2> block;
      std::optional<ComplexMatrix> matrix;
      if (is_ppt_method(spec.method)) {
        CampaignSample s = campaign_sample(spec, i);
        line["seed"] = s.seed;
        line["source"] = s.source;
        line["regenerated"] = s.regenerated;
        block = std::move(s.block);
      } else {
        const std::uint64_t seed = derive_seed(spec.seed, static_cast<std::uint64_t>(i));
        line["seed"] = seed;
        Rng rng(seed);
        switch (spec.method) {
          case SampleMethod::ginibre: matrix = ComplexMatrix(random_ginibre(rng, spec.n, spec.n)); break;
          case SampleMethod::psd: matrix = random_psd(rng, spec.n, spec.r); break;
          case SampleMethod::pd: matrix = random_pd(rng, spec.n, spec.cond_cap); break;
          case SampleMethod::unitary: matrix = random_unitary(rng, spec.n); break;
          default: block = random_psd_block(rng, spec.n); break;
        }
      }
      if (o.format == "json") {
        if (block) line["block"] = to_json(*block);
        if (matrix) line["matrix"] = to_json(*matrix);
        os << line.dump() << "\n";
      } else {
        os << "sample " << i << " (" << to_string(spec.method) << ", seed " << line["seed"].get<std::uint64_t>()
           << ")\n";
        const DenseMatrix d = block ? assemble(*block).dense() : matrix->dense();
        for (Eigen::Index r = 0; r < d.rows(); ++r) {
          os << " ";
          for (Eigen::Index c = 0; c < d.cols(); ++c) {
            const double im = d(r, c).imag();
            os << " " << fmt(d(r, c).real()) << (im < 0 ? "-" : "+") << fmt(std::abs(im)) << "i";
          }
          os << "\n";
        }
      }
    }
    return kOk;
  });
}

int cmd_hunt(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string replay = !o.replay.empty() ? o.replay : o.input;
  if (!replay.empty()) {
    const Block2x2 b = read_block_file(replay);
    if (o.j < 1 || o.j > b.n()) throw UsageError("--j must be between 1 and n = " + std::to_string(b.n()));
    const bool confirmed = confirm_sj_violation(b, o.j, o.tol);
    const Certificate c = certify_sj_violation(b, o.j, o.tol);
    return with_output(o, out, err, [&](std::ostream& os) {
      if (o.format == "json") {
        os << Json{{"type", "replay"}, {"j", o.j}, {"confirmed", confirmed}, {"certificate", to_json(c)}}.dump()
           << "\n";
      } else {
        const Link& l = c.links.back();
        os << "replay j=" << o.j << ": " << (confirmed ? "violation re-certified" : "NOT re-certified") << " (s_"
           << o.j << "(X) = " << fmt(*l.lhs_value) << ", s_" << o.j << "((A+B)/2) = " << fmt(*l.rhs_value) << ")\n";
      }
      return confirmed ? kOk : kFailure;
    });
  }
  const SampleSpec spec = spec_from(o);
  if (spec.n < 2) throw UsageError("hunt needs --n >= 2");
  if (o.j < 1 || o.j > spec.n) throw UsageError("--j must be between 1 and n = " + std::to_string(spec.n));
  const HuntReport r = hunt_sj_counterexample(spec, o.j, o.tol);
  return with_output(o, out, err, [&](std::ostream& os) {
    if (o.format == "json") {
      os << to_json(r).dump() << "\n";
    } else {
      os << "hunt j=" << r.j << " n=" << r.n << ": " << (r.hit ? "certified hit" : "no hit") << " after "
         << r.samples << " samples (" << r.evaluations << " evaluations), best ratio " << fmt(r.best_ratio)
         << (r.best_source.empty() ? "" : " from " + r.best_source) << "\n";
      if (r.hit) os << to_json(*r.best_block).dump() << "\n";
    }
    return r.hit ? kOk : kExhausted;
  });
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err) {
  set_eigenvalue_fault(o.inject_fault);
  std::vector<SuiteCheck> checks;
  try {
    checks = run_selftest(o.seed);
  } catch (const std::exception& e) {
    checks.push_back(SuiteCheck{"selftest", false, std::string("aborted: ") + e.what(), 0.0});
  }
  set_eigenvalue_fault(0.0);
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
  return with_output(o, out, err, [&](std::ostream& os) {
    for (const SuiteCheck& c : checks) {
      if (o.format == "json") {
        os << Json{{"type", "check"}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}.dump() << "\n";
      } else {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
      }
    }
    if (o.format == "json") {
      os << Json{{"type", "summary"}, {"pass", ok}}.dump() << "\n";
    } else {
      os << (ok ? "selftest passed" : "selftest FAILED") << "\n";
    }
    return ok ? kOk : kFailure;
  });
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--output", o.output, "Write the report to PATH");
  cmd->add_option("--tol", o.tol, "Relative tolerance")->check(CLI::PositiveNumber);
}

void add_sampling(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "Block dimension");
  cmd->add_option("--seed", o.seed, "Base seed");
  cmd->add_option("--count", o.count, "Number of samples");
  cmd->add_option("--method", o.method, "Sample method");
  cmd->add_option("--r", o.r, "Rank, product terms or Wishart columns");
  cmd->add_option("--budget", o.budget, "Rejection budget per sample");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Certificates for inequalities on positive partial transpose blocks", "ppt-blocks"};
  app.require_subcommand(1, 1);

  CLI::App* check = app.add_subcommand("check", "PSD, PPT and Schur verdicts for one block file");
  check->add_option("--input", o.input, "Block JSON file")->required();
  add_common(check, o);

  CLI::App* verify = app.add_subcommand("verify", "Run verifiers on a block file or a sampled campaign");
  verify->add_option("--input", o.input, "Block JSON file");
  add_sampling(verify, o);
  verify->add_option("--only", o.only, "Verifiers to run")->delimiter(',');
  verify->add_flag("--all", o.all, "Run every verifier");
  verify->add_option("--norm", o.norms, "Functionals for lieb-gm, norm-chain and hiroshima")->delimiter(',');
  add_common(verify, o);

  CLI::App* sample = app.add_subcommand("sample", "Emit seeded random instances as JSON lines");
  add_sampling(sample, o);
  sample->add_option("--cond-cap", o.cond_cap, "Condition cap for --method pd");
  add_common(sample, o);

  CLI::App* hunt = app.add_subcommand("hunt", "Search for a PPT block with s_j(X) > s_j((A+B)/2)");
  add_sampling(hunt, o);
  hunt->add_option("--j", o.j, "Singular value index");
  hunt->add_option("--input,--replay", o.replay, "Re-certify a stored block instead of searching");
  add_common(hunt, o);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the invariant suite at reduced sample counts");
  selftest->add_option("--seed", o.seed, "Base seed");
  selftest->add_option("--inject-fault", o.inject_fault)->group("");
  add_common(selftest, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  // Per-command defaults for an omitted --count.
  if (*verify && verify->count("--count") == 0) o.count = 100;
  if (*hunt && hunt->count("--count") == 0) o.count = 100000;

  try {
    if (*check) return cmd_check(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*sample) return cmd_sample(o, out, err);
    if (*hunt) return cmd_hunt(o, out, err);
    return cmd_selftest(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const MatrixError& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace pptb::cli
