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

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pptb/io.hpp"
#include "pptb/suite.hpp"

namespace {

constexpr std::uint64_t kSeed = 20260101;

struct Row {
  int id;
  pptb::SuiteCheck check;
};

pptb::SuiteCheck timed(const std::string& name, const std::function<pptb::SuiteCheck()>& body) {
  const auto start = std::chrono::steady_clock::now();
  pptb::SuiteCheck c;
  try {
    c = body();
  } catch (const std::exception& e) {
    c = pptb::SuiteCheck{name, false, std::string("aborted: ") + e.what(), 0.0};
  }
  c.name = name;
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

// All parts must pass; details are joined.
pptb::SuiteCheck combine(const std::vector<pptb::SuiteCheck>& parts) {
  pptb::SuiteCheck out;
  out.pass = true;
  for (const pptb::SuiteCheck& p : parts) {
    out.pass = out.pass && p.pass;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += p.name + (p.pass ? " ok" : " FAILED") + " (" + p.detail + ")";
  }
  return out;
}

pptb::SuiteCheck determinism() {
  const std::vector<std::string> args = {"verify", "--all",  "--method", "ppt_mixed", "--n",
                                         "3",      "--seed", "99",       "--count",   "200"};
  std::ostringstream first, second, err;
  const int c1 = pptb::cli::run(args, first, err);
  const int c2 = pptb::cli::run(args, second, err);
  pptb::SuiteCheck c;
  c.pass = c1 == 0 && c2 == 0 && first.str() == second.str() && !first.str().empty();
  c.detail = "exit codes " + std::to_string(c1) + "/" + std::to_string(c2) + ", " +
             std::to_string(first.str().size()) + " and " + std::to_string(second.str().size()) + " bytes, " +
             (first.str() == second.str() ? "identical" : "DIFFERENT");
  if (!err.str().empty()) c.detail += ", stderr: " + err.str();
  return c;
}

}  // namespace

int main() {
  std::vector<Row> rows;
  rows.push_back({1, timed("eigensolver soundness", [] { return pptb::check_eigensolver(500, kSeed); })});
  rows.push_back({2, timed("geometric mean identities", [] { return pptb::check_gm_identities(500, kSeed); })});
  rows.push_back({3, timed("extremal property", [] { return pptb::check_extremal(200, kSeed); })});
  rows.push_back({4, timed("theorem suite", [] {
                    return pptb::check_theorem_suite({2, 3, 4}, 1000, kSeed, 1);
                  })});
  rows.push_back({5, timed("schur oracle equivalence", [] { return pptb::check_schur_oracle(1000, kSeed); })});
  rows.push_back({6, timed("closure suite", [] { return pptb::check_closure(500, kSeed); })});
  rows.push_back({7, timed("s_j counterexample", [] {
                    const pptb::Block2x2 stored =
                        pptb::read_block_file(std::string(PPTB_TEST_DATA) + "/sj_violation_n2.json");
                    std::vector<pptb::SuiteCheck> parts = {
                        pptb::check_stored_violation(stored, 2),
                        pptb::check_stored_violation(pptb::analytic_sj_violation(), 2),
                        pptb::check_j1_hunt(2, 2000, kSeed),
                        pptb::check_j1_hunt(3, 2000, kSeed + 1),
                    };
                    parts[0].name = "stored file";
                    parts[1].name = "analytic block";
                    parts[2].name = "j=1 hunt n=2";
                    parts[3].name = "j=1 hunt n=3";
                    return combine(parts);
                  })});
  rows.push_back({8, timed("determinism", determinism)});

  bool all = true;
  for (const Row& r : rows) {
    all = all && r.check.pass;
    std::cout << (r.check.pass ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.check.name << " ["
              << r.check.seconds << " s]: " << r.check.detail << std::endl;
  }
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
