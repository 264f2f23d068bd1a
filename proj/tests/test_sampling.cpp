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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pptb/block.hpp"
#include "pptb/linalg.hpp"
#include "pptb/sampling.hpp"

using namespace pptb;

namespace {

const std::string kGolden = std::string(PPTB_TEST_DATA) + "/golden_stream.txt";

void dump(std::ostream& os, const DenseMatrix& m) {
  char buf[64];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%a %a\n", m(i, j).real(), m(i, j).imag());
      os << buf;
    }
  }
}

void dump(std::ostream& os, const Block2x2& b) {
  dump(os, b.a().dense());
  dump(os, b.x().dense());
  dump(os, b.b().dense());
}

// Every sampler at a fixed seed, as hex floats.
std::string stream_text() {
  std::ostringstream os;
  Rng rng(2024);
  for (int i = 0; i < 8; ++i) os << std::hex << rng.next() << std::dec << '\n';
  os << "ginibre\n";
  dump(os, random_ginibre(3, 1).dense());
  os << "hermitian\n";
  dump(os, random_hermitian(3, 2).dense());
  os << "psd\n";
  dump(os, random_psd(3, 3, 2).dense());
  os << "pd\n";
  dump(os, random_pd(3, 4, 10.0).dense());
  os << "unitary\n";
  dump(os, random_unitary(3, 5).dense());
  os << "psd_block\n";
  dump(os, random_psd_block(2, 6));
  os << "ppt_separable\n";
  dump(os, random_ppt_separable(2, 7, 3));
  os << "ppt_rejection\n";
  const RejectionSample rs = random_ppt_rejection(2, 8, 1000);
  os << rs.attempts << '\n';
  dump(os, rs.block);
  return os.str();
}

double defect(const ComplexMatrix& u) {
  return (u.dense().adjoint() * u.dense() - DenseMatrix::Identity(u.n(), u.n())).norm();
}

}  // namespace

TEST_CASE("splitmix64 and xoshiro256** reference values") {
  // Computed by an independent Python transcription of both generators.
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(1) == 0x910a2dec89025cc1ULL);
  Rng rng(42);
  CHECK(rng.next() == 0x15780b2e0c2ec716ULL);
  CHECK(rng.next() == 0x6104d9866d113a7eULL);
  CHECK(rng.next() == 0xae17533239e499a1ULL);
  CHECK(rng.next() == 0xecb8ad4703b360a1ULL);

  Rng gauss(7);
  CHECK(gauss.normal() == doctest::Approx(-0.2790239910251981).epsilon(1e-15));
  CHECK(gauss.normal() == doctest::Approx(1.5277231859624536).epsilon(1e-15));
  CHECK(derive_seed(5, 0) == (5 ^ 0xe220a8397b1dcdafULL));
}

TEST_CASE("uniform range") {
  Rng rng(1);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
}

TEST_CASE("determinism") {
  CHECK(random_ginibre(4, 11) == random_ginibre(4, 11));
  CHECK_FALSE(random_ginibre(4, 11) == random_ginibre(4, 12));
  CHECK(random_ppt_separable(3, 5, 4) == random_ppt_separable(3, 5, 4));
  CHECK(stream_text() == stream_text());
}

TEST_CASE("golden stream") {
  const std::string text = stream_text();
  if (std::getenv("PPTB_UPDATE_GOLDEN")) {
    std::ofstream(kGolden) << text;
  }
  std::ifstream in(kGolden);
  REQUIRE_MESSAGE(in.good(), "missing " << kGolden);
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(golden.str() == text);
}

TEST_CASE("ginibre statistics") {
  Rng rng(99);
  Complex sum = 0.0;
  double second = 0.0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const Complex z = random_ginibre(rng, 1, 1)(0, 0);
    sum += z;
    second += std::norm(z);
  }
  CHECK(std::abs(sum / static_cast<double>(draws)) < 0.05);
  CHECK(second / draws == doctest::Approx(1.0).epsilon(0.05));

  const int n = 64;
  const DenseMatrix g = random_ginibre(rng, n, n);
  for (int j = 0; j < n; ++j) CHECK(g.col(j).norm() / std::sqrt(n) == doctest::Approx(1.0).epsilon(0.35));
  CHECK(g.colwise().norm().mean() / std::sqrt(n) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("random_pd") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const double cap = seed % 2 ? 10.0 : 1000.0;
    const std::vector<double> ev = herm_eig(random_pd(n, seed, cap)).eigenvalues;
    CHECK(ev.back() > 0.0);
    CHECK(ev.front() / ev.back() <= cap * (1 + 1e-9));
  }
  CHECK(random_pd(3, 1, 1.0) == HermitianMatrix::identity(3));
  CHECK_THROWS_AS(random_pd(3, 1, 0.5), std::invalid_argument);
}

TEST_CASE("random_unitary") {
  const ComplexMatrix u1 = random_unitary(1, 3);
  CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-15);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const ComplexMatrix u = random_unitary(n, seed);
    CHECK(defect(u) <= 1e-12);
    CHECK(std::abs(std::abs(u.dense().determinant()) - 1.0) <= 1e-12);
  }
  Rng rng(8);
  const ComplexMatrix m(random_ginibre(rng, 4, 4));
  const ComplexMatrix u = random_unitary(rng, 4);
  const std::vector<double> s0 = singular_values(m);
  const std::vector<double> s1 = singular_values(u * m * u.adjoint());
  for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(s0[j] - s1[j]) <= 1e-10);
}

TEST_CASE("separable blocks") {
  const HermitianMatrix id3 = HermitianMatrix::identity(3);
  const Block2x2 corner = separable_block({{HermitianMatrix::diagonal({1.0, 0.0}), id3}});
  CHECK(corner.x() == ComplexMatrix::zero(3));
  CHECK(corner.b() == HermitianMatrix::zero(3));
  CHECK(is_ppt(corner, kStrictTol).pass());

  const Block2x2 ones = separable_block({{HermitianMatrix{{1, 1}, {1, 1}}, id3}});
  CHECK(ones == Block2x2(id3, ComplexMatrix::identity(3), id3));
  CHECK(is_ppt(ones, kStrictTol).pass());
  const std::vector<double> ev = herm_eig(assemble(ones)).eigenvalues;
  int rank = 0;
  for (double v : ev) rank += v > 1e-12;
  CHECK(rank == 3);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Block2x2 b = random_ppt_separable(3, seed, 4);
    CHECK(is_ppt(b, kStrictTol).pass());
    CHECK(is_positive(partial_transpose(b), kStrictTol).pass());
  }
  CHECK_THROWS_AS(random_ppt_separable(2, 0, 0), std::invalid_argument);
}

TEST_CASE("rejection sampler") {
  const RejectionSample one = random_ppt_rejection(1, 3, 1);
  CHECK(one.attempts == 1);
  CHECK(one.acceptance_rate == 1.0);

  const RejectionSample two = random_ppt_rejection(2, 4, 10000);
  CHECK(two.attempts >= 1);
  CHECK(two.acceptance_rate == doctest::Approx(1.0 / static_cast<double>(two.attempts)));
  CHECK(is_ppt(two.block, kStrictTol).pass());

  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(is_ppt(random_ppt_rejection(3, seed, 100000).block, kStrictTol).pass());

  // Rank-one draws on n = 2 are pure states; almost all are entangled.
  CHECK_THROWS_AS(random_ppt_rejection(2, 5, 3, 1), BudgetExhausted);
}

TEST_CASE("sample method names") {
  for (SampleMethod m : {SampleMethod::ginibre, SampleMethod::psd, SampleMethod::pd, SampleMethod::unitary,
                         SampleMethod::psd_block, SampleMethod::ppt_separable, SampleMethod::ppt_rejection,
                         SampleMethod::ppt_mixed}) {
    CHECK(parse_sample_method(to_string(m)) == m);
  }
  CHECK_THROWS_AS(parse_sample_method("haar"), std::invalid_argument);
}
