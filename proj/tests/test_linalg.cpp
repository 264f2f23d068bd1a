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
#include <numbers>

#include "oracles.hpp"
#include "pptb/linalg.hpp"
#include "pptb/sampling.hpp"

using namespace pptb;

namespace {

double unitarity_defect(const ComplexMatrix& u) {
  const DenseMatrix& d = u.dense();
  return (d.adjoint() * d - DenseMatrix::Identity(d.rows(), d.cols())).norm();
}

double reconstruction_residual(const HermitianMatrix& m, const EigenSystem& es) {
  Eigen::VectorXd lambda(m.n());
  for (int j = 0; j < m.n(); ++j) lambda(j) = es.eigenvalues[static_cast<std::size_t>(j)];
  const DenseMatrix& u = es.basis.dense();
  const DenseMatrix r = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
  return (m.dense() - r).norm() / std::max(1.0, m.frobenius());
}

}  // namespace

TEST_CASE("herm_eig on small closed-form inputs") {
  SUBCASE("identity") {
    const EigenSystem es = herm_eig(HermitianMatrix::identity(3));
    for (double v : es.eigenvalues) CHECK(v == doctest::Approx(1.0));
    CHECK(unitarity_defect(es.basis) < 1e-12);
  }
  SUBCASE("diagonal") {
    const EigenSystem es = herm_eig(HermitianMatrix::diagonal({-2.0, 5.0}));
    CHECK(es.eigenvalues[0] == 5.0);
    CHECK(es.eigenvalues[1] == -2.0);
    // permutation of the identity
    CHECK(std::abs(es.basis(1, 0)) == 1.0);
    CHECK(std::abs(es.basis(0, 1)) == 1.0);
  }
  SUBCASE("2x2 characteristic polynomial") {
    const EigenSystem es = herm_eig(HermitianMatrix{{2, 1}, {1, 2}});
    CHECK(es.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(es.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("complex off-diagonal") {
    // [[1, i], [-i, 1]] has eigenvalues 2 and 0.
    const EigenSystem es = herm_eig(HermitianMatrix{{1, Complex(0, 1)}, {Complex(0, -1), 1}});
    CHECK(es.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(es.eigenvalues[1]) < 1e-15);
  }
}

TEST_CASE("herm_eig agrees with the Sturm bisection oracle") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const HermitianMatrix m = random_hermitian(6, seed);
    const EigenSystem es = herm_eig(m);
    const std::vector<double> ref = oracle::bisection_eigenvalues(m.dense());
    for (std::size_t j = 0; j < ref.size(); ++j) CHECK(std::abs(es.eigenvalues[j] - ref[j]) < 1e-8);
  }
}

TEST_CASE("herm_eig reconstruction and orthonormality across sizes") {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const HermitianMatrix m = random_hermitian(n, derive_seed(seed, static_cast<std::uint64_t>(n)));
      const EigenSystem es = herm_eig(m);
      CHECK(reconstruction_residual(m, es) <= 1e-10);
      CHECK(unitarity_defect(es.basis) <= 1e-10);
      CHECK(std::is_sorted(es.eigenvalues.rbegin(), es.eigenvalues.rend()));
    }
  }
}

TEST_CASE("herm_eig handles degenerate and badly scaled spectra") {
  // Repeated eigenvalue rotated into a random basis.
  const ComplexMatrix u = random_unitary(5, 11);
  const HermitianMatrix d = HermitianMatrix::diagonal({3.0, 3.0, 3.0, -1.0, 1e-9});
  const HermitianMatrix m = d.congruence(u.adjoint());
  const EigenSystem es = herm_eig(m);
  CHECK(es.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(es.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(es.eigenvalues[4] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(reconstruction_residual(m, es) <= 1e-10);

  const HermitianMatrix tiny = 1e-200 * random_hermitian(4, 3);
  CHECK(reconstruction_residual(tiny, herm_eig(tiny)) <= 1e-10);
  const HermitianMatrix zero = HermitianMatrix::zero(3);
  CHECK(herm_eig(zero).eigenvalues == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("herm_eig reports non-convergence with the residual") {
  const HermitianMatrix m = random_hermitian(6, 5);
  try {
    herm_eig(m, JacobiOptions{1e-13, 1});
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.residual() > 0.0);
  }
}

TEST_CASE("min_eig") {
  CHECK(min_eig(HermitianMatrix::diagonal({1.0, -1.0})) == -1.0);
  CHECK(min_eig(HermitianMatrix::identity(4)) == 1.0);
  // [[0, N], [N^*, 0]] with N the nilpotent shift has eigenvalues +-1, 0, 0.
  const HermitianMatrix h{{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}};
  CHECK(min_eig(h) == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("svd closed forms") {
  SUBCASE("zero") {
    const SvdSystem s = svd(ComplexMatrix::zero(3));
    for (double v : s.singulars) CHECK(v == 0.0);
    CHECK(unitarity_defect(s.left) < 1e-14);
  }
  SUBCASE("nilpotent shift") {
    const SvdSystem s = svd(ComplexMatrix{{0, 1}, {0, 0}});
    CHECK(s.singulars[0] == doctest::Approx(1.0));
    CHECK(s.singulars[1] == 0.0);
  }
  SUBCASE("unitary") {
    const SvdSystem s = svd(random_unitary(4, 99));
    for (double v : s.singulars) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("svd invariants on random and rank-deficient inputs") {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      Rng rng(derive_seed(seed, 100 + static_cast<std::uint64_t>(n)));
      DenseMatrix x = random_ginibre(rng, n, n);
      if (seed % 3 == 1 && n > 1) {
        // rank n - 1
        x = random_ginibre(rng, n, n - 1) * random_ginibre(rng, n - 1, n);
      } else if (seed % 3 == 2) {
        x = random_ginibre(rng, n, 1) * random_ginibre(rng, 1, n);
      }
      const ComplexMatrix xm(x);
      const SvdSystem s = svd(xm);
      Eigen::VectorXd sigma(n);
      for (int j = 0; j < n; ++j) sigma(j) = s.singulars[static_cast<std::size_t>(j)];
      const DenseMatrix r = s.left.dense() * sigma.cast<Complex>().asDiagonal() * s.right.dense().adjoint();
      CHECK((r - x).norm() <= 1e-10 * std::max(1.0, x.norm()));
      CHECK(unitarity_defect(s.left) <= 1e-10);
      CHECK(unitarity_defect(s.right) <= 1e-10);
      CHECK(std::is_sorted(s.singulars.rbegin(), s.singulars.rend()));

      const std::vector<double> ref = oracle::reference_singular_values(x);
      for (int j = 0; j < n; ++j) {
        CHECK(std::abs(s.singulars[static_cast<std::size_t>(j)] - ref[static_cast<std::size_t>(j)]) <=
              1e-8 * std::max(1.0, ref[0]));
      }
      // Square roots of the Gram eigenvalues.
      const EigenSystem gram = herm_eig(HermitianMatrix::symmetrized(x.adjoint() * x));
      for (int j = 0; j < n; ++j) {
        const double root = std::sqrt(std::max(gram.eigenvalues[static_cast<std::size_t>(j)], 0.0));
        CHECK(std::abs(s.singulars[static_cast<std::size_t>(j)] - root) <= 1e-8 * std::max(1.0, ref[0]));
      }
    }
  }
}

TEST_CASE("polar decomposition examples") {
  SUBCASE("real rotation") {
    const ComplexMatrix x{{0, -1}, {1, 0}};
    const PolarFactors p = polar(x);
    CHECK(relative_distance(p.unitary, x) < 1e-14);
    CHECK(relative_distance(p.modulus, HermitianMatrix::identity(2)) < 1e-14);
  }
  SUBCASE("singular diagonal uses the W V^* completion") {
    const PolarFactors p = polar(ComplexMatrix::diagonal({3.0, 0.0}));
    CHECK(relative_distance(p.unitary, ComplexMatrix::identity(2)) < 1e-14);
    CHECK(relative_distance(p.modulus, HermitianMatrix::diagonal({3.0, 0.0})) < 1e-14);
  }
  SUBCASE("scaled Haar unitary") {
    const ComplexMatrix v = random_unitary(4, 2024);
    const PolarFactors p = polar(Complex(2.0) * v);
    CHECK(relative_distance(p.unitary * v.adjoint(), ComplexMatrix::identity(4)) < 1e-10);
    CHECK(relative_distance(p.modulus, 2.0 * HermitianMatrix::identity(4)) < 1e-10);
  }
}

TEST_CASE("polar invariants") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(derive_seed(seed, 200 + static_cast<std::uint64_t>(n)));
      DenseMatrix x = random_ginibre(rng, n, n);
      if (seed % 4 == 3) x.col(0).setZero();
      const PolarFactors p = polar(ComplexMatrix(x));
      CHECK(unitarity_defect(p.unitary) <= 1e-10);
      CHECK((p.unitary.dense() * p.modulus.dense() - x).norm() <= 1e-10 * std::max(1.0, x.norm()));
      CHECK(min_eig(p.modulus) >= -1e-12);
    }
  }
}

TEST_CASE("psd_sqrt") {
  CHECK(relative_distance(psd_sqrt(4.0 * HermitianMatrix::identity(3)),
                          2.0 * HermitianMatrix::identity(3)) < 1e-15);
  CHECK(relative_distance(psd_sqrt(HermitianMatrix::diagonal({9.0, 16.0})),
                          HermitianMatrix::diagonal({3.0, 4.0})) < 1e-15);

  const HermitianMatrix p{{2, 1}, {1, 2}};
  const HermitianMatrix r = psd_sqrt(p);
  CHECK((r.dense() * r.dense() - p.dense()).norm() <= 1e-8 * p.frobenius());
  const EigenSystem es = herm_eig(r);
  CHECK(es.eigenvalues[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(es.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

  // Roundoff-level negative eigenvalues are clamped.
  const HermitianMatrix dust = HermitianMatrix::diagonal({1.0, -1e-12});
  CHECK(min_eig(psd_sqrt(dust)) == 0.0);

  try {
    psd_sqrt(HermitianMatrix::diagonal({1.0, -0.5}));
    FAIL("expected NotPSD");
  } catch (const NotPSD& e) {
    CHECK(e.eigenvalue() == -0.5);
    REQUIRE(e.witness().size() == 2);
    CHECK(std::abs(e.witness()[1]) == doctest::Approx(1.0));
  }
}

TEST_CASE("pd_inverse") {
  CHECK(relative_distance(pd_inverse(2.0 * HermitianMatrix::identity(2)),
                          0.5 * HermitianMatrix::identity(2)) < 1e-15);
  CHECK(relative_distance(pd_inverse(HermitianMatrix::diagonal({1.0, 4.0})),
                          HermitianMatrix::diagonal({1.0, 0.25})) < 1e-15);
  const HermitianMatrix p = random_pd(5, 7, 100.0);
  const DenseMatrix prod = p.dense() * pd_inverse(p).dense();
  CHECK((prod - DenseMatrix::Identity(5, 5)).norm() <= 1e-8 * 100.0);
  CHECK_THROWS_AS(pd_inverse(HermitianMatrix::diagonal({1.0, 0.0})), NotPD);
  CHECK_THROWS_AS(pd_inverse(HermitianMatrix::diagonal({1.0, -3.0})), NotPD);
}

TEST_CASE("loewner_leq") {
  const Certificate up = loewner_leq(HermitianMatrix::zero(2), HermitianMatrix::identity(2));
  CHECK(up.pass());
  CHECK(up.gap() == 1.0);
  const Certificate down = loewner_leq(HermitianMatrix::identity(2), HermitianMatrix::zero(2));
  CHECK_FALSE(down.pass());
  CHECK(down.gap() == -1.0);
  CHECK(down.witness().size() == 2);
  CHECK(recheck(up));
  CHECK(recheck(down));
  CHECK_THROWS_AS(loewner_leq(HermitianMatrix::zero(2), HermitianMatrix::zero(3)), DimensionMismatch);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const HermitianMatrix x = random_pd(rng, 4, 100.0);
    const HermitianMatrix y = random_pd(rng, 4, 100.0);
    CHECK(loewner_leq(geometric_mean(x, y), 0.5 * (x + y), 1e-8).pass());
  }
}

TEST_CASE("geometric_mean closed forms") {
  CHECK(relative_distance(geometric_mean(HermitianMatrix::identity(3), HermitianMatrix::identity(3)),
                          HermitianMatrix::identity(3)) < 1e-15);
  CHECK(relative_distance(geometric_mean(HermitianMatrix::diagonal({1.0, 4.0}),
                                         HermitianMatrix::diagonal({9.0, 16.0})),
                          HermitianMatrix::diagonal({3.0, 8.0})) < 1e-14);

  // Simultaneous diagonalization oracle: both matrices are diagonal in the
  // (1, +-1)/sqrt2 basis with eigenvalues (3, 1) and (1, 3).
  const HermitianMatrix a{{2, 1}, {1, 2}};
  const HermitianMatrix b{{2, -1}, {-1, 2}};
  const double s = 1.0 / std::numbers::sqrt2;
  const ComplexMatrix q{{s, s}, {s, -s}};
  const HermitianMatrix expected =
      HermitianMatrix::diagonal({std::sqrt(3.0 * 1.0), std::sqrt(1.0 * 3.0)}).congruence(q.adjoint());
  CHECK(relative_distance(geometric_mean(a, b), expected) < 1e-14);
  CHECK(relative_distance(expected, std::sqrt(3.0) * HermitianMatrix::identity(2)) < 1e-15);
}

TEST_CASE("geometric_mean errors and regularization") {
  CHECK_THROWS_AS(geometric_mean(HermitianMatrix::diagonal({1.0, 0.0}), HermitianMatrix::identity(2)),
                  NotPD);
  CHECK_THROWS_AS(geometric_mean(HermitianMatrix::identity(2), HermitianMatrix::diagonal({1.0, -1.0})),
                  NotPSD);
  // PSD second argument is allowed.
  const HermitianMatrix g = geometric_mean(HermitianMatrix::identity(2), HermitianMatrix::diagonal({4.0, 0.0}));
  CHECK(relative_distance(g, HermitianMatrix::diagonal({2.0, 0.0})) < 1e-15);
  const HermitianMatrix reg =
      geometric_mean_reg(HermitianMatrix::diagonal({1.0, 0.0}), HermitianMatrix::diagonal({0.0, 1.0}), 1e-6);
  CHECK(relative_distance(reg, std::sqrt((1.0 + 1e-6) * 1e-6) * HermitianMatrix::identity(2)) < 1e-12);
}

TEST_CASE("geometric mean properties on random PD pairs") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      Rng rng(derive_seed(seed, 300 + static_cast<std::uint64_t>(n)));
      const HermitianMatrix a = random_pd(rng, n, 1000.0);
      const HermitianMatrix b = random_pd(rng, n, 1000.0);
      const HermitianMatrix g = geometric_mean(a, b);
      const HermitianMatrix h = geometric_mean(b, a);
      CHECK((g.dense() - h.dense()).norm() <= 1e-7 * std::max(1.0, g.frobenius()));
      CHECK(loewner_leq(g, 0.5 * (a + b), 1e-8).pass());
      const DenseMatrix riccati = g.dense() * pd_inverse(a).dense() * g.dense();
      CHECK((riccati - b.dense()).norm() <= 1e-7 * std::max(1.0, b.frobenius()));
      CHECK(min_eig(g) > 0.0);

      // Congruence covariance with T = P V, P PD and V unitary.
      const ComplexMatrix t = random_pd(rng, n, 10.0).matrix() * random_unitary(rng, n);
      const HermitianMatrix lhs = g.congruence(t);
      const HermitianMatrix rhs = geometric_mean(a.congruence(t), b.congruence(t));
      CHECK((lhs.dense() - rhs.dense()).norm() <= 1e-6 * std::max(1.0, rhs.frobenius()));
    }
  }
}

TEST_CASE("frac_power_quarter_half") {
  CHECK(relative_distance(frac_power_quarter_half(HermitianMatrix::identity(2), HermitianMatrix::identity(2)),
                          HermitianMatrix::identity(2)) < 1e-15);
  CHECK(relative_distance(frac_power_quarter_half(4.0 * HermitianMatrix::identity(3),
                                                  16.0 * HermitianMatrix::identity(3)),
                          8.0 * HermitianMatrix::identity(3)) < 1e-14);

  // Log-majorization chain s(X#Y) <=_log s(Y^1/4 X^1/2 Y^1/4) <=_log s(X^1/2 Y^1/2),
  // using the reference SVD for the singular values.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const int n = 2 + static_cast<int>(seed % 4);
    const HermitianMatrix x = random_pd(rng, n, 100.0);
    const HermitianMatrix y = random_pd(rng, n, 100.0);
    const auto s0 = oracle::reference_singular_values(geometric_mean(x, y).dense());
    const auto s1 = oracle::reference_singular_values(frac_power_quarter_half(x, y).dense());
    const auto s2 = oracle::reference_singular_values(psd_sqrt(x).dense() * psd_sqrt(y).dense());
    double l0 = 0, l1 = 0, l2 = 0;
    for (int k = 0; k < n; ++k) {
      l0 += std::log(s0[static_cast<std::size_t>(k)]);
      l1 += std::log(s1[static_cast<std::size_t>(k)]);
      l2 += std::log(s2[static_cast<std::size_t>(k)]);
      CHECK(l0 <= l1 + 1e-9);
      CHECK(l1 <= l2 + 1e-9);
    }
  }
}
