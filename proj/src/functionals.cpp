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

#include "pptb/functionals.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "pptb/linalg.hpp"

namespace pptb {
namespace {

int parse_int(const std::string& s, const std::string& id) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer parameter in functional '" + id + "'");
  }
  return value;
}

double parse_real(const std::string& s, const std::string& id) {
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw std::invalid_argument("bad real parameter in functional '" + id + "'");
  }
  return value;
}

bool is_hermitian(const DenseMatrix& m) {
  return (m - m.adjoint()).norm() <= 1e-12 * std::max(1.0, m.norm());
}

void require_k(int k, int n, const char* what) {
  if (k > n) {
    throw std::out_of_range(std::string(what) + ": k = " + std::to_string(k) +
                            " exceeds the dimension " + std::to_string(n));
  }
}

// Coefficients of prod (1 + lambda_i t); entry k is e_k.
Complex elementary_symmetric(const std::vector<Complex>& values, int k) {
  std::vector<Complex> e(static_cast<std::size_t>(k) + 1, Complex(0.0));
  e[0] = 1.0;
  for (const Complex& v : values) {
    for (int j = k; j >= 1; --j) e[static_cast<std::size_t>(j)] += v * e[static_cast<std::size_t>(j - 1)];
  }
  return e[static_cast<std::size_t>(k)];
}

// e_k of the eigenvalues of a general matrix: the sum of its principal k x k minors.
Complex principal_minor_sum(const DenseMatrix& m, int k) {
  const int n = static_cast<int>(m.rows());
  double subsets = 1.0;
  for (int i = 0; i < k; ++i) subsets = subsets * (n - i) / (i + 1);
  if (subsets > 1e6) {
    throw std::invalid_argument("esym on a non-Hermitian matrix needs " + std::to_string(subsets) +
                                " principal minors; too many");
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  Complex sum = 0.0;
  DenseMatrix sub(k, k);
  while (true) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        sub(i, j) = m(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    sum += sub.partialPivLu().determinant();
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
  return sum;
}

std::string format_real(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

// Keeps the link with the smallest normalized gap.
void keep_worst(std::optional<Link>& slot, Link candidate) {
  if (!slot || candidate.gap / candidate.scale < slot->gap / slot->scale) slot = std::move(candidate);
}

}  // namespace

Functional Functional::elem_sym(int k) {
  if (k < 1) throw std::invalid_argument("esym: k must be >= 1");
  return Functional(FunctionalKind::elem_sym_eig, k);
}

Functional Functional::singular_product(int k) {
  if (k < 1) throw std::invalid_argument("prod-sv: k must be >= 1");
  return Functional(FunctionalKind::top_k_singular_product, k);
}

Functional Functional::ky_fan(int k) {
  if (k < 1) throw std::invalid_argument("kyfan: k must be >= 1");
  return Functional(FunctionalKind::ky_fan_norm, k);
}

Functional Functional::schatten(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("schatten: p must be >= 1");
  return Functional(FunctionalKind::schatten_norm, 0, p);
}

Functional Functional::parse(const std::string& id) {
  const auto colon = id.find(':');
  const std::string head = id.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : id.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;
  if (!has_arg) {
    if (head == "trace") return trace();
    if (head == "det") return determinant();
    if (head == "specrad") return spectral_radius();
    if (head == "frobenius") return frobenius();
    if (head == "opnorm") return operator_norm();
  } else {
    if (head == "kyfan") return ky_fan(parse_int(arg, id));
    if (head == "prod-sv") return singular_product(parse_int(arg, id));
    if (head == "esym") return elem_sym(parse_int(arg, id));
    if (head == "schatten") return schatten(parse_real(arg, id));
  }
  throw std::invalid_argument("unknown functional '" + id + "'");
}

std::string Functional::id() const {
  switch (kind_) {
    case FunctionalKind::trace: return "trace";
    case FunctionalKind::determinant: return "det";
    case FunctionalKind::spectral_radius: return "specrad";
    case FunctionalKind::elem_sym_eig: return "esym:" + std::to_string(k_);
    case FunctionalKind::top_k_singular_product: return "prod-sv:" + std::to_string(k_);
    case FunctionalKind::ky_fan_norm: return "kyfan:" + std::to_string(k_);
    case FunctionalKind::schatten_norm: return "schatten:" + format_real(p_);
    case FunctionalKind::frobenius: return "frobenius";
    case FunctionalKind::operator_norm: return "opnorm";
  }
  return "unknown";
}

bool Functional::is_norm() const {
  switch (kind_) {
    case FunctionalKind::ky_fan_norm:
    case FunctionalKind::schatten_norm:
    case FunctionalKind::frobenius:
    case FunctionalKind::operator_norm:
      return true;
    default:
      return false;
  }
}

Invariance Functional::invariance() const {
  switch (kind_) {
    case FunctionalKind::trace:
    case FunctionalKind::determinant:
    case FunctionalKind::spectral_radius:
    case FunctionalKind::elem_sym_eig:
      return Invariance::similarity;
    default:
      return Invariance::two_sided;
  }
}

Complex Functional::evaluate(const ComplexMatrix& m) const {
  const DenseMatrix& d = m.dense();
  const int n = m.n();
  switch (kind_) {
    case FunctionalKind::trace:
      return d.trace();
    case FunctionalKind::determinant:
      return d.partialPivLu().determinant();
    case FunctionalKind::spectral_radius: {
      if (is_hermitian(d)) {
        const EigenSystem es = herm_eig(HermitianMatrix::symmetrized(d));
        return std::max(std::abs(es.eigenvalues.front()), std::abs(es.eigenvalues.back()));
      }
      Eigen::ComplexEigenSolver<DenseMatrix> solver(d, false);
      if (solver.info() != Eigen::Success) throw MatrixError("specrad: eigenvalue solver failed");
      return solver.eigenvalues().cwiseAbs().maxCoeff();
    }
    case FunctionalKind::elem_sym_eig: {
      require_k(k_, n, "esym");
      if (is_hermitian(d)) {
        const EigenSystem es = herm_eig(HermitianMatrix::symmetrized(d));
        std::vector<Complex> values(es.eigenvalues.begin(), es.eigenvalues.end());
        return elementary_symmetric(values, k_);
      }
      return principal_minor_sum(d, k_);
    }
    case FunctionalKind::frobenius:
      return d.norm();
    case FunctionalKind::schatten_norm:
      if (p_ == 2.0) return d.norm();
      break;
    default:
      break;
  }

  const std::vector<double> s = singular_values(m);
  switch (kind_) {
    case FunctionalKind::top_k_singular_product: {
      require_k(k_, n, "prod-sv");
      double prod = 1.0;
      for (int j = 0; j < k_; ++j) prod *= s[static_cast<std::size_t>(j)];
      return prod;
    }
    case FunctionalKind::ky_fan_norm: {
      require_k(k_, n, "kyfan");
      double sum = 0.0;
      for (int j = 0; j < k_; ++j) sum += s[static_cast<std::size_t>(j)];
      return sum;
    }
    case FunctionalKind::operator_norm:
      return s.front();
    case FunctionalKind::schatten_norm: {
      if (std::isinf(p_)) return s.front();
      if (s.front() == 0.0) return 0.0;
      // Scale by s_1 to keep s^p in range.
      double sum = 0.0;
      for (double v : s) sum += std::pow(v / s.front(), p_);
      return s.front() * std::pow(sum, 1.0 / p_);
    }
    default:
      throw std::logic_error("unhandled functional kind");
  }
}

Certificate check_lieb_axioms(const Functional& l, const SampleSpec& samples, double tol) {
  std::optional<Link> nonneg, monotone, cauchy_schwarz;
  const int n = samples.n;
  for (int i = 0; i < samples.count; ++i) {
    Rng rng(derive_seed(samples.seed, static_cast<std::uint64_t>(i)));
    const HermitianMatrix x = random_psd(rng, n);
    const HermitianMatrix y = x + random_psd(rng, n);
    const double lx = l.evaluate_real(x);
    const double ly = l.evaluate_real(y);
    keep_worst(nonneg, scalar_link("0", "L(X)", 0.0, lx, tol));
    keep_worst(monotone, scalar_link("L(X)", "L(Y)", lx, ly, tol));

    const ComplexMatrix p(random_ginibre(rng, n, n));
    const ComplexMatrix q(random_ginibre(rng, n, n));
    const double lhs = std::norm(l.evaluate(p.adjoint() * q));
    const double rhs = l.evaluate_real(p.adjoint() * p) * l.evaluate_real(q.adjoint() * q);
    Link cs = scalar_link("|L(X^*Y)|^2", "L(X^*X) L(Y^*Y)", lhs, rhs, tol);
    // |det(X^*Y)|^2 = det(X^*X) det(Y^*Y) identically.
    if (l.kind() == FunctionalKind::determinant) mark_tight(cs);
    keep_worst(cauchy_schwarz, std::move(cs));
  }
  Certificate c;
  c.name = "lieb-axioms[" + l.id() + "]";
  c.lhs = "L";
  c.rhs = "Lieb axioms";
  c.tol = tol;
  for (auto* slot : {&nonneg, &monotone, &cauchy_schwarz})
    if (*slot) c.links.push_back(std::move(**slot));
  return c;
}

Certificate check_block_lieb(const Functional& l, const Block2x2& block, double tol) {
  const Certificate positive = is_positive(block, tol);
  if (!positive.pass()) {
    throw NotPSD("check_block_lieb: block is not positive semidefinite", positive.gap(),
                 positive.witness());
  }
  const double lhs = std::norm(l.evaluate(block.x().adjoint()));
  const double rhs = l.evaluate_real(block.a()) * l.evaluate_real(block.b());
  return Certificate::single("block-lieb[" + l.id() + "]",
                             scalar_link("|L(Z)|^2", "L(X) L(Y)", lhs, rhs, tol));
}

Certificate check_gm_lieb(const Functional& l, const HermitianMatrix& x, const HermitianMatrix& y,
                          double tol) {
  require_pd(x, "X");
  require_pd(y, "Y");
  const double lhs = l.evaluate_real(geometric_mean(x, y));
  const double rhs = std::sqrt(l.evaluate_real(x) * l.evaluate_real(y));
  return Certificate::single("gm-lieb[" + l.id() + "]",
                             scalar_link("L(X # Y)", "sqrt(L(X) L(Y))", lhs, rhs, tol));
}

}  // namespace pptb
