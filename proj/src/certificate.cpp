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

#include "pptb/certificate.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <limits>

#include "pptb/linalg.hpp"

namespace pptb {
namespace {

void settle(Link& link) {
  const double band = link.tol * link.scale;
  link.pass = link.sense == Sense::holds ? link.gap >= -band : link.gap < -band;
  link.marginal = !link.tight && std::abs(link.gap) < kMarginalFactor * band;
}

double normalized_gap(const Link& l) { return l.gap / l.scale; }

}  // namespace

Link scalar_link(std::string lhs_desc, std::string rhs_desc, double lhs, double rhs, double tol,
                 Sense sense) {
  Link link;
  link.lhs = std::move(lhs_desc);
  link.rhs = std::move(rhs_desc);
  link.sense = sense;
  link.lhs_value = lhs;
  link.rhs_value = rhs;
  link.gap = rhs - lhs;
  link.scale = std::max(1.0, std::abs(rhs));
  link.tol = tol;
  settle(link);
  return link;
}

Link loewner_link(std::string lhs_desc, std::string rhs_desc, const HermitianMatrix& lhs,
                  const HermitianMatrix& rhs, double tol, Sense sense) {
  Link link;
  link.lhs = std::move(lhs_desc);
  link.rhs = std::move(rhs_desc);
  link.sense = sense;
  HermitianMatrix diff = rhs - lhs;
  const EigenSystem es = herm_eig(diff);
  link.gap = es.eigenvalues.back();
  link.scale = std::max(1.0, diff.frobenius());
  link.tol = tol;
  link.witness = to_std(es.basis.dense().col(diff.n() - 1));
  link.difference = std::move(diff);
  settle(link);
  return link;
}

void mark_tight(Link& link) {
  link.tight = true;
  link.marginal = false;
}

Certificate Certificate::single(std::string name, Link link) {
  Certificate c;
  c.name = std::move(name);
  c.lhs = link.lhs;
  c.rhs = link.rhs;
  c.tol = link.tol;
  c.links.push_back(std::move(link));
  return c;
}

Certificate Certificate::failed_precondition(std::string name, std::string error, double tol) {
  Certificate c;
  c.name = std::move(name);
  c.error = std::move(error);
  c.tol = tol;
  return c;
}

bool Certificate::pass() const {
  if (!error.empty() || links.empty()) return false;
  return std::all_of(links.begin(), links.end(), [](const Link& l) { return l.pass; });
}

bool Certificate::marginal() const {
  return std::any_of(links.begin(), links.end(), [](const Link& l) { return l.marginal; });
}

const Link* Certificate::worst() const {
  const Link* worst = nullptr;
  for (const Link& l : links) {
    // A failing link is always worse than a passing one.
    if (worst == nullptr || (!l.pass && worst->pass) ||
        (l.pass == worst->pass && normalized_gap(l) < normalized_gap(*worst))) {
      worst = &l;
    }
  }
  return worst;
}

double Certificate::gap() const {
  const Link* w = worst();
  return w ? w->gap : std::numeric_limits<double>::quiet_NaN();
}

double Certificate::scale() const {
  const Link* w = worst();
  return w ? w->scale : 1.0;
}

const std::vector<Complex>& Certificate::witness() const {
  static const std::vector<Complex> kEmpty;
  const Link* w = worst();
  return w ? w->witness : kEmpty;
}

bool recheck(const Link& link) {
  const double band = link.tol * link.scale;
  bool holds;
  if (link.is_loewner()) {
    const DenseMatrix& d = link.difference->dense();
    const Eigen::Index n = d.rows();
    if (link.gap >= -band) {
      // PSD up to the band: D + 2 * band * I must admit a Cholesky factor.
      const DenseMatrix shifted = d + (2.0 * band) * DenseMatrix::Identity(n, n);
      Eigen::LLT<DenseMatrix> llt(shifted);
      holds = llt.info() == Eigen::Success;
    } else {
      // Violation: the witness Rayleigh quotient exhibits it directly.
      if (link.witness.size() != static_cast<std::size_t>(n)) return false;
      const DenseVector w = Eigen::Map<const DenseVector>(link.witness.data(), n);
      const double rq = w.dot(d * w).real() / w.squaredNorm();
      holds = !(rq < -band);
    }
  } else {
    if (!link.lhs_value || !link.rhs_value) return false;
    holds = *link.rhs_value - *link.lhs_value >= -band;
  }
  const bool pass = link.sense == Sense::holds ? holds : !holds;
  return pass == link.pass;
}

bool recheck(const Certificate& cert) {
  return std::all_of(cert.links.begin(), cert.links.end(),
                     [](const Link& l) { return recheck(l); });
}

}  // namespace pptb
