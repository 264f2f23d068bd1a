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

#include "pptb/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace pptb {
namespace {

// Finite double or null (JSON has no NaN).
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

DenseMatrix read_part(const Json& rows, int n, const char* key) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw ParseError(std::string("matrix \"") + key + "\" must have " + std::to_string(n) + " rows");
  }
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError(std::string("matrix \"") + key + "\" row " + std::to_string(i) + " must have " +
                       std::to_string(n) + " entries");
    }
    for (int j = 0; j < n; ++j) {
      const Json& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) throw ParseError(std::string("matrix \"") + key + "\" has a non-numeric entry");
      m(i, j) = v.get<double>();
    }
  }
  return m;
}

Json witness_json(const std::vector<Complex>& w) {
  Json re = Json::array(), im = Json::array();
  for (const Complex& z : w) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return Json{{"re", re}, {"im", im}};
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  const int n = m.n();
  Json re = Json::array(), im = Json::array();
  bool real = true;
  for (int i = 0; i < n; ++i) {
    Json rr = Json::array(), ir = Json::array();
    for (int j = 0; j < n; ++j) {
      rr.push_back(m(i, j).real());
      ir.push_back(m(i, j).imag());
      real = real && m(i, j).imag() == 0.0;
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  Json out{{"n", n}, {"re", std::move(re)}};
  if (!real) out["im"] = std::move(im);
  return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 1) {
    throw ParseError("matrix needs a positive integer \"n\"");
  }
  if (!j.contains("re")) throw ParseError("matrix needs \"re\"");
  const int n = j["n"].get<int>();
  DenseMatrix m = read_part(j["re"], n, "re").cast<Complex>();
  if (j.contains("im")) m += Complex(0.0, 1.0) * read_part(j["im"], n, "im");
  try {
    return ComplexMatrix(std::move(m));
  } catch (const MatrixError& e) {
    throw ParseError(std::string("invalid matrix: ") + e.what());
  }
}

Json to_json(const Block2x2& b) {
  return Json{{"A", to_json(b.a())}, {"X", to_json(b.x())}, {"B", to_json(b.b())}};
}

Block2x2 block_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("block must be a JSON object");
  try {
    if (j.contains("A") || j.contains("X") || j.contains("B")) {
      for (const char* key : {"A", "X", "B"})
        if (!j.contains(key)) throw ParseError(std::string("block is missing \"") + key + "\"");
      return Block2x2(HermitianMatrix(matrix_from_json(j["A"]).dense()), matrix_from_json(j["X"]),
                      HermitianMatrix(matrix_from_json(j["B"]).dense()));
    }
    return Block2x2::split(HermitianMatrix(matrix_from_json(j).dense()));
  } catch (const ParseError&) {
    throw;
  } catch (const MatrixError& e) {
    throw ParseError(std::string("invalid block: ") + e.what());
  }
}

Json to_json(const SampleSpec& s) {
  return Json{{"n", s.n},          {"seed", s.seed},         {"count", s.count},  {"method", to_string(s.method)},
              {"r", s.r},          {"cond_cap", s.cond_cap}, {"budget", s.budget}};
}

SampleSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("sample spec must be a JSON object");
  SampleSpec s;
  try {
    if (j.contains("n")) s.n = j["n"].get<int>();
    if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("count")) s.count = j["count"].get<int>();
    if (j.contains("method")) s.method = parse_sample_method(j["method"].get<std::string>());
    if (j.contains("r")) s.r = j["r"].get<int>();
    if (j.contains("cond_cap")) s.cond_cap = j["cond_cap"].get<double>();
    if (j.contains("budget")) s.budget = j["budget"].get<long>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad sample spec: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (s.n < 1 || s.count < 0) throw ParseError("sample spec needs n >= 1 and count >= 0");
  return s;
}

Json to_json(const Link& l) {
  Json out{{"lhs", l.lhs},
           {"rhs", l.rhs},
           {"sense", l.sense == Sense::holds ? "holds" : "violated"},
           {"kind", l.is_loewner() ? "loewner" : "scalar"},
           {"gap", number(l.gap)},
           {"scale", number(l.scale)},
           {"tol", l.tol},
           {"pass", l.pass},
           {"marginal", l.marginal},
           {"tight", l.tight}};
  if (l.lhs_value) out["lhs_value"] = number(*l.lhs_value);
  if (l.rhs_value) out["rhs_value"] = number(*l.rhs_value);
  if (!l.witness.empty()) out["witness"] = witness_json(l.witness);
  return out;
}

Json to_json(const Certificate& c) {
  Json links = Json::array();
  for (const Link& l : c.links) links.push_back(to_json(l));
  Json out{{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"tol", c.tol}, {"pass", c.pass()},
           {"marginal", c.marginal()}};
  if (!c.error.empty()) {
    out["error"] = c.error;
  } else {
    out["gap"] = number(c.gap());
    out["scale"] = number(c.scale());
  }
  out["links"] = std::move(links);
  return out;
}

Json to_json(const VerificationReport& r) {
  Json certs = Json::array();
  for (const Certificate& c : r.certificates) certs.push_back(to_json(c));
  return Json{{"type", "sample"},
              {"sample_id", r.sample_id},
              {"seed", r.seed},
              {"dimension", r.dimension},
              {"source", r.source},
              {"regenerated", r.regenerated},
              {"failure_count", r.failure_count},
              {"marginal_count", r.marginal_count},
              {"error_count", r.error_count},
              {"certificates", std::move(certs)}};
}

Json to_json(const CampaignSummary& s) {
  return Json{{"type", "summary"},     {"samples", s.samples}, {"certificates", s.certificates},
              {"passed", s.passed},    {"marginal", s.marginal}, {"failed", s.failed},
              {"errors", s.errors}};
}

Json to_json(const HuntReport& r) {
  Json out{{"type", "hunt"},
           {"j", r.j},
           {"n", r.n},
           {"seed", r.seed},
           {"samples", r.samples},
           {"evaluations", r.evaluations},
           {"hit", r.hit},
           {"best_ratio", number(r.best_ratio)},
           {"best_source", r.best_source}};
  if (r.best_block) out["block"] = to_json(*r.best_block);
  if (r.certificate) out["certificate"] = to_json(*r.certificate);
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Byte offset to line and column.
    int line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column),
                     line, column);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Block2x2 read_block_file(const std::string& path) { return block_from_json(read_json_file(path)); }

}  // namespace pptb
