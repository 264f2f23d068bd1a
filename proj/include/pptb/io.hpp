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

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "pptb/block.hpp"
#include "pptb/certificate.hpp"
#include "pptb/sampling.hpp"
#include "pptb/verify.hpp"

namespace pptb {

using Json = nlohmann::ordered_json;

/// Malformed input, with a 1-based line and column when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// {"n": int, "re": [[...]], "im": [[...]]}, row-major; a missing "im" means real.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// {"A": Matrix, "X": Matrix, "B": Matrix}, or a flat 2n x 2n Hermitian
/// Matrix whose "n" field is the full size (split in half).
Json to_json(const Block2x2& b);
Block2x2 block_from_json(const Json& j);

Json to_json(const SampleSpec& s);
SampleSpec spec_from_json(const Json& j);

Json to_json(const Link& l);
Json to_json(const Certificate& c);
Json to_json(const VerificationReport& r);
Json to_json(const CampaignSummary& s);
Json to_json(const HuntReport& r);

/// Parses text, mapping syntax errors to ParseError with line and column.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
Block2x2 read_block_file(const std::string& path);

}  // namespace pptb
