// Copyright 2026 The MPF Authors.
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

#ifndef MPF_FORMATS_H_
#define MPF_FORMATS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mpf/gf2n.h"
#include "mpf/planar.h"
#include "mpf/rds.h"
#include "mpf/search.h"
#include "mpf/transforms.h"
#include "mpf/truth_table.h"

namespace mpf {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// "0x" followed by lowercase hex digits, no leading zeros.
std::string to_hex(std::uint64_t v);
// Accepts an optional 0x/0X prefix. Throws FormatError.
std::uint64_t parse_hex(std::string_view s);
// Throws FormatError on malformed text.
Json parse_json(std::string_view text);

// {"n": 3, "modulus": "0xb"}
Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

// Bit t of the blob is g(t).
std::string truth_table_bits_hex(const TruthTable& g);

struct TruthTableFile {
  TruthTable table;
  // Present for univariate tables; defaults to the standard modulus.
  std::optional<FieldSpec> field;
};

// {"mode": "uv", "n": 2, "bits": "0xc"}, plus "field" when given.
Json truth_table_to_json(const TruthTable& g,
                         const std::optional<FieldSpec>& field = std::nullopt);
TruthTableFile truth_table_from_json(const Json& j);

// {"mode": ..., "n": ..., "field": {...}, "table": ["0x0", ...]}; "field"
// appears for univariate functions only.
Json function_to_json(const VectorialFunction& f);
VectorialFunction function_from_json(const Json& j);

// {"quad": {"i,j": "0x.."}, "lin": {"i": "0x.."}, "const": "0x.."}. The
// field comes from a "field" member when present, else from the argument.
Json do_to_json(const DOPolynomial& p);
DOPolynomial do_from_json(const Json& j,
                          const std::optional<FieldSpec>& field = std::nullopt);

Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);
Json element_to_json(const GroupElement& a);
GroupElement element_from_json(const Json& j);

struct RdsInput {
  GroupSpec group;
  std::vector<GroupElement> elements;
  // Defaults to {0} x F when absent from the file.
  std::vector<GroupElement> forbidden;
};

// {"group": {...}, "elements": [["0x..","0x.."], ...], "forbidden": [...]}
RdsInput rds_input_from_json(const Json& j);
Json rds_input_to_json(const RdsInput& in);

Json rds_report_to_json(const GroupSpec& g, const RdsReport& brute,
                        const std::optional<CharacterVerdict>& chars);

Json search_report_to_json(const SearchReport& r);

Json spectrum_to_json(const Spectrum& s);
// A "# format_version=1 ..." line, the header "u_hex,re,im,norm_sq", then
// one row per u.
std::string spectrum_to_csv(const Spectrum& s);

}  // namespace mpf

#endif  // MPF_FORMATS_H_
