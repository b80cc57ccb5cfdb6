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

#include "mpf/formats.h"

#include <bit>
#include <charconv>
#include <sstream>

#include "mpf/errors.h"

namespace mpf {
namespace {

const Json& member(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw FormatError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

int int_member(const Json& j, const char* name) {
  const Json& v = member(j, name);
  if (!v.is_number_integer()) {
    throw FormatError(std::string("field \"") + name + "\" must be an integer");
  }
  return v.get<int>();
}

std::string string_of(const Json& v, const char* what) {
  if (!v.is_string()) {
    throw FormatError(std::string(what) + " must be a string");
  }
  return v.get<std::string>();
}

std::uint32_t hex32(const Json& v, const char* what) {
  const std::uint64_t x = parse_hex(string_of(v, what));
  if (x > 0xFFFFFFFFULL) throw FormatError(std::string(what) + " too large");
  return static_cast<std::uint32_t>(x);
}

Mode mode_from(const Json& j) {
  const std::string m = string_of(member(j, "mode"), "mode");
  if (m == "mv") return Mode::kMultivariate;
  if (m == "uv") return Mode::kUnivariate;
  throw FormatError("mode must be \"mv\" or \"uv\", got \"" + m + "\"");
}

int digit_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

std::string_view strip_prefix(std::string_view s) {
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    s.remove_prefix(2);
  }
  if (s.empty()) throw FormatError("empty hex literal");
  return s;
}

int parse_index(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("bad exponent index \"" + s + "\"");
  }
  return v;
}

std::string_view law_name(GroupLaw law) {
  switch (law) {
    case GroupLaw::kStarMv: return "star_mv";
    case GroupLaw::kStarUv: return "star_uv";
    case GroupLaw::kZ4n: return "z4n";
  }
  return "";
}

}  // namespace

std::string to_hex(std::uint64_t v) {
  char buf[17];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, 16);
  return "0x" + std::string(buf, ptr);
}

std::uint64_t parse_hex(std::string_view s) {
  const std::string_view body = strip_prefix(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(body.data(), body.data() + body.size(), v, 16);
  if (ec == std::errc::result_out_of_range) {
    throw FormatError("hex literal out of range: " + std::string(s));
  }
  if (ec != std::errc() || ptr != body.data() + body.size()) {
    throw FormatError("bad hex literal: " + std::string(s));
  }
  return v;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

Json field_to_json(const FieldSpec& f) {
  Json j;
  j["n"] = f.n();
  j["modulus"] = to_hex(f.modulus());
  return j;
}

FieldSpec field_from_json(const Json& j) {
  const int n = int_member(j, "n");
  std::optional<std::uint32_t> modulus;
  if (j.contains("modulus") && !j.at("modulus").is_null()) {
    modulus = hex32(j.at("modulus"), "modulus");
  }
  return make_field(n, modulus);
}

std::string truth_table_bits_hex(const TruthTable& g) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const auto words = g.words();
  for (std::size_t w = words.size(); w-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      const int d = static_cast<int>(words[w] >> (4 * nib)) & 0xF;
      if (out.empty() && d == 0) continue;
      out.push_back(kDigits[d]);
    }
  }
  if (out.empty()) out = "0";
  return "0x" + out;
}

Json truth_table_to_json(const TruthTable& g,
                         const std::optional<FieldSpec>& field) {
  Json j;
  j["mode"] = mode_name(g.mode());
  j["n"] = g.n();
  if (field && g.mode() == Mode::kUnivariate) j["field"] = field_to_json(*field);
  j["bits"] = truth_table_bits_hex(g);
  return j;
}

TruthTableFile truth_table_from_json(const Json& j) {
  const Mode mode = mode_from(j);
  const int n = int_member(j, "n");
  if (n < 1 || n > kMaxDegree) {
    throw FormatError("truth table n must lie in [1, 24]");
  }
  std::optional<FieldSpec> field;
  if (mode == Mode::kUnivariate) {
    field = j.contains("field") ? field_from_json(j.at("field")) : make_field(n);
    if (field->n() != n) throw FormatError("field degree differs from n");
  }
  TruthTable g(n, mode);
  const std::string bits = string_of(member(j, "bits"), "bits");
  const std::string_view body = strip_prefix(bits);
  const std::uint64_t points = g.size();
  auto words = g.mutable_words();
  for (std::size_t k = 0; k < body.size(); ++k) {
    const int d = digit_value(body[body.size() - 1 - k]);
    if (d < 0) throw FormatError("bad hex digit in truth table bits");
    if (d == 0) continue;
    const std::uint64_t base = 4 * static_cast<std::uint64_t>(k);
    if (base + (64 - std::countl_zero(static_cast<std::uint64_t>(d))) > points) {
      throw FormatError("truth table bits exceed 2^n points");
    }
    words[base >> 6] |= static_cast<std::uint64_t>(d) << (base & 63);
  }
  return TruthTableFile{std::move(g), field};
}

Json function_to_json(const VectorialFunction& f) {
  Json j;
  j["mode"] = mode_name(f.mode);
  j["n"] = f.n;
  if (f.mode == Mode::kUnivariate) j["field"] = field_to_json(*f.field);
  Json table = Json::array();
  for (std::uint32_t v : f.table) table.push_back(to_hex(v));
  j["table"] = std::move(table);
  return j;
}

VectorialFunction function_from_json(const Json& j) {
  const Mode mode = mode_from(j);
  const int n = int_member(j, "n");
  const Json& table_json = member(j, "table");
  if (!table_json.is_array()) throw FormatError("table must be an array");
  std::vector<std::uint32_t> table;
  table.reserve(table_json.size());
  for (const Json& v : table_json) table.push_back(hex32(v, "table entry"));
  try {
    if (mode == Mode::kMultivariate) {
      return VectorialFunction::multivariate(n, std::move(table));
    }
    const FieldSpec field =
        j.contains("field") ? field_from_json(j.at("field")) : make_field(n);
    if (field.n() != n) throw FormatError("field degree differs from n");
    return VectorialFunction::univariate(field, std::move(table));
  } catch (const InvalidArgumentError& e) {
    throw FormatError(e.what());
  }
}

Json do_to_json(const DOPolynomial& p) {
  Json j;
  j["field"] = field_to_json(p.field());
  Json quad = Json::object();
  for (const auto& [ij, a] : p.quad()) {
    quad[std::to_string(ij.first) + "," + std::to_string(ij.second)] =
        to_hex(a);
  }
  Json lin = Json::object();
  for (const auto& [i, b] : p.lin()) lin[std::to_string(i)] = to_hex(b);
  j["quad"] = std::move(quad);
  j["lin"] = std::move(lin);
  j["const"] = to_hex(p.constant());
  return j;
}

DOPolynomial do_from_json(const Json& j, const std::optional<FieldSpec>& field) {
  if (!j.is_object()) throw FormatError("polynomial must be a JSON object");
  std::optional<FieldSpec> f = field;
  if (j.contains("field")) f = field_from_json(j.at("field"));
  if (!f) throw FormatError("polynomial needs a field (or n on the command line)");
  DOPolynomial p(*f);
  try {
    if (j.contains("quad")) {
      for (const auto& [k, v] : j.at("quad").items()) {
        const auto comma = k.find(',');
        if (comma == std::string::npos) {
          throw FormatError("quad key must read \"i,j\", got \"" + k + "\"");
        }
        p.add_quad(parse_index(k.substr(0, comma)),
                   parse_index(k.substr(comma + 1)), hex32(v, "coefficient"));
      }
    }
    if (j.contains("lin")) {
      for (const auto& [k, v] : j.at("lin").items()) {
        p.add_lin(parse_index(k), hex32(v, "coefficient"));
      }
    }
    if (j.contains("const")) p.set_constant(hex32(j.at("const"), "const"));
  } catch (const InvalidArgumentError& e) {
    throw FormatError(e.what());
  }
  return p;
}

Json group_to_json(const GroupSpec& g) {
  Json j;
  j["law"] = law_name(g.law);
  j["n"] = g.n;
  if (g.law == GroupLaw::kStarUv) j["field"] = field_to_json(*g.field);
  return j;
}

GroupSpec group_from_json(const Json& j) {
  const std::string law = string_of(member(j, "law"), "law");
  const int n = int_member(j, "n");
  try {
    if (law == "star_mv") return GroupSpec::star_mv(n);
    if (law == "z4n") return GroupSpec::z4n(n);
    if (law == "star_uv") {
      const FieldSpec f =
          j.contains("field") ? field_from_json(j.at("field")) : make_field(n);
      if (f.n() != n) throw FormatError("field degree differs from n");
      return GroupSpec::star_uv(f);
    }
  } catch (const InvalidArgumentError& e) {
    throw FormatError(e.what());
  }
  throw FormatError("law must be star_mv, star_uv or z4n, got \"" + law + "\"");
}

Json element_to_json(const GroupElement& a) {
  return Json::array({to_hex(a.x), to_hex(a.y)});
}

GroupElement element_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw FormatError("group element must be a pair [x, y]");
  }
  return {hex32(j[0], "element x"), hex32(j[1], "element y")};
}

RdsInput rds_input_from_json(const Json& j) {
  RdsInput in{group_from_json(member(j, "group")), {}, {}};
  const Json& elements = member(j, "elements");
  if (!elements.is_array()) throw FormatError("elements must be an array");
  for (const Json& e : elements) in.elements.push_back(element_from_json(e));
  if (j.contains("forbidden")) {
    for (const Json& e : j.at("forbidden")) {
      in.forbidden.push_back(element_from_json(e));
    }
  } else {
    in.forbidden = forbidden_subgroup(in.group);
  }
  return in;
}

Json rds_input_to_json(const RdsInput& in) {
  Json j;
  j["group"] = group_to_json(in.group);
  Json elements = Json::array();
  for (const GroupElement& a : in.elements) elements.push_back(element_to_json(a));
  j["elements"] = std::move(elements);
  Json forbidden = Json::array();
  for (const GroupElement& a : in.forbidden) forbidden.push_back(element_to_json(a));
  j["forbidden"] = std::move(forbidden);
  return j;
}

Json rds_report_to_json(const GroupSpec& g, const RdsReport& brute,
                        const std::optional<CharacterVerdict>& chars) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["group"] = group_to_json(g);
  j["parameters"] = Json{{"mu", brute.mu},
                         {"nu", brute.nu},
                         {"k", brute.k},
                         {"lambda", brute.lambda}};
  Json b;
  b["is_rds"] = brute.is_rds;
  if (brute.failing_element) {
    b["failing_element"] = element_to_json(*brute.failing_element);
    b["failing_count"] = brute.failing_count;
  } else {
    b["failing_element"] = nullptr;
  }
  j["bruteforce"] = std::move(b);
  if (chars) {
    Json c;
    c["is_rds"] = chars->is_rds;
    if (chars->failing_character) {
      c["failing_character"] = Json{{"u", to_hex(chars->failing_character->first)},
                                    {"c", to_hex(chars->failing_character->second)}};
      c["norm_sq"] = chars->norm_sq;
      c["expected_norm_sq"] = chars->expected_norm_sq;
    } else {
      c["failing_character"] = nullptr;
    }
    j["characters"] = std::move(c);
  } else {
    j["characters"] = nullptr;
  }
  return j;
}

Json search_report_to_json(const SearchReport& r) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["mode"] = mode_name(r.mode);
  j["n"] = r.n;
  j["class"] = class_name(r.cls);
  j["filter"] = filter_name(r.filter);
  if (r.sample) {
    j["sample"] = *r.sample;
    j["seed"] = r.seed;
  } else {
    j["sample"] = nullptr;
  }
  j["examined"] = r.examined;
  j["passing"] = r.passing;
  if (r.cross_check) {
    j["cross_check"] = *r.cross_check;
  } else {
    j["cross_check"] = nullptr;
  }
  Json functions = Json::array();
  for (const VectorialFunction& f : r.passing_functions) {
    functions.push_back(function_to_json(f));
  }
  j["functions"] = std::move(functions);
  return j;
}

Json spectrum_to_json(const Spectrum& s) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["mode"] = mode_name(s.mode);
  j["n"] = s.n;
  if (s.field) j["field"] = field_to_json(*s.field);
  j["c"] = to_hex(s.twist);
  j["flat"] = is_flat(s);
  Json values = Json::array();
  for (const GaussianInt& v : s.values) values.push_back(Json::array({v.re, v.im}));
  j["values"] = std::move(values);
  return j;
}

std::string spectrum_to_csv(const Spectrum& s) {
  std::ostringstream os;
  os << "# format_version=" << kFormatVersion << " mode=" << mode_name(s.mode)
     << " n=" << s.n << " c=" << to_hex(s.twist) << '\n';
  os << "u_hex,re,im,norm_sq\n";
  for (std::uint32_t u = 0; u < s.values.size(); ++u) {
    const GaussianInt v = s.values[u];
    os << to_hex(u) << ',' << v.re << ',' << v.im << ',' << v.norm() << '\n';
  }
  return os.str();
}

}  // namespace mpf
