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

#ifndef MPF_SEARCH_H_
#define MPF_SEARCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "mpf/gf2n.h"
#include "mpf/mode.h"
#include "mpf/planar.h"

namespace mpf {

// Candidate families. Members are indexed by an integer whose base-2^n digits
// are the coefficients, least significant digit first:
//   all            table[0], ..., table[2^n - 1]
//   affine         uv: b_0..b_{n-1}, const for sum b_i x^(2^i) + const
//                  mv: images of e_1..e_n, then const (F(x) = Mx + const)
//   do_quadratic   uv: a_ij for i < j in lex order, F = sum a_ij x^(2^i+2^j)
//                  mv: a_ij in F_2^n, F(x) = sum a_ij x_i x_j
//   do_plus_affine the do_quadratic digits followed by the affine digits
enum class FunctionClass { kAll, kAffine, kDoQuadratic, kDoPlusAffine };
enum class Filter { kPerm, kComponents, kBoth };

std::string_view class_name(FunctionClass c);
std::string_view filter_name(Filter f);
std::optional<FunctionClass> parse_class(std::string_view s);
std::optional<Filter> parse_filter(std::string_view s);

// Largest n for which each class may be enumerated.
int max_dimension(FunctionClass c);

class FunctionSpace {
 public:
  // Throws SearchBoundsError beyond max_dimension. field defaults to the
  // standard modulus in univariate mode and is ignored in multivariate mode.
  FunctionSpace(Mode mode, int n, FunctionClass cls,
                std::optional<FieldSpec> field = std::nullopt);

  Mode mode() const { return mode_; }
  int n() const { return n_; }
  FunctionClass function_class() const { return cls_; }
  const std::optional<FieldSpec>& field() const { return field_; }
  // Number of coefficient digits; the space has 2^(n * digits) members.
  int digits() const { return digits_; }
  // Member count, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const;

  VectorialFunction at(std::uint64_t index) const;

 private:
  std::uint32_t digit(std::uint64_t index, int k) const {
    return static_cast<std::uint32_t>(index >> (n_ * k)) & ((1u << n_) - 1);
  }

  Mode mode_;
  int n_;
  FunctionClass cls_;
  std::optional<FieldSpec> field_;
  int digits_;
  std::vector<std::pair<int, int>> pairs_;
};

// Calls fn on every member in canonical order.
void enumerate_class(const FunctionSpace& space,
                     const std::function<void(const VectorialFunction&)>& fn);

// i-th output of SplitMix64 seeded with seed; used to draw sampled jobs.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter);

// Exhaustive enumeration is refused above this many members.
inline constexpr std::uint64_t kMaxExhaustive = std::uint64_t{1} << 32;
inline constexpr std::size_t kReportCap = 10000;

struct SearchJob {
  Mode mode = Mode::kUnivariate;
  int n = 1;
  FunctionClass cls = FunctionClass::kAll;
  Filter filter = Filter::kBoth;
  int shards = 1;
  std::uint64_t seed = 0;
  // Draw this many members instead of enumerating the class.
  std::optional<std::uint64_t> sample;
  std::optional<FieldSpec> field;
};

struct SearchReport {
  Mode mode = Mode::kUnivariate;
  int n = 0;
  FunctionClass cls = FunctionClass::kAll;
  Filter filter = Filter::kBoth;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
  std::uint64_t examined = 0;
  std::uint64_t passing = 0;
  // Set only for filter = both; true whenever the search completes.
  std::optional<bool> cross_check;
  // First kReportCap passing functions in examination order.
  std::vector<VectorialFunction> passing_functions;
};

// Filters the class by modified planarity. The report does not depend on
// the shard count. With filter = both, a disagreement between the two
// routes throws DefinitionMismatchError naming the function. If stream is
// given, every passing function is written to it, one JSON per line.
SearchReport run_search(const SearchJob& job, std::ostream* stream = nullptr);

}  // namespace mpf

#endif  // MPF_SEARCH_H_
