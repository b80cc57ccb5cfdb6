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

#include "mpf/truth_table.h"

#include <array>
#include <bit>
#include <string>

#include "mpf/errors.h"

namespace mpf {
namespace {

// kLowHalf[k] selects the points whose bit k is clear, inside one word.
constexpr std::array<std::uint64_t, 6> kLowHalf = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

void check_point(const TruthTable& g, std::uint32_t p, const char* what) {
  if (p >= g.size()) {
    throw InvalidArgumentError(std::string(what) + " " + std::to_string(p) +
                               " lies outside 2^" + std::to_string(g.n()) +
                               " points");
  }
}

}  // namespace

TruthTable::TruthTable(int n, Mode mode) : n_(n), mode_(mode) {
  if (n < 1 || n > kMaxDegree) {
    throw InvalidArgumentError("truth table size must lie in [1, 24], got " +
                               std::to_string(n));
  }
  words_.assign(n >= 6 ? (std::size_t{1} << (n - 6)) : 1, 0);
}

TruthTable TruthTable::linear(int n, Mode mode, std::uint32_t mask) {
  TruthTable t(n, mode);
  std::uint64_t low = 0;
  for (int k = 0; k < 6 && k < n; ++k) {
    if (mask >> k & 1) low ^= ~kLowHalf[k];
  }
  const std::uint32_t high = mask >> 6;
  for (std::size_t w = 0; w < t.words_.size(); ++w) {
    const bool flip = std::popcount(high & static_cast<std::uint32_t>(w)) & 1;
    t.words_[w] = flip ? ~low : low;
  }
  t.clear_padding();
  return t;
}

TruthTable TruthTable::constant(int n, Mode mode, bool value) {
  TruthTable t(n, mode);
  if (value) {
    for (auto& w : t.words_) w = ~std::uint64_t{0};
    t.clear_padding();
  }
  return t;
}

void TruthTable::clear_padding() {
  if (n_ < 6) words_[0] &= (std::uint64_t{1} << size()) - 1;
}

TruthTable TruthTable::translated(std::uint32_t z) const {
  TruthTable out(n_, mode_);
  const std::uint32_t high = z >> 6;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    out.words_[w] = words_[w ^ high];
  }
  for (int k = 0; k < 6 && k < n_; ++k) {
    if (!(z >> k & 1)) continue;
    const int s = 1 << k;
    for (auto& w : out.words_) {
      w = ((w >> s) & kLowHalf[k]) | ((w & kLowHalf[k]) << s);
    }
  }
  return out;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
  if (other.n_ != n_) {
    throw InvalidArgumentError("truth tables of different sizes");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::uint64_t weight(const TruthTable& g) {
  std::uint64_t total = 0;
  for (std::uint64_t w : g.words()) total += std::popcount(w);
  return total;
}

bool is_balanced(const TruthTable& g) { return 2 * weight(g) == g.size(); }

TruthTable shifted_derivative_mv(const TruthTable& g, std::uint32_t z,
                                 std::uint32_t c) {
  if (g.mode() != Mode::kMultivariate) {
    throw ModeMismatchError("multivariate derivative of a univariate table");
  }
  check_point(g, z, "direction");
  check_point(g, c, "twist");
  if (z == 0) throw ZeroDirectionError("shifted derivative needs z != 0");
  TruthTable d = g.translated(z);
  d ^= g;
  d ^= TruthTable::linear(g.n(), g.mode(), c & z);
  return d;
}

TruthTable shifted_derivative_uv(const FieldSpec& field, const TruthTable& g,
                                 FieldElement z, FieldElement c) {
  if (g.mode() != Mode::kUnivariate) {
    throw ModeMismatchError("univariate derivative of a multivariate table");
  }
  if (g.n() != field.n()) {
    throw InvalidArgumentError("truth table and field differ in degree");
  }
  check_point(g, z, "direction");
  check_point(g, c, "twist");
  if (z == 0) throw ZeroDirectionError("shifted derivative needs z != 0");
  TruthTable d = g.translated(z);
  d ^= g;
  const FieldElement w = field.mul(field.square(c), z);
  d ^= TruthTable::linear(g.n(), g.mode(), field.trace_form_mask(w));
  return d;
}

}  // namespace mpf
