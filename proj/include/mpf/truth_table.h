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

#ifndef MPF_TRUTH_TABLE_H_
#define MPF_TRUTH_TABLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mpf/gf2n.h"
#include "mpf/mode.h"

namespace mpf {

// Bit-packed Boolean function on 2^n points, 64 points per word. Entry t is
// the value at the point with integer encoding t. Bits past 2^n are zero.
class TruthTable {
 public:
  TruthTable(int n, Mode mode);

  template <class Fn>
  static TruthTable from_function(int n, Mode mode, Fn&& fn) {
    TruthTable t(n, mode);
    for (std::uint32_t x = 0; x < t.size(); ++x) t.set(x, fn(x) & 1);
    return t;
  }
  // x -> parity(mask & x).
  static TruthTable linear(int n, Mode mode, std::uint32_t mask);
  static TruthTable constant(int n, Mode mode, bool value);

  int n() const { return n_; }
  Mode mode() const { return mode_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }

  bool get(std::uint32_t x) const { return (words_[x >> 6] >> (x & 63)) & 1; }
  void set(std::uint32_t x, bool v) {
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (v) {
      words_[x >> 6] |= bit;
    } else {
      words_[x >> 6] &= ~bit;
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  // x -> g(x ^ z).
  TruthTable translated(std::uint32_t z) const;

  TruthTable& operator^=(const TruthTable& other);
  friend TruthTable operator^(TruthTable a, const TruthTable& b) {
    a ^= b;
    return a;
  }
  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  void clear_padding();

  int n_;
  Mode mode_;
  std::vector<std::uint64_t> words_;
};

std::uint64_t weight(const TruthTable& g);
bool is_balanced(const TruthTable& g);

// x -> g(x) + g(x + z) + c . (z (.) x). Throws ZeroDirectionError for z = 0.
TruthTable shifted_derivative_mv(const TruthTable& g, std::uint32_t z,
                                 std::uint32_t c);
// x -> g(x) + g(x + z) + Tr(c^2 x z). Throws ZeroDirectionError for z = 0.
TruthTable shifted_derivative_uv(const FieldSpec& field, const TruthTable& g,
                                 FieldElement z, FieldElement c);

}  // namespace mpf

#endif  // MPF_TRUTH_TABLE_H_
