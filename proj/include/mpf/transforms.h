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

#ifndef MPF_TRANSFORMS_H_
#define MPF_TRANSFORMS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpf/gaussian.h"
#include "mpf/gf2n.h"
#include "mpf/mode.h"
#include "mpf/truth_table.h"

namespace mpf {

// Values of a twisted transform, indexed by u under the point encoding.
// Univariate spectra carry their field so they can be inverted.
struct Spectrum {
  Mode mode = Mode::kMultivariate;
  int n = 0;
  std::uint32_t twist = 0;
  std::optional<FieldSpec> field;
  std::vector<GaussianInt> values;
};

// In-place radix-2 Walsh-Hadamard butterfly:
// out[u] = sum_x in[x] (-1)^{popcount(u & x)}. Throws LengthError unless the
// length is a power of two.
void fwht_in_place(std::span<GaussianInt> values);
std::vector<GaussianInt> fwht(std::vector<GaussianInt> values);

// h(x) = (-1)^{g(x)} i^{wt(c (.) x)}.
std::vector<GaussianInt> twisted_values_mv(const TruthTable& g,
                                           std::uint32_t c);
// h(x) = (-1)^{g(x) + sigma(c, x)} i^{Tr(cx)}.
std::vector<GaussianInt> twisted_values_uv(const FieldSpec& field,
                                           const TruthTable& g,
                                           FieldElement c);

// U_g^c(u) = sum_x (-1)^{g(x) + u.x} i^{wt(c (.) x)}.
Spectrum transform_u(const TruthTable& g, std::uint32_t c);
// V_g^c(u) = sum_x (-1)^{g(x) + sigma(c,x) + Tr(ux)} i^{Tr(cx)}.
Spectrum transform_v(const FieldSpec& field, const TruthTable& g,
                     FieldElement c);
// Dispatches on g.mode(); field is required for univariate tables.
Spectrum transform(const TruthTable& g, std::uint32_t c,
                   const std::optional<FieldSpec>& field = std::nullopt);

// Every |S(u)|^2 equals 2^n.
bool is_flat(const Spectrum& s);
// sum_u |S(u)|^2; 2^(2n) for every spectrum of a Boolean function.
std::int64_t parseval_sum(const Spectrum& s);

// All twists c for which g has a flat spectrum, ascending. 0 in the set means
// bent; all-ones (mv) or 1 (uv) means negabent.
std::vector<std::uint32_t> bent4_witnesses(
    const TruthTable& g, const std::optional<FieldSpec>& field = std::nullopt);

// Recovers the twisted point values h with transform(h) = s, using the 1/2^n
// normalization. Throws InvalidSpectrumError when s has no exact preimage.
std::vector<GaussianInt> inverse_twisted(const Spectrum& s);
// Inverts the transform all the way back to the Boolean function.
TruthTable recover_function(const Spectrum& s);

}  // namespace mpf

#endif  // MPF_TRANSFORMS_H_
