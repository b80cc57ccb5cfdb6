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

#include "mpf/transforms.h"

#include <bit>
#include <string>

#include "mpf/errors.h"

namespace mpf {
namespace {

void check_twist(const TruthTable& g, std::uint32_t c) {
  if (c >= g.size()) {
    throw InvalidArgumentError("twist " + std::to_string(c) +
                               " lies outside 2^" + std::to_string(g.n()) +
                               " points");
  }
}

void check_field(const FieldSpec& field, const TruthTable& g) {
  if (g.mode() != Mode::kUnivariate) {
    throw ModeMismatchError("univariate transform of a multivariate table");
  }
  if (field.n() != g.n()) {
    throw InvalidArgumentError("truth table and field differ in degree");
  }
}

// Twist factor at x, i.e. h(x) / (-1)^{g(x)}.
GaussianInt twist_factor(const Spectrum& s, std::uint32_t x) {
  if (s.mode == Mode::kMultivariate) return i_pow(std::popcount(s.twist & x));
  const FieldSpec& f = *s.field;
  const GaussianInt t = i_pow(f.trace(f.mul(s.twist, x)));
  return f.sigma(s.twist, x) ? -t : t;
}

}  // namespace

void fwht_in_place(std::span<GaussianInt> values) {
  const std::size_t len = values.size();
  if (len == 0 || !std::has_single_bit(len)) {
    throw LengthError("transform length " + std::to_string(len) +
                      " is not a power of two");
  }
  for (std::size_t half = 1; half < len; half <<= 1) {
    for (std::size_t block = 0; block < len; block += 2 * half) {
      GaussianInt* lo = values.data() + block;
      GaussianInt* hi = lo + half;
      for (std::size_t k = 0; k < half; ++k) {
        const GaussianInt a = lo[k];
        const GaussianInt b = hi[k];
        lo[k] = {a.re + b.re, a.im + b.im};
        hi[k] = {a.re - b.re, a.im - b.im};
      }
    }
  }
}

std::vector<GaussianInt> fwht(std::vector<GaussianInt> values) {
  fwht_in_place(values);
  return values;
}

std::vector<GaussianInt> twisted_values_mv(const TruthTable& g,
                                           std::uint32_t c) {
  if (g.mode() != Mode::kMultivariate) {
    throw ModeMismatchError("multivariate transform of a univariate table");
  }
  check_twist(g, c);
  std::vector<GaussianInt> h(g.size());
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    const GaussianInt t = i_pow(std::popcount(c & x));
    h[x] = g.get(x) ? -t : t;
  }
  return h;
}

std::vector<GaussianInt> twisted_values_uv(const FieldSpec& field,
                                           const TruthTable& g,
                                           FieldElement c) {
  check_field(field, g);
  check_twist(g, c);
  std::vector<GaussianInt> h(g.size());
  for (FieldElement x = 0; x < g.size(); ++x) {
    const GaussianInt t = i_pow(field.trace(field.mul(c, x)));
    h[x] = (g.get(x) ^ field.sigma(c, x)) ? -t : t;
  }
  return h;
}

Spectrum transform_u(const TruthTable& g, std::uint32_t c) {
  Spectrum s{Mode::kMultivariate, g.n(), c, std::nullopt,
             twisted_values_mv(g, c)};
  fwht_in_place(s.values);
  return s;
}

Spectrum transform_v(const FieldSpec& field, const TruthTable& g,
                     FieldElement c) {
  // The butterfly sums against (-1)^{popcount(m & x)}; Tr(ux) is that
  // character for m = trace_form_mask(u).
  std::vector<GaussianInt> walsh = fwht(twisted_values_uv(field, g, c));
  Spectrum s{Mode::kUnivariate, g.n(), c, field,
             std::vector<GaussianInt>(g.size())};
  for (FieldElement u = 0; u < g.size(); ++u) {
    s.values[u] = walsh[field.trace_form_mask(u)];
  }
  return s;
}

Spectrum transform(const TruthTable& g, std::uint32_t c,
                   const std::optional<FieldSpec>& field) {
  if (g.mode() == Mode::kMultivariate) return transform_u(g, c);
  if (!field) throw InvalidArgumentError("univariate transform needs a field");
  return transform_v(*field, g, c);
}

bool is_flat(const Spectrum& s) {
  const std::int64_t target = std::int64_t{1} << s.n;
  for (const GaussianInt& v : s.values) {
    if (v.norm() != target) return false;
  }
  return true;
}

std::int64_t parseval_sum(const Spectrum& s) {
  std::int64_t total = 0;
  for (const GaussianInt& v : s.values) total += v.norm();
  return total;
}

std::vector<std::uint32_t> bent4_witnesses(
    const TruthTable& g, const std::optional<FieldSpec>& field) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < g.size(); ++c) {
    if (is_flat(transform(g, c, field))) out.push_back(c);
  }
  return out;
}

std::vector<GaussianInt> inverse_twisted(const Spectrum& s) {
  const std::size_t len = s.values.size();
  if (len != (std::size_t{1} << s.n)) {
    throw InvalidSpectrumError("spectrum length does not match 2^n");
  }
  std::vector<GaussianInt> walsh(len);
  if (s.mode == Mode::kMultivariate) {
    walsh = s.values;
  } else {
    if (!s.field || s.field->n() != s.n) {
      throw InvalidSpectrumError("univariate spectrum without its field");
    }
    for (FieldElement u = 0; u < len; ++u) {
      walsh[s.field->trace_form_mask(u)] = s.values[u];
    }
  }
  fwht_in_place(walsh);
  const std::int64_t scale = static_cast<std::int64_t>(len);
  for (GaussianInt& v : walsh) {
    if (v.re % scale != 0 || v.im % scale != 0) {
      throw InvalidSpectrumError("spectrum has no exact integer preimage");
    }
    v = {v.re / scale, v.im / scale};
  }
  return walsh;
}

TruthTable recover_function(const Spectrum& s) {
  const std::vector<GaussianInt> h = inverse_twisted(s);
  TruthTable g(s.n, s.mode);
  for (std::uint32_t x = 0; x < h.size(); ++x) {
    const GaussianInt t = twist_factor(s, x);
    if (h[x] == t) continue;
    if (h[x] == -t) {
      g.set(x, true);
    } else {
      throw InvalidSpectrumError("spectrum is not that of a Boolean function");
    }
  }
  return g;
}

}  // namespace mpf
