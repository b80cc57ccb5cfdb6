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

#include "mpf/gf2n.h"

#include <array>
#include <bit>
#include <string>

#include "mpf/errors.h"

namespace mpf {
namespace {

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

}  // namespace

int poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

bool is_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint64_t divisor = 2; poly_degree(divisor) <= d / 2; ++divisor) {
    if (poly_mod(poly, divisor) == 0) return false;
  }
  return true;
}

std::uint32_t smallest_irreducible(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw InvalidFieldError("field degree must lie in [1, 24], got " +
                            std::to_string(n));
  }
  for (std::uint32_t p = std::uint32_t{1} << n; p < (std::uint32_t{2} << n);
       ++p) {
    if (is_irreducible(p)) return p;
  }
  // Irreducible polynomials exist in every degree.
  throw InvalidFieldError("no irreducible polynomial found");
}

FieldSpec make_field(int n, std::optional<std::uint32_t> modulus) {
  if (n < 1 || n > kMaxDegree) {
    throw InvalidFieldError("field degree must lie in [1, 24], got " +
                            std::to_string(n));
  }
  if (!modulus) return FieldSpec(n, smallest_irreducible(n));
  if (poly_degree(*modulus) != n) {
    throw InvalidFieldError("modulus degree " +
                            std::to_string(poly_degree(*modulus)) +
                            " does not match field degree " +
                            std::to_string(n));
  }
  if (!is_irreducible(*modulus)) {
    throw InvalidFieldError("modulus is reducible over F_2");
  }
  return FieldSpec(n, *modulus);
}

FieldSpec::FieldSpec(int n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
  for (int k = 0; k < n_; ++k) {
    if (trace_by_conjugates(FieldElement{1} << k)) trace_mask_ |= 1u << k;
  }
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  const std::uint32_t top = std::uint32_t{1} << n_;
  FieldElement r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus_;
  }
  return r;
}

FieldElement FieldSpec::frobenius(FieldElement a, int k) const {
  k %= n_;
  for (int i = 0; i < k; ++i) a = square(a);
  return a;
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const {
  FieldElement r = 1;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = square(a);
    e >>= 1;
  }
  return r;
}

FieldElement FieldSpec::inverse(FieldElement a) const {
  if (a == 0) return 0;
  // a^(2^n - 2) = a^{-1} on the multiplicative group.
  return pow(a, (std::uint64_t{1} << n_) - 2);
}

int FieldSpec::trace(FieldElement a) const {
  return std::popcount(a & trace_mask_) & 1;
}

int FieldSpec::trace_by_conjugates(FieldElement a) const {
  FieldElement conj = a;
  FieldElement sum = a;
  for (int i = 1; i < n_; ++i) {
    conj = square(conj);
    sum ^= conj;
  }
  if (sum > 1) throw Error("trace left F_2; modulus is not irreducible");
  return static_cast<int>(sum);
}

std::uint32_t FieldSpec::trace_form_mask(FieldElement w) const {
  std::uint32_t m = 0;
  for (int k = 0; k < n_; ++k) {
    if (trace(mul(w, FieldElement{1} << k))) m |= 1u << k;
  }
  return m;
}

int FieldSpec::sigma(FieldElement c, FieldElement x) const {
  std::array<FieldElement, kMaxDegree> conj{};
  conj[0] = mul(c, x);
  for (int i = 1; i < n_; ++i) conj[i] = square(conj[i - 1]);
  FieldElement sum = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) sum ^= mul(conj[i], conj[j]);
  }
  if (sum > 1) throw Error("sigma left F_2; modulus is not irreducible");
  return static_cast<int>(sum);
}

}  // namespace mpf
