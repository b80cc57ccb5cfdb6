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

#ifndef MPF_GF2N_H_
#define MPF_GF2N_H_

#include <cstdint>
#include <optional>

namespace mpf {

// An element of F_{2^n} in polynomial basis: bit k is the coefficient of
// alpha^k, alpha the residue of X. The same integer doubles as a point of
// F_2^n (bit k-1 is coordinate x_k).
using FieldElement = std::uint32_t;

inline constexpr int kMaxDegree = 24;

// Binary field F_2[X]/(modulus). Immutable after construction.
class FieldSpec {
 public:
  int n() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }
  std::uint32_t mask() const { return size() - 1; }
  bool contains(FieldElement a) const { return a < size(); }

  FieldElement add(FieldElement a, FieldElement b) const { return a ^ b; }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement square(FieldElement a) const { return mul(a, a); }
  // a^(2^k).
  FieldElement frobenius(FieldElement a, int k) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  // Multiplicative inverse; inverse(0) is 0.
  FieldElement inverse(FieldElement a) const;

  // Absolute trace, via the precomputed linear-functional mask.
  int trace(FieldElement a) const;
  // Absolute trace as the literal conjugate sum a + a^2 + ... + a^(2^(n-1)).
  int trace_by_conjugates(FieldElement a) const;
  // Mask m with Tr(w * x) = parity(m & x) for every x.
  std::uint32_t trace_form_mask(FieldElement w) const;

  // sigma(c, x) = sum_{0 <= i < j < n} (cx)^(2^i) (cx)^(2^j), evaluated as
  // the literal double sum. Always 0 or 1.
  int sigma(FieldElement c, FieldElement x) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.n_ == b.n_ && a.modulus_ == b.modulus_;
  }

 private:
  friend FieldSpec make_field(int n, std::optional<std::uint32_t> modulus);
  FieldSpec(int n, std::uint32_t modulus);

  int n_;
  std::uint32_t modulus_;
  std::uint32_t trace_mask_ = 0;
};

// Builds F_{2^n}. Without a modulus, picks the smallest irreducible
// polynomial of degree n in integer encoding. Throws InvalidFieldError.
FieldSpec make_field(int n, std::optional<std::uint32_t> modulus = std::nullopt);

// Polynomial degree of p over F_2; -1 for p = 0.
int poly_degree(std::uint64_t p);
// Trial division by every polynomial of degree <= deg(p)/2.
bool is_irreducible(std::uint32_t poly);
std::uint32_t smallest_irreducible(int n);

}  // namespace mpf

#endif  // MPF_GF2N_H_
