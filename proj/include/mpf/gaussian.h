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

#ifndef MPF_GAUSSIAN_H_
#define MPF_GAUSSIAN_H_

#include <cstdint>
#include <ostream>

namespace mpf {

// Exact Gaussian integer re + i*im.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr std::int64_t norm() const { return re * re + im * im; }
  constexpr GaussianInt conj() const { return {re, -im}; }

  constexpr GaussianInt& operator+=(GaussianInt o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr GaussianInt& operator-=(GaussianInt o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) {
    return a += b;
  }
  friend constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) {
    return a -= b;
  }
  friend constexpr GaussianInt operator-(GaussianInt a) {
    return {-a.re, -a.im};
  }
  friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr bool operator==(GaussianInt, GaussianInt) = default;
};

// i^k for any integer k; the exponent is reduced mod 4.
constexpr GaussianInt i_pow(std::int64_t k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

inline std::ostream& operator<<(std::ostream& os, GaussianInt g) {
  return os << '(' << g.re << ',' << g.im << ')';
}

}  // namespace mpf

#endif  // MPF_GAUSSIAN_H_
