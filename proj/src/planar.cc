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

#include "mpf/planar.h"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <thread>

#include "mpf/errors.h"
#include "mpf/transforms.h"

namespace mpf {
namespace {

std::uint32_t derivative_at(const VectorialFunction& f, std::uint32_t a,
                            std::uint32_t x) {
  const std::uint32_t bilinear =
      f.mode == Mode::kMultivariate ? (a & x) : f.field->mul(a, x);
  return f.table[x ^ a] ^ f.table[x] ^ bilinear;
}

// Smallest colliding pair of the derivative in direction a, if any.
std::optional<PermWitness> collision(const VectorialFunction& f,
                                     std::uint32_t a,
                                     std::vector<std::uint32_t>& first) {
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::fill(first.begin(), first.end(), kUnseen);
  std::optional<PermWitness> best;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const std::uint32_t y = derivative_at(f, a, x);
    if (first[y] == kUnseen) {
      first[y] = x;
    } else if (!best || first[y] < best->x1) {
      // Later x never beats an earlier second element for the same x1.
      best = PermWitness{a, first[y], x};
    }
  }
  return best;
}

}  // namespace

VectorialFunction VectorialFunction::multivariate(
    int n, std::vector<std::uint32_t> table) {
  VectorialFunction f{Mode::kMultivariate, n, std::nullopt, std::move(table)};
  f.validate();
  return f;
}

VectorialFunction VectorialFunction::univariate(
    const FieldSpec& field, std::vector<std::uint32_t> table) {
  VectorialFunction f{Mode::kUnivariate, field.n(), field, std::move(table)};
  f.validate();
  return f;
}

VectorialFunction VectorialFunction::multivariate(
    int n, const std::function<std::uint32_t(std::uint32_t)>& fn) {
  if (n < 1 || n > kMaxDegree) {
    throw InvalidArgumentError("dimension must lie in [1, 24]");
  }
  std::vector<std::uint32_t> table(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < table.size(); ++x) table[x] = fn(x);
  return multivariate(n, std::move(table));
}

VectorialFunction VectorialFunction::univariate(
    const FieldSpec& field,
    const std::function<FieldElement(FieldElement)>& fn) {
  std::vector<std::uint32_t> table(field.size());
  for (FieldElement x = 0; x < table.size(); ++x) table[x] = fn(x);
  return univariate(field, std::move(table));
}

void VectorialFunction::validate() const {
  if (n < 1 || n > kMaxDegree) {
    throw InvalidArgumentError("dimension must lie in [1, 24], got " +
                               std::to_string(n));
  }
  if (mode == Mode::kUnivariate && (!field || field->n() != n)) {
    throw InvalidArgumentError("univariate function needs a field of degree " +
                               std::to_string(n));
  }
  if (table.size() != size()) {
    throw InvalidArgumentError("function table has " +
                               std::to_string(table.size()) +
                               " entries, expected " + std::to_string(size()));
  }
  for (std::uint32_t v : table) {
    if (v >= size()) {
      throw InvalidArgumentError("function value " + std::to_string(v) +
                                 " out of range");
    }
  }
}

void DOPolynomial::check_index(int i) const {
  if (i < 0 || i >= field_.n()) {
    throw InvalidArgumentError("exponent index " + std::to_string(i) +
                               " outside [0, n)");
  }
}

void DOPolynomial::check_element(FieldElement a) const {
  if (!field_.contains(a)) {
    throw InvalidArgumentError("coefficient outside the field");
  }
}

void DOPolynomial::add_quad(int i, int j, FieldElement a) {
  check_index(i);
  check_index(j);
  check_element(a);
  if (i == j) {
    add_lin((i + 1) % field_.n(), a);
    return;
  }
  if (i > j) std::swap(i, j);
  FieldElement& slot = quad_[{i, j}];
  slot ^= a;
  if (slot == 0) quad_.erase({i, j});
}

void DOPolynomial::add_lin(int i, FieldElement b) {
  check_index(i);
  check_element(b);
  FieldElement& slot = lin_[i];
  slot ^= b;
  if (slot == 0) lin_.erase(i);
}

void DOPolynomial::set_constant(FieldElement c) {
  check_element(c);
  constant_ = c;
}

FieldElement DOPolynomial::eval(FieldElement x) const {
  std::array<FieldElement, kMaxDegree> conj{};
  conj[0] = x;
  for (int i = 1; i < field_.n(); ++i) conj[i] = field_.square(conj[i - 1]);
  FieldElement y = constant_;
  for (const auto& [ij, a] : quad_) {
    y ^= field_.mul(a, field_.mul(conj[ij.first], conj[ij.second]));
  }
  for (const auto& [i, b] : lin_) y ^= field_.mul(b, conj[i]);
  return y;
}

VectorialFunction do_to_table(const DOPolynomial& p) {
  return VectorialFunction::univariate(
      p.field(), [&p](FieldElement x) { return p.eval(x); });
}

TruthTable component_mv(const VectorialFunction& f, std::uint32_t c) {
  if (f.mode != Mode::kMultivariate) {
    throw ModeMismatchError("multivariate component of a univariate function");
  }
  if (c == 0) throw ZeroComponentError("component functions need c != 0");
  if (c >= f.size()) throw InvalidArgumentError("component index out of range");
  return TruthTable::from_function(f.n, Mode::kMultivariate, [&](std::uint32_t x) {
    return std::popcount(c & f.table[x]) & 1;
  });
}

TruthTable component_uv(const VectorialFunction& f, FieldElement c) {
  if (f.mode != Mode::kUnivariate) {
    throw ModeMismatchError("univariate component of a multivariate function");
  }
  if (c == 0) throw ZeroComponentError("component functions need c != 0");
  if (c >= f.size()) throw InvalidArgumentError("component index out of range");
  const FieldSpec& field = *f.field;
  const std::uint32_t m = field.trace_form_mask(field.square(c));
  return TruthTable::from_function(f.n, Mode::kUnivariate, [&](FieldElement x) {
    return std::popcount(m & f.table[x]) & 1;
  });
}

PermVerdict is_modified_planar_perm(const VectorialFunction& f, int workers) {
  f.validate();
  const std::uint32_t directions = f.size() - 1;
  workers = std::clamp<int>(workers, 1, std::max<std::uint32_t>(directions, 1));

  // Worker w scans a contiguous range of directions and stops at its first
  // failure; the overall witness is the failure from the lowest range.
  std::vector<std::optional<PermWitness>> found(workers);
  auto scan = [&](int w) {
    const std::uint32_t lo = 1 + static_cast<std::uint64_t>(directions) * w / workers;
    const std::uint32_t hi =
        1 + static_cast<std::uint64_t>(directions) * (w + 1) / workers;
    std::vector<std::uint32_t> first(f.size());
    for (std::uint32_t a = lo; a < hi; ++a) {
      if (auto hit = collision(f, a, first)) {
        found[w] = hit;
        return;
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }
  for (const auto& hit : found) {
    if (hit) return PermVerdict{false, hit};
  }
  return PermVerdict{true, std::nullopt};
}

ComponentsVerdict is_modified_planar_components(const VectorialFunction& f) {
  f.validate();
  const std::int64_t target = std::int64_t{1} << f.n;
  for (std::uint32_t c = 1; c < f.size(); ++c) {
    const Spectrum s = f.mode == Mode::kMultivariate
                           ? transform_u(component_mv(f, c), c)
                           : transform_v(*f.field, component_uv(f, c), c);
    for (std::uint32_t u = 0; u < s.values.size(); ++u) {
      if (s.values[u].norm() != target) return ComponentsVerdict{false, c, u};
    }
  }
  return ComponentsVerdict{};
}

}  // namespace mpf
