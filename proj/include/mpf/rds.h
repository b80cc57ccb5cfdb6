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

#ifndef MPF_RDS_H_
#define MPF_RDS_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mpf/gaussian.h"
#include "mpf/gf2n.h"
#include "mpf/planar.h"

namespace mpf {

// star_mv: (x1,y1)*(x2,y2) = (x1+x2, y1+y2+x1(.)x2) on F_2^n x F_2^n.
// star_uv: (x1,y1)*(x2,y2) = (x1+x2, y1+y2+x1x2) on F_{2^n} x F_{2^n}.
// z4n:     Z_4^n, coordinate k holding x_k + 2 y_k, added mod 4.
enum class GroupLaw { kStarMv, kStarUv, kZ4n };

struct GroupElement {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct GroupSpec {
  GroupLaw law = GroupLaw::kStarMv;
  int n = 0;
  std::optional<FieldSpec> field;

  static GroupSpec star_mv(int n);
  static GroupSpec star_uv(const FieldSpec& field);
  static GroupSpec z4n(int n);

  std::uint64_t order() const { return std::uint64_t{1} << (2 * n); }
  bool contains(GroupElement a) const {
    return a.x < (1u << n) && a.y < (1u << n);
  }
};

// The twisted group whose RDSs are graphs of f in f's own setting.
GroupSpec group_for(const VectorialFunction& f);

GroupElement group_identity();
GroupElement group_op(const GroupSpec& g, GroupElement a, GroupElement b);
GroupElement group_inverse(const GroupSpec& g, GroupElement a);
// Smallest k >= 1 with a^k = identity.
int element_order(const GroupSpec& g, GroupElement a);
// Every element, ordered by (x, y).
std::vector<GroupElement> all_elements(const GroupSpec& g);
// {0} x F, the forbidden subgroup of the graph RDSs.
std::vector<GroupElement> forbidden_subgroup(const GroupSpec& g);
bool is_subgroup(const GroupSpec& g, std::span<const GroupElement> n);

// chi_{u,c}(x,y):
//   star_mv: (-1)^{u.x + c.y} i^{wt(c (.) x)}
//   star_uv: (-1)^{Tr(ux) + Tr(c^2 y) + sigma(c,x)} i^{Tr(cx)}
// Throws UnsupportedError for z4n.
GaussianInt character_eval(const GroupSpec& g, std::uint32_t u,
                           std::uint32_t c, GroupElement a);

struct RdsReport {
  std::uint64_t mu = 0;
  std::uint64_t nu = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  bool is_rds = false;
  // First element (in (x, y) order) whose representation count breaks the
  // RDS conditions, with that count.
  std::optional<GroupElement> failing_element;
  std::uint64_t failing_count = 0;
};

// Counts, for every d != e, the ordered pairs (r1, r2) in R^2 with
// d = r1 * r2^{-1}. Lambda is read off the first element outside N.
// Throws NotSubgroupError if N is not a subgroup, InvalidArgumentError on
// repeated or out-of-range elements.
RdsReport rds_verify_bruteforce(const GroupSpec& g,
                                std::span<const GroupElement> r,
                                std::span<const GroupElement> n);

struct CharacterVerdict {
  bool is_rds = true;
  // First (u, c) whose character sum has the wrong modulus.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> failing_character;
  std::int64_t norm_sq = 0;
  std::int64_t expected_norm_sq = 0;
};

// Character criterion for (2^n, 2^n, 2^n, 1) parameters: |chi(R)|^2 is k^2
// for the principal character, k - lambda*nu = 0 for the other characters
// trivial on N, and k otherwise. Throws UnsupportedError when |R| or |N| is
// not 2^n.
CharacterVerdict rds_verify_characters(const GroupSpec& g,
                                       std::span<const GroupElement> r,
                                       std::span<const GroupElement> n);

// {(x, F(x))}.
std::vector<GroupElement> graph_of(const VectorialFunction& f);

// Number of elements of each order.
std::map<int, std::uint64_t> order_histogram(const GroupSpec& g);

}  // namespace mpf

#endif  // MPF_RDS_H_
