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

#include "mpf/rds.h"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "mpf/errors.h"

namespace mpf {
namespace {

std::uint64_t key(GroupElement a) {
  return (std::uint64_t{a.x} << 32) | a.y;
}

void check_group(const GroupSpec& g) {
  if (g.n < 1 || g.n > kMaxDegree) {
    throw InvalidArgumentError("group dimension must lie in [1, 24]");
  }
  if (g.law == GroupLaw::kStarUv && (!g.field || g.field->n() != g.n)) {
    throw InvalidArgumentError("star_uv group needs a field of degree n");
  }
}

void check_set(const GroupSpec& g, std::span<const GroupElement> s,
               const char* what) {
  std::unordered_set<std::uint64_t> seen;
  for (const GroupElement& a : s) {
    if (!g.contains(a)) {
      throw InvalidArgumentError(std::string(what) +
                                 " holds an element outside the group");
    }
    if (!seen.insert(key(a)).second) {
      throw InvalidArgumentError(std::string(what) + " repeats an element");
    }
  }
}

int parity(std::uint32_t v) { return std::popcount(v) & 1; }

}  // namespace

GroupSpec GroupSpec::star_mv(int n) {
  GroupSpec g{GroupLaw::kStarMv, n, std::nullopt};
  check_group(g);
  return g;
}

GroupSpec GroupSpec::star_uv(const FieldSpec& field) {
  return GroupSpec{GroupLaw::kStarUv, field.n(), field};
}

GroupSpec GroupSpec::z4n(int n) {
  GroupSpec g{GroupLaw::kZ4n, n, std::nullopt};
  check_group(g);
  return g;
}

GroupSpec group_for(const VectorialFunction& f) {
  return f.mode == Mode::kMultivariate ? GroupSpec::star_mv(f.n)
                                       : GroupSpec::star_uv(*f.field);
}

GroupElement group_identity() { return {0, 0}; }

GroupElement group_op(const GroupSpec& g, GroupElement a, GroupElement b) {
  switch (g.law) {
    case GroupLaw::kStarMv:
      return {a.x ^ b.x, a.y ^ b.y ^ (a.x & b.x)};
    case GroupLaw::kStarUv:
      return {a.x ^ b.x, a.y ^ b.y ^ g.field->mul(a.x, b.x)};
    case GroupLaw::kZ4n: {
      GroupElement out;
      for (int k = 0; k < g.n; ++k) {
        const std::uint32_t va = (a.x >> k & 1) + 2 * (a.y >> k & 1);
        const std::uint32_t vb = (b.x >> k & 1) + 2 * (b.y >> k & 1);
        const std::uint32_t sum = (va + vb) % 4;
        out.x |= (sum & 1) << k;
        out.y |= (sum >> 1) << k;
      }
      return out;
    }
  }
  return {};
}

GroupElement group_inverse(const GroupSpec& g, GroupElement a) {
  switch (g.law) {
    case GroupLaw::kStarMv:
      return {a.x, a.y ^ a.x};
    case GroupLaw::kStarUv:
      return {a.x, a.y ^ g.field->square(a.x)};
    case GroupLaw::kZ4n: {
      GroupElement out;
      for (int k = 0; k < g.n; ++k) {
        const std::uint32_t v = (a.x >> k & 1) + 2 * (a.y >> k & 1);
        const std::uint32_t neg = (4 - v) % 4;
        out.x |= (neg & 1) << k;
        out.y |= (neg >> 1) << k;
      }
      return out;
    }
  }
  return {};
}

int element_order(const GroupSpec& g, GroupElement a) {
  int k = 1;
  for (GroupElement p = a; p != group_identity(); p = group_op(g, p, a)) ++k;
  return k;
}

std::vector<GroupElement> all_elements(const GroupSpec& g) {
  std::vector<GroupElement> out;
  out.reserve(g.order());
  for (std::uint32_t x = 0; x < (1u << g.n); ++x) {
    for (std::uint32_t y = 0; y < (1u << g.n); ++y) out.push_back({x, y});
  }
  return out;
}

std::vector<GroupElement> forbidden_subgroup(const GroupSpec& g) {
  std::vector<GroupElement> out;
  for (std::uint32_t y = 0; y < (1u << g.n); ++y) out.push_back({0, y});
  return out;
}

bool is_subgroup(const GroupSpec& g, std::span<const GroupElement> n) {
  std::unordered_set<std::uint64_t> members;
  for (const GroupElement& a : n) members.insert(key(a));
  if (!members.contains(key(group_identity()))) return false;
  for (const GroupElement& a : n) {
    if (!members.contains(key(group_inverse(g, a)))) return false;
    for (const GroupElement& b : n) {
      if (!members.contains(key(group_op(g, a, b)))) return false;
    }
  }
  return true;
}

GaussianInt character_eval(const GroupSpec& g, std::uint32_t u,
                           std::uint32_t c, GroupElement a) {
  switch (g.law) {
    case GroupLaw::kStarMv: {
      const GaussianInt t = i_pow(std::popcount(c & a.x));
      return (parity(u & a.x) ^ parity(c & a.y)) ? -t : t;
    }
    case GroupLaw::kStarUv: {
      const FieldSpec& f = *g.field;
      const GaussianInt t = i_pow(f.trace(f.mul(c, a.x)));
      const int sign = f.trace(f.mul(u, a.x)) ^
                       f.trace(f.mul(f.square(c), a.y)) ^ f.sigma(c, a.x);
      return sign ? -t : t;
    }
    case GroupLaw::kZ4n:
      break;
  }
  throw UnsupportedError("characters are only provided for the star laws");
}

RdsReport rds_verify_bruteforce(const GroupSpec& g,
                                std::span<const GroupElement> r,
                                std::span<const GroupElement> n) {
  check_group(g);
  check_set(g, r, "R");
  check_set(g, n, "N");
  if (!is_subgroup(g, n)) {
    throw NotSubgroupError("N is not a subgroup of G");
  }

  std::unordered_map<std::uint64_t, std::uint64_t> tally;
  for (const GroupElement& r2 : r) {
    const GroupElement inv = group_inverse(g, r2);
    for (const GroupElement& r1 : r) {
      if (r1 == r2) continue;
      ++tally[key(group_op(g, r1, inv))];
    }
  }
  std::unordered_set<std::uint64_t> in_n;
  for (const GroupElement& a : n) in_n.insert(key(a));

  RdsReport report;
  report.nu = n.size();
  report.mu = g.order() / report.nu;
  report.k = r.size();
  report.is_rds = true;
  bool have_lambda = false;
  for (const GroupElement& d : all_elements(g)) {
    if (d == group_identity()) continue;
    const auto it = tally.find(key(d));
    const std::uint64_t count = it == tally.end() ? 0 : it->second;
    bool ok;
    if (in_n.contains(key(d))) {
      ok = count == 0;
    } else if (!have_lambda) {
      report.lambda = count;
      have_lambda = true;
      ok = true;
    } else {
      ok = count == report.lambda;
    }
    if (!ok) {
      report.is_rds = false;
      report.failing_element = d;
      report.failing_count = count;
      break;
    }
  }
  return report;
}

CharacterVerdict rds_verify_characters(const GroupSpec& g,
                                       std::span<const GroupElement> r,
                                       std::span<const GroupElement> n) {
  check_group(g);
  if (g.law == GroupLaw::kZ4n) {
    throw UnsupportedError("characters are only provided for the star laws");
  }
  check_set(g, r, "R");
  check_set(g, n, "N");
  if (!is_subgroup(g, n)) {
    throw NotSubgroupError("N is not a subgroup of G");
  }
  const std::int64_t k = std::int64_t{1} << g.n;
  if (static_cast<std::int64_t>(r.size()) != k ||
      static_cast<std::int64_t>(n.size()) != k) {
    throw UnsupportedError(
        "character verifier handles (2^n, 2^n, 2^n, 1) parameters only");
  }
  constexpr std::int64_t kLambda = 1;
  const std::int64_t nu = k;

  CharacterVerdict verdict;
  for (std::uint32_t c = 0; c < (1u << g.n); ++c) {
    for (std::uint32_t u = 0; u < (1u << g.n); ++u) {
      const bool trivial_on_n =
          std::all_of(n.begin(), n.end(), [&](const GroupElement& a) {
            return character_eval(g, u, c, a) == GaussianInt{1, 0};
          });
      std::int64_t expected;
      if (u == 0 && c == 0) {
        expected = k * k;
      } else if (trivial_on_n) {
        expected = k - kLambda * nu;
      } else {
        expected = k;
      }
      GaussianInt sum;
      for (const GroupElement& a : r) sum += character_eval(g, u, c, a);
      if (sum.norm() != expected) {
        verdict.is_rds = false;
        verdict.failing_character = {u, c};
        verdict.norm_sq = sum.norm();
        verdict.expected_norm_sq = expected;
        return verdict;
      }
    }
  }
  return verdict;
}

std::vector<GroupElement> graph_of(const VectorialFunction& f) {
  f.validate();
  std::vector<GroupElement> out;
  out.reserve(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) out.push_back({x, f.table[x]});
  return out;
}

std::map<int, std::uint64_t> order_histogram(const GroupSpec& g) {
  std::map<int, std::uint64_t> hist;
  for (const GroupElement& a : all_elements(g)) ++hist[element_order(g, a)];
  return hist;
}

}  // namespace mpf
