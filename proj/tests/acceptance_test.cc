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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mpf/formats.h"
#include "mpf/gf2n.h"
#include "mpf/planar.h"
#include "mpf/rds.h"
#include "mpf/search.h"
#include "mpf/transforms.h"
#include "mpf/truth_table.h"
#include "oracles.h"

namespace mpf {
namespace {

constexpr Mode kMv = Mode::kMultivariate;
constexpr Mode kUv = Mode::kUnivariate;

// Planar count over all maps F_2^2 -> F_2^2, fixed from an independent
// set-based count.
constexpr std::uint64_t kFrozenPlanarMvN2 = 64;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_time(Outcome& o, double elapsed, double limit) {
  if (elapsed >= limit) {
    o.fail("took " + std::to_string(elapsed) + " s, limit " +
           std::to_string(limit) + " s");
  }
}

TruthTable table_from_bits(int n, Mode mode, std::uint64_t bits) {
  TruthTable g(n, mode);
  for (std::uint32_t x = 0; x < g.size(); ++x) g.set(x, bits >> x & 1);
  return g;
}

TruthTable random_table(std::mt19937_64& rng, int n, Mode mode) {
  TruthTable g(n, mode);
  for (std::uint32_t x = 0; x < g.size(); ++x) g.set(x, rng() & 1);
  return g;
}

std::vector<int> bits_of(const TruthTable& g) {
  std::vector<int> v(g.size());
  for (std::uint32_t x = 0; x < g.size(); ++x) v[x] = g.get(x);
  return v;
}

bool same(const std::vector<oracle::Complex>& a,
          const std::vector<oracle::Complex>& b) {
  return a == b;
}

bool same(const Spectrum& s, const std::vector<oracle::Complex>& ref) {
  if (s.values.size() != ref.size()) return false;
  for (std::size_t u = 0; u < ref.size(); ++u) {
    if (s.values[u].re != ref[u].real() || s.values[u].im != ref[u].imag()) {
      return false;
    }
  }
  return true;
}

std::uint64_t g_planar_mv_n2 = 0;

Outcome grand_equivalence(Mode mode, std::uint64_t* planar_count) {
  Outcome o;
  const auto t0 = Clock::now();
  const FieldSpec f4 = make_field(2);
  const GroupSpec g =
      mode == kMv ? GroupSpec::star_mv(2) : GroupSpec::star_uv(f4);
  const auto n = forbidden_subgroup(g);
  std::uint64_t planar = 0;
  for (std::uint32_t code = 0; code < 256; ++code) {
    std::vector<std::uint32_t> table(4);
    for (int x = 0; x < 4; ++x) table[x] = code >> (2 * x) & 3;
    const auto f = mode == kMv ? VectorialFunction::multivariate(2, table)
                               : VectorialFunction::univariate(f4, table);
    const auto r = graph_of(f);
    const bool perm = is_modified_planar_perm(f).planar;
    const bool comps = is_modified_planar_components(f).planar;
    const bool brute = rds_verify_bruteforce(g, r, n).is_rds;
    const bool chars = rds_verify_characters(g, r, n).is_rds;
    if (perm != comps || perm != brute || perm != chars) {
      o.fail("verdicts differ for table code " + std::to_string(code));
    }
    planar += perm;
  }
  if (planar_count) *planar_count = planar;
  o.detail = o.ok ? std::to_string(planar) + "/256 planar" : o.detail;
  check_time(o, seconds_since(t0), 5.0);
  return o;
}

Outcome criterion_1() { return grand_equivalence(kMv, &g_planar_mv_n2); }
Outcome criterion_2() { return grand_equivalence(kUv, nullptr); }

Outcome criterion_3() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    const std::vector<std::uint32_t> zero(std::size_t{1} << n);
    const auto uv = VectorialFunction::univariate(make_field(n), zero);
    const GroupSpec gu = group_for(uv);
    if (!is_modified_planar_perm(uv).planar ||
        !is_modified_planar_components(uv).planar ||
        !rds_verify_bruteforce(gu, graph_of(uv), forbidden_subgroup(gu)).is_rds) {
      o.fail("uv zero not planar at n=" + std::to_string(n));
    }
    const auto mv = VectorialFunction::multivariate(n, zero);
    const PermVerdict v = is_modified_planar_perm(mv);
    if (v.planar || !v.witness) {
      o.fail("mv zero planar at n=" + std::to_string(n));
    } else if (std::popcount(v.witness->a) >= n) {
      o.fail("witness weight not below n at n=" + std::to_string(n));
    }
    if (is_modified_planar_components(mv).planar) {
      o.fail("mv zero components flat at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const auto t0 = Clock::now();
  std::uint64_t checked = 0;
  for (int n : {2, 3}) {
    const FunctionSpace space(kUv, n, FunctionClass::kAffine);
    const FieldSpec& f = *space.field();
    std::uint64_t count = 0;
    enumerate_class(space, [&](const VectorialFunction& g) {
      ++count;
      if (!is_modified_planar_perm(g).planar) {
        o.fail("affine function not planar at n=" + std::to_string(n));
      }
      for (FieldElement lam = 1; lam < f.size(); ++lam) {
        const TruthTable comp = component_uv(g, lam);
        for (FieldElement c = 1; c < f.size(); ++c) {
          if (!is_flat(transform_v(f, comp, c))) {
            o.fail("component not c-bent4 at n=" + std::to_string(n));
          }
        }
      }
    });
    if (count != (n == 2 ? 64u : 4096u)) o.fail("wrong affine class size");
    checked += count;
  }
  if (o.ok) o.detail = std::to_string(checked) + " affine functions";
  check_time(o, seconds_since(t0), 10.0);
  return o;
}

Outcome criterion_5() {
  Outcome o;
  std::uint64_t spectra = 0;
  auto check = [&](int n, const TruthTable& g) {
    const auto v = bits_of(g);
    for (std::uint32_t c = 0; c < g.size(); ++c) {
      const auto eq5 = oracle::u_weight_form(n, v, c);
      const auto eq6 = oracle::u_symmetric_form(n, v, c);
      const Spectrum fast = transform_u(g, c);
      if (!same(eq5, eq6) || !same(fast, eq5)) {
        o.fail("forms differ at n=" + std::to_string(n));
      }
      if (parseval_sum(fast) != std::int64_t{1} << (2 * n)) {
        o.fail("Parseval fails at n=" + std::to_string(n));
      }
      ++spectra;
    }
  };
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (1u << n)); ++bits) {
      check(n, table_from_bits(n, kMv, bits));
    }
  }
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10000; ++t) check(4, random_table(rng, 4, kMv));
  if (o.ok) o.detail = std::to_string(spectra) + " spectra";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  const auto t0 = Clock::now();
  const FieldSpec f = make_field(3);
  for (Mode mode : {kMv, kUv}) {
    for (std::uint64_t bits = 0; bits < 256; ++bits) {
      const TruthTable g = table_from_bits(3, mode, bits);
      for (std::uint32_t c = 0; c < 8; ++c) {
        bool balanced = true;
        for (std::uint32_t z = 1; z < 8; ++z) {
          balanced &= is_balanced(mode == kMv
                                      ? shifted_derivative_mv(g, z, c)
                                      : shifted_derivative_uv(f, g, z, c));
        }
        if (is_flat(transform(g, c, f)) != balanced) {
          o.fail(std::string(mode_name(mode)) + " table " +
                 std::to_string(bits) + " c=" + std::to_string(c));
        }
      }
    }
  }
  check_time(o, seconds_since(t0), 30.0);
  return o;
}

Outcome criterion_7() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const FieldSpec f = make_field(n);
    for (FieldElement c = 0; c < f.size(); ++c) {
      for (FieldElement a = 0; a < f.size(); ++a) {
        for (FieldElement b = 0; b < f.size(); ++b) {
          const int rhs = f.sigma(c, a) ^ f.sigma(c, b) ^
                          (f.trace(f.mul(c, a)) & f.trace(f.mul(c, b))) ^
                          f.trace(f.mul(f.square(c), f.mul(a, b)));
          if (f.sigma(c, a ^ b) != rhs) o.fail("sigma lemma at n=" + std::to_string(n));
        }
      }
    }
    for (FieldElement x = 0; x < f.size(); ++x) {
      for (FieldElement y = 0; y < f.size(); ++y) {
        const int tx = f.trace(x), ty = f.trace(y);
        if ((tx + ty) % 4 != (f.trace(x ^ y) + 2 * tx * ty) % 4) {
          o.fail("mod-4 identity at n=" + std::to_string(n));
        }
      }
    }
  }

  auto groups = [](int n) {
    return std::vector<GroupSpec>{GroupSpec::star_mv(n),
                                  GroupSpec::star_uv(make_field(n))};
  };
  for (const GroupSpec& g : groups(2)) {
    const auto all = all_elements(g);
    std::vector<std::vector<GaussianInt>> rows;
    for (std::uint32_t u = 0; u < 4; ++u) {
      for (std::uint32_t c = 0; c < 4; ++c) {
        std::vector<GaussianInt> row;
        for (const auto& a : all) {
          row.push_back(character_eval(g, u, c, a));
          for (const auto& b : all) {
            if (character_eval(g, u, c, group_op(g, a, b)) !=
                character_eval(g, u, c, a) * character_eval(g, u, c, b)) {
              o.fail("homomorphism fails at n=2");
            }
          }
        }
        for (const auto& prev : rows) {
          if (prev == row) o.fail("characters not separated at n=2");
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::mt19937_64 rng(7);
  for (const GroupSpec& g : groups(4)) {
    for (int t = 0; t < 100000; ++t) {
      const std::uint32_t u = rng() & 15, c = rng() & 15;
      const GroupElement a{static_cast<std::uint32_t>(rng() & 15),
                           static_cast<std::uint32_t>(rng() & 15)};
      const GroupElement b{static_cast<std::uint32_t>(rng() & 15),
                           static_cast<std::uint32_t>(rng() & 15)};
      if (character_eval(g, u, c, group_op(g, a, b)) !=
          character_eval(g, u, c, a) * character_eval(g, u, c, b)) {
        o.fail("homomorphism fails at n=4");
      }
    }
  }
  return o;
}

Outcome criterion_8() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (Mode mode : {kMv, kUv}) {
    for (int n = 1; n <= 5; ++n) {
      const FieldSpec f = make_field(n);
      for (int t = 0; t < 1000; ++t) {
        const TruthTable g = random_table(rng, n, mode);
        const std::uint32_t c = rng() % g.size();
        const Spectrum s = transform(g, c, f);
        const auto h = mode == kMv ? twisted_values_mv(g, c)
                                   : twisted_values_uv(f, g, c);
        if (inverse_twisted(s) != h || recover_function(s) != g) {
          o.fail(std::string(mode_name(mode)) + " round trip at n=" +
                 std::to_string(n));
        }
      }
    }
  }
  return o;
}

Outcome criterion_9() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    const std::uint32_t ones = (1u << n) - 1;
    for (bool b : {false, true}) {
      if (!is_flat(transform_u(TruthTable::constant(n, kMv, b), ones))) {
        o.fail("constant not negabent at n=" + std::to_string(n));
      }
    }
  }
  const FieldSpec f = make_field(3);
  for (Mode mode : {kMv, kUv}) {
    for (std::uint64_t bits = 0; bits < 256; ++bits) {
      for (std::uint32_t c : bent4_witnesses(table_from_bits(3, mode, bits), f)) {
        if (c == 0) o.fail("bent function found at n=3");
      }
    }
  }
  return o;
}

Outcome criterion_10() {
  Outcome o;
  const auto t0 = Clock::now();
  std::string first;
  std::uint64_t passing = 0;
  for (int shards : {1, 2, 8}) {
    SearchJob job;
    job.mode = kMv;
    job.n = 2;
    job.cls = FunctionClass::kAll;
    job.filter = Filter::kBoth;
    job.shards = shards;
    const SearchReport r = run_search(job);
    const std::string dump = search_report_to_json(r).dump();
    if (first.empty()) {
      first = dump;
      passing = r.passing;
    } else if (dump != first) {
      o.fail("report differs with " + std::to_string(shards) + " shards");
    }
  }
  if (passing != kFrozenPlanarMvN2) {
    o.fail("passing " + std::to_string(passing) + " != frozen " +
           std::to_string(kFrozenPlanarMvN2));
  }
  if (passing != g_planar_mv_n2) {
    o.fail("passing " + std::to_string(passing) + " != brute force " +
           std::to_string(g_planar_mv_n2));
  }
  if (o.ok) o.detail = "passing " + std::to_string(passing);
  check_time(o, seconds_since(t0), 10.0);
  return o;
}

Outcome criterion_11() {
  Outcome o;
  const auto t0 = Clock::now();
  const FunctionSpace space(kUv, 3, FunctionClass::kDoQuadratic);
  std::uint64_t count = 0, planar = 0;
  enumerate_class(space, [&](const VectorialFunction& f) {
    ++count;
    const bool perm = is_modified_planar_perm(f).planar;
    if (perm != is_modified_planar_components(f).planar) {
      o.fail("filters disagree on candidate " + std::to_string(count - 1));
    }
    planar += perm;
  });
  if (count != 512) o.fail("class size " + std::to_string(count));
  if (o.ok) o.detail = std::to_string(planar) + "/512 planar";
  check_time(o, seconds_since(t0), 60.0);
  return o;
}

Outcome criterion_12() {
  Outcome o;
  std::mt19937_64 rng(12);
  std::vector<GaussianInt> big(std::size_t{1} << 22);
  for (auto& v : big) v = i_pow(static_cast<std::int64_t>(rng() % 4));
  auto t0 = Clock::now();
  fwht_in_place(big);
  const double fwht_s = seconds_since(t0);
  check_time(o, fwht_s, 5.0);

  const TruthTable g = random_table(rng, 16, kMv);
  t0 = Clock::now();
  const Spectrum s = transform_u(g, 0xa5a5);
  const double u_s = seconds_since(t0);
  check_time(o, u_s, 1.0);
  if (parseval_sum(s) != std::int64_t{1} << 32) o.fail("Parseval fails at n=16");

  char buf[96];
  std::snprintf(buf, sizeof buf, "fwht 2^22 %.3f s, U at n=16 %.3f s", fwht_s,
                u_s);
  if (o.ok) o.detail = buf;
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace mpf

int main() {
  using namespace mpf;
  const std::vector<Criterion> criteria = {
      {1, "grand equivalence, multivariate", criterion_1},
      {2, "grand equivalence, univariate", criterion_2},
      {3, "zero function split", criterion_3},
      {4, "affine class", criterion_4},
      {5, "transform identities", criterion_5},
      {6, "flatness vs balanced derivatives", criterion_6},
      {7, "algebraic lemmas", criterion_7},
      {8, "inverse transform", criterion_8},
      {9, "negabent baselines", criterion_9},
      {10, "search determinism and census", criterion_10},
      {11, "DO quadratic sweep", criterion_11},
      {12, "performance", criterion_12},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(t0);
    failures += !o.ok;
    std::printf("%s [%2d] %-34s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.name, elapsed, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
