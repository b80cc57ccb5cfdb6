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

#include "mpf/selftest.h"

#include <exception>
#include <functional>
#include <random>

#include "mpf/formats.h"
#include "mpf/gf2n.h"
#include "mpf/planar.h"
#include "mpf/rds.h"
#include "mpf/search.h"
#include "mpf/transforms.h"
#include "mpf/truth_table.h"

namespace mpf {
namespace {

TruthTable random_table(std::mt19937_64& rng, int n, Mode mode) {
  TruthTable g(n, mode);
  for (std::uint32_t x = 0; x < g.size(); ++x) g.set(x, rng() & 1);
  return g;
}

// Returns an empty string on success, else a description of the failure.
using Check = std::function<std::string()>;

std::string field_check() {
  for (int n = 1; n <= 10; ++n) {
    const FieldSpec f = make_field(n);
    if (!is_irreducible(f.modulus())) return "reducible default modulus";
    for (FieldElement a = 0; a < f.size() && a < 256; ++a) {
      if (f.trace(a) != f.trace_by_conjugates(a)) return "trace mismatch";
      if (a != 0 && f.mul(a, f.inverse(a)) != 1) return "bad inverse";
    }
  }
  if (make_field(2).mul(2, 2) != 3) return "alpha^2 != alpha + 1 in F_4";
  return "";
}

std::string sigma_check() {
  for (int n = 1; n <= 4; ++n) {
    const FieldSpec f = make_field(n);
    for (FieldElement c = 0; c < f.size(); ++c) {
      for (FieldElement a = 0; a < f.size(); ++a) {
        for (FieldElement b = 0; b < f.size(); ++b) {
          const int rhs = f.sigma(c, a) ^ f.sigma(c, b) ^
                          (f.trace(f.mul(c, a)) & f.trace(f.mul(c, b))) ^
                          f.trace(f.mul(f.square(c), f.mul(a, b)));
          if (f.sigma(c, a ^ b) != rhs) return "sigma additivity fails";
        }
      }
    }
  }
  return "";
}

std::string spectrum_check() {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 6; ++n) {
    const FieldSpec f = make_field(n);
    for (int trial = 0; trial < 20; ++trial) {
      const Mode mode = trial % 2 ? Mode::kUnivariate : Mode::kMultivariate;
      const TruthTable g = random_table(rng, n, mode);
      const std::uint32_t c = rng() & f.mask();
      const Spectrum s = transform(g, c, f);
      if (parseval_sum(s) != std::int64_t{1} << (2 * n)) return "Parseval fails";
      if (recover_function(s) != g) return "inverse transform fails";
    }
  }
  return "";
}

std::string criterion_check() {
  std::mt19937_64 rng(2);
  const FieldSpec f = make_field(3);
  for (int trial = 0; trial < 64; ++trial) {
    const Mode mode = trial % 2 ? Mode::kUnivariate : Mode::kMultivariate;
    const TruthTable g = random_table(rng, 3, mode);
    for (std::uint32_t c = 0; c < 8; ++c) {
      bool balanced = true;
      for (std::uint32_t z = 1; z < 8; ++z) {
        const TruthTable d = mode == Mode::kMultivariate
                                 ? shifted_derivative_mv(g, z, c)
                                 : shifted_derivative_uv(f, g, z, c);
        balanced = balanced && is_balanced(d);
      }
      if (balanced != is_flat(transform(g, c, f))) {
        return "flatness and derivative balance disagree";
      }
    }
  }
  return "";
}

std::string grand_chain_check() {
  for (Mode mode : {Mode::kMultivariate, Mode::kUnivariate}) {
    const FunctionSpace space(mode, 2, FunctionClass::kAll);
    for (std::uint64_t i = 0; i < *space.size(); ++i) {
      const VectorialFunction fn = space.at(i);
      const GroupSpec g = group_for(fn);
      const auto graph = graph_of(fn);
      const auto forbidden = forbidden_subgroup(g);
      const bool perm = is_modified_planar_perm(fn).planar;
      const bool comp = is_modified_planar_components(fn).planar;
      const bool brute = rds_verify_bruteforce(g, graph, forbidden).is_rds;
      const bool chars = rds_verify_characters(g, graph, forbidden).is_rds;
      if (perm != comp || perm != brute || perm != chars) {
        return "verdicts disagree on " + function_to_json(fn).dump();
      }
    }
  }
  return "";
}

std::string character_check() {
  for (const GroupSpec& g :
       {GroupSpec::star_mv(2), GroupSpec::star_uv(make_field(2))}) {
    const auto elems = all_elements(g);
    for (std::uint32_t u = 0; u < 4; ++u) {
      for (std::uint32_t c = 0; c < 4; ++c) {
        for (const GroupElement& a : elems) {
          for (const GroupElement& b : elems) {
            if (character_eval(g, u, c, group_op(g, a, b)) !=
                character_eval(g, u, c, a) * character_eval(g, u, c, b)) {
              return "character is not a homomorphism";
            }
          }
        }
      }
    }
  }
  return "";
}

std::string affine_check() {
  const FunctionSpace space(Mode::kUnivariate, 3, FunctionClass::kAffine);
  for (std::uint64_t i = 0; i < *space.size(); ++i) {
    if (!is_modified_planar_perm(space.at(i)).planar) {
      return "affine function is not modified planar";
    }
  }
  return "";
}

std::string search_check() {
  SearchJob job;
  job.mode = Mode::kMultivariate;
  job.n = 2;
  job.cls = FunctionClass::kAll;
  job.filter = Filter::kBoth;
  const std::string one = search_report_to_json(run_search(job)).dump();
  job.shards = 3;
  if (search_report_to_json(run_search(job)).dump() != one) {
    return "report depends on shard count";
  }
  return "";
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"field arithmetic and trace", field_check},
      {"sigma additivity (n <= 4)", sigma_check},
      {"Parseval and inverse transform", spectrum_check},
      {"flat spectrum <=> balanced derivatives (n = 3)", criterion_check},
      {"four planarity verdicts agree (n = 2)", grand_chain_check},
      {"characters are homomorphisms (n = 2)", character_check},
      {"affine univariate functions are planar (n = 3)", affine_check},
      {"search is shard independent", search_check},
  };
  std::vector<SelftestCheck> out;
  for (const auto& [name, check] : checks) {
    SelftestCheck result{name, false, ""};
    try {
      result.detail = check();
      result.passed = result.detail.empty();
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace mpf
