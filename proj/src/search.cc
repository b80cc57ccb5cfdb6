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

#include "mpf/search.h"

#include <algorithm>
#include <bit>
#include <exception>
#include <string>
#include <thread>

#include "mpf/errors.h"
#include "mpf/formats.h"

namespace mpf {
namespace {

struct ShardResult {
  std::uint64_t examined = 0;
  std::vector<std::uint64_t> passing;  // member indices, examination order
  std::exception_ptr error;
};

bool passes(const VectorialFunction& f, Filter filter) {
  switch (filter) {
    case Filter::kPerm:
      return is_modified_planar_perm(f).planar;
    case Filter::kComponents:
      return is_modified_planar_components(f).planar;
    case Filter::kBoth: {
      const bool perm = is_modified_planar_perm(f).planar;
      const bool comp = is_modified_planar_components(f).planar;
      if (perm != comp) {
        throw DefinitionMismatchError(
            "permutation route says " + std::string(perm ? "true" : "false") +
            " but component route says " + (comp ? "true" : "false") +
            " for " + function_to_json(f).dump());
      }
      return perm;
    }
  }
  return false;
}

}  // namespace

std::string_view class_name(FunctionClass c) {
  switch (c) {
    case FunctionClass::kAll: return "all";
    case FunctionClass::kAffine: return "affine";
    case FunctionClass::kDoQuadratic: return "do_quadratic";
    case FunctionClass::kDoPlusAffine: return "do_plus_affine";
  }
  return "";
}

std::string_view filter_name(Filter f) {
  switch (f) {
    case Filter::kPerm: return "perm";
    case Filter::kComponents: return "components";
    case Filter::kBoth: return "both";
  }
  return "";
}

std::optional<FunctionClass> parse_class(std::string_view s) {
  for (FunctionClass c : {FunctionClass::kAll, FunctionClass::kAffine,
                          FunctionClass::kDoQuadratic,
                          FunctionClass::kDoPlusAffine}) {
    if (class_name(c) == s) return c;
  }
  return std::nullopt;
}

std::optional<Filter> parse_filter(std::string_view s) {
  for (Filter f : {Filter::kPerm, Filter::kComponents, Filter::kBoth}) {
    if (filter_name(f) == s) return f;
  }
  return std::nullopt;
}

int max_dimension(FunctionClass c) {
  switch (c) {
    case FunctionClass::kAll: return 2;
    case FunctionClass::kAffine: return 4;
    case FunctionClass::kDoQuadratic: return 5;
    case FunctionClass::kDoPlusAffine: return 3;
  }
  return 0;
}

FunctionSpace::FunctionSpace(Mode mode, int n, FunctionClass cls,
                             std::optional<FieldSpec> field)
    : mode_(mode), n_(n), cls_(cls) {
  if (n < 1 || n > max_dimension(cls)) {
    throw SearchBoundsError("class " + std::string(class_name(cls)) +
                            " is enumerable for 1 <= n <= " +
                            std::to_string(max_dimension(cls)) + ", got n = " +
                            std::to_string(n));
  }
  if (mode == Mode::kUnivariate) {
    field_ = field ? *field : make_field(n);
    if (field_->n() != n) {
      throw InvalidArgumentError("search field degree differs from n");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
  }
  const int quad = static_cast<int>(pairs_.size());
  switch (cls) {
    case FunctionClass::kAll: digits_ = 1 << n; break;
    case FunctionClass::kAffine: digits_ = n + 1; break;
    case FunctionClass::kDoQuadratic: digits_ = quad; break;
    case FunctionClass::kDoPlusAffine: digits_ = quad + n + 1; break;
  }
}

std::optional<std::uint64_t> FunctionSpace::size() const {
  const int bits = n_ * digits_;
  if (bits >= 64) return std::nullopt;
  return std::uint64_t{1} << bits;
}

VectorialFunction FunctionSpace::at(std::uint64_t index) const {
  const std::uint32_t points = 1u << n_;
  std::vector<std::uint32_t> table(points, 0);
  if (cls_ == FunctionClass::kAll) {
    for (std::uint32_t x = 0; x < points; ++x) table[x] = digit(index, x);
  } else {
    const bool has_quad = cls_ != FunctionClass::kAffine;
    const bool has_affine = cls_ != FunctionClass::kDoQuadratic;
    const int quad_digits = has_quad ? static_cast<int>(pairs_.size()) : 0;
    if (mode_ == Mode::kUnivariate) {
      DOPolynomial p(*field_);
      if (has_quad) {
        for (int k = 0; k < quad_digits; ++k) {
          p.add_quad(pairs_[k].first, pairs_[k].second, digit(index, k));
        }
      }
      if (has_affine) {
        for (int i = 0; i < n_; ++i) p.add_lin(i, digit(index, quad_digits + i));
        p.set_constant(digit(index, quad_digits + n_));
      }
      return do_to_table(p);
    }
    for (std::uint32_t x = 0; x < points; ++x) {
      std::uint32_t y = 0;
      for (int k = 0; k < quad_digits; ++k) {
        const auto [i, j] = pairs_[k];
        if ((x >> i & 1) && (x >> j & 1)) y ^= digit(index, k);
      }
      if (has_affine) {
        for (int i = 0; i < n_; ++i) {
          if (x >> i & 1) y ^= digit(index, quad_digits + i);
        }
        y ^= digit(index, quad_digits + n_);
      }
      table[x] = y;
    }
  }
  if (mode_ == Mode::kUnivariate) {
    return VectorialFunction::univariate(*field_, std::move(table));
  }
  return VectorialFunction::multivariate(n_, std::move(table));
}

void enumerate_class(const FunctionSpace& space,
                     const std::function<void(const VectorialFunction&)>& fn) {
  const auto size = space.size();
  if (!size || *size > kMaxExhaustive) {
    throw SearchBoundsError("class too large to enumerate exhaustively");
  }
  for (std::uint64_t i = 0; i < *size; ++i) fn(space.at(i));
}

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SearchReport run_search(const SearchJob& job, std::ostream* stream) {
  const FunctionSpace space(job.mode, job.n, job.cls, job.field);
  const std::optional<std::uint64_t> size = space.size();
  std::uint64_t count;
  if (job.sample) {
    count = *job.sample;
  } else {
    if (!size || *size > kMaxExhaustive) {
      throw SearchBoundsError(
          "class " + std::string(class_name(job.cls)) + " at n = " +
          std::to_string(job.n) +
          " is too large for an exhaustive search; use a sampled job");
    }
    count = *size;
  }
  auto member = [&](std::uint64_t i) -> std::uint64_t {
    if (!job.sample) return i;
    const std::uint64_t r = splitmix64(job.seed, i);
    if (!size) return r;
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(r) * *size) >> 64);
  };

  const std::uint64_t shards = std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(job.shards, 1)), 1,
      std::max<std::uint64_t>(count, 1));
  std::vector<ShardResult> results(shards);
  auto work = [&](std::uint64_t s) {
    ShardResult& out = results[s];
    const std::uint64_t lo =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(count) * s) / shards);
    const std::uint64_t hi = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(count) * (s + 1)) / shards);
    try {
      for (std::uint64_t i = lo; i < hi; ++i) {
        const std::uint64_t idx = member(i);
        ++out.examined;
        if (passes(space.at(idx), job.filter)) out.passing.push_back(idx);
      }
    } catch (...) {
      out.error = std::current_exception();
    }
  };
  if (shards == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t s = 0; s < shards; ++s) pool.emplace_back(work, s);
  }

  SearchReport report;
  report.mode = job.mode;
  report.n = job.n;
  report.cls = job.cls;
  report.filter = job.filter;
  report.sample = job.sample;
  report.seed = job.seed;
  for (const ShardResult& r : results) {
    if (r.error) std::rethrow_exception(r.error);
  }
  for (const ShardResult& r : results) {
    report.examined += r.examined;
    report.passing += r.passing.size();
    for (std::uint64_t idx : r.passing) {
      if (report.passing_functions.size() >= kReportCap && !stream) break;
      const VectorialFunction f = space.at(idx);
      if (stream) *stream << function_to_json(f).dump() << '\n';
      if (report.passing_functions.size() < kReportCap) {
        report.passing_functions.push_back(f);
      }
    }
  }
  if (job.filter == Filter::kBoth) report.cross_check = true;
  return report;
}

}  // namespace mpf
