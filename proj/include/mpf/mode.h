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

#ifndef MPF_MODE_H_
#define MPF_MODE_H_

#include <string_view>

namespace mpf {

// Multivariate objects live on F_2^n with the coordinate-product twist;
// univariate ones on F_{2^n} with the field-product twist.
enum class Mode { kMultivariate, kUnivariate };

constexpr std::string_view mode_name(Mode m) {
  return m == Mode::kMultivariate ? "mv" : "uv";
}

}  // namespace mpf

#endif  // MPF_MODE_H_
