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

#ifndef MPF_SELFTEST_H_
#define MPF_SELFTEST_H_

#include <string>
#include <vector>

namespace mpf {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Quick cross-route consistency checks at n <= 4, all deterministic.
std::vector<SelftestCheck> run_selftest();

}  // namespace mpf

#endif  // MPF_SELFTEST_H_
