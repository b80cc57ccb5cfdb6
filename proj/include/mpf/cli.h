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

#ifndef MPF_CLI_H_
#define MPF_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mpf/mode.h"
#include "mpf/search.h"

namespace mpf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFalse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
// Two routes that must agree did not.
inline constexpr int kExitInternal = 4;

enum class Verb { kAnalyze, kSpectrum, kVerifyRds, kSearch, kSelftest };
enum class OutputFormat { kJson, kCsv, kText };

struct Command {
  Verb verb = Verb::kSelftest;
  std::string file;
  std::string do_file;
  std::optional<int> n;
  std::optional<std::uint32_t> modulus;
  std::uint32_t c = 0;
  std::string out;
  OutputFormat format = OutputFormat::kText;
  int shards = 1;
  Mode mode = Mode::kUnivariate;
  FunctionClass cls = FunctionClass::kAll;
  Filter filter = Filter::kBoth;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> sample;
  std::string stream;
  bool timestamp = false;
};

struct ParseResult {
  std::optional<Command> command;
  // Meaningful when command is empty: 0 after --help, else kExitUsage.
  int exit_code = kExitOk;
  std::string message;
};

// args excludes the program name. The default shard count comes from
// MPF_DEFAULT_SHARDS when set.
ParseResult parse_command(const std::vector<std::string>& args);

int run_command(const Command& cmd, std::ostream& out, std::ostream& err);

// parse_command followed by run_command.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mpf::cli

#endif  // MPF_CLI_H_
