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

#include "mpf/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "mpf/errors.h"
#include "mpf/formats.h"
#include "mpf/planar.h"
#include "mpf/rds.h"
#include "mpf/selftest.h"
#include "mpf/transforms.h"

namespace mpf::cli {
namespace {

// Thrown while running a command; carries the exit code.
struct ExitError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError{kExitIo, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) { return parse_json(read_file(path)); }

void emit(const Command& cmd, const std::string& text, std::ostream& out) {
  if (cmd.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cmd.out, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) {
    throw ExitError{kExitIo, "cannot write " + cmd.out};
  }
}

std::string utc_now() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string dump(const Command& cmd, Json j) {
  if (cmd.timestamp) j["generated_at"] = utc_now();
  return j.dump(2) + "\n";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

VectorialFunction load_function(const Command& cmd) {
  if (!cmd.file.empty()) return function_from_json(read_json(cmd.file));
  std::optional<FieldSpec> field;
  if (cmd.n) field = make_field(*cmd.n, cmd.modulus);
  return do_to_table(do_from_json(read_json(cmd.do_file), field));
}

int analyze(const Command& cmd, std::ostream& out) {
  const VectorialFunction f = load_function(cmd);
  const PermVerdict perm = is_modified_planar_perm(f, cmd.shards);
  const ComponentsVerdict comp = is_modified_planar_components(f);
  const GroupSpec group = group_for(f);
  const auto graph = graph_of(f);
  const auto forbidden = forbidden_subgroup(group);
  const RdsReport brute = rds_verify_bruteforce(group, graph, forbidden);
  const CharacterVerdict chars = rds_verify_characters(group, graph, forbidden);
  const bool rds = brute.is_rds && brute.lambda == 1;

  if (perm.planar != comp.planar || perm.planar != rds ||
      rds != chars.is_rds) {
    throw ExitError{kExitInternal,
                    std::string("internal error: planarity verdicts disagree "
                                "(perm ") +
                        yes_no(perm.planar) + ", components " +
                        yes_no(comp.planar) + ", rds bruteforce " +
                        yes_no(rds) + ", rds characters " +
                        yes_no(chars.is_rds) + ")"};
  }

  if (cmd.format == OutputFormat::kJson) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["function"] = function_to_json(f);
    j["modified_planar"] = perm.planar;
    Json p;
    p["planar"] = perm.planar;
    if (perm.witness) {
      p["witness"] = Json{{"a", to_hex(perm.witness->a)},
                          {"x1", to_hex(perm.witness->x1)},
                          {"x2", to_hex(perm.witness->x2)}};
    } else {
      p["witness"] = nullptr;
    }
    j["perm"] = std::move(p);
    Json c;
    c["planar"] = comp.planar;
    if (comp.failing_twist) {
      c["witness"] = Json{{"c", to_hex(*comp.failing_twist)},
                          {"u", to_hex(*comp.failing_u)}};
    } else {
      c["witness"] = nullptr;
    }
    j["components"] = std::move(c);
    j["rds"] = rds_report_to_json(group, brute, chars);
    emit(cmd, dump(cmd, std::move(j)), out);
  } else {
    std::ostringstream os;
    os << "mode: " << mode_name(f.mode) << "\n";
    os << "n: " << f.n << "\n";
    if (f.field) os << "field: " << field_to_json(*f.field).dump() << "\n";
    os << "modified planar: " << yes_no(perm.planar) << " (perm), "
       << yes_no(comp.planar) << " (components), "
       << (rds ? "RDS verified" : "RDS rejected") << "\n";
    if (perm.witness) {
      os << "perm witness: a=" << to_hex(perm.witness->a)
         << " x1=" << to_hex(perm.witness->x1)
         << " x2=" << to_hex(perm.witness->x2) << "\n";
    }
    if (comp.failing_twist) {
      os << "components witness: c=" << to_hex(*comp.failing_twist)
         << " u=" << to_hex(*comp.failing_u) << "\n";
    }
    if (brute.failing_element) {
      os << "rds witness: (" << to_hex(brute.failing_element->x) << ", "
         << to_hex(brute.failing_element->y) << ") represented "
         << brute.failing_count << " times\n";
    }
    if (cmd.timestamp) os << "generated_at: " << utc_now() << "\n";
    emit(cmd, os.str(), out);
  }
  return perm.planar ? kExitOk : kExitVerdictFalse;
}

int spectrum(const Command& cmd, std::ostream& out) {
  const TruthTableFile in = truth_table_from_json(read_json(cmd.file));
  if (cmd.c >= in.table.size()) {
    throw ExitError{kExitUsage, "--c lies outside the 2^n points"};
  }
  const Spectrum s = transform(in.table, cmd.c, in.field);
  if (cmd.format == OutputFormat::kJson) {
    emit(cmd, dump(cmd, spectrum_to_json(s)), out);
  } else {
    emit(cmd, spectrum_to_csv(s), out);
  }
  return kExitOk;
}

int verify_rds(const Command& cmd, std::ostream& out) {
  const RdsInput in = rds_input_from_json(read_json(cmd.file));
  const RdsReport brute = rds_verify_bruteforce(in.group, in.elements, in.forbidden);
  std::optional<CharacterVerdict> chars;
  const std::size_t k = std::size_t{1} << in.group.n;
  if (in.group.law != GroupLaw::kZ4n && in.elements.size() == k &&
      in.forbidden.size() == k) {
    chars = rds_verify_characters(in.group, in.elements, in.forbidden);
    if (chars->is_rds != (brute.is_rds && brute.lambda == 1)) {
      throw ExitError{kExitInternal,
                      "internal error: RDS verifiers disagree"};
    }
  }
  if (cmd.format == OutputFormat::kText) {
    std::ostringstream os;
    os << "parameters: (" << brute.mu << ", " << brute.nu << ", " << brute.k
       << ", " << brute.lambda << ")\n";
    os << "bruteforce: " << (brute.is_rds ? "RDS" : "not an RDS") << "\n";
    if (chars) {
      os << "characters: " << (chars->is_rds ? "RDS" : "not an RDS") << "\n";
    }
    if (brute.failing_element) {
      os << "witness: (" << to_hex(brute.failing_element->x) << ", "
         << to_hex(brute.failing_element->y) << ") represented "
         << brute.failing_count << " times\n";
    }
    if (cmd.timestamp) os << "generated_at: " << utc_now() << "\n";
    emit(cmd, os.str(), out);
  } else {
    emit(cmd, dump(cmd, rds_report_to_json(in.group, brute, chars)), out);
  }
  return brute.is_rds ? kExitOk : kExitVerdictFalse;
}

int search(const Command& cmd, std::ostream& out) {
  SearchJob job;
  job.mode = cmd.mode;
  job.n = cmd.n.value_or(0);
  job.cls = cmd.cls;
  job.filter = cmd.filter;
  job.shards = cmd.shards;
  job.seed = cmd.seed;
  job.sample = cmd.sample;
  if (cmd.mode == Mode::kUnivariate && cmd.modulus) {
    job.field = make_field(job.n, cmd.modulus);
  }
  std::ofstream stream_file;
  if (!cmd.stream.empty()) {
    stream_file.open(cmd.stream, std::ios::binary);
    if (!stream_file) throw ExitError{kExitIo, "cannot write " + cmd.stream};
  }
  SearchReport report;
  try {
    report = run_search(job, cmd.stream.empty() ? nullptr : &stream_file);
  } catch (const DefinitionMismatchError& e) {
    throw ExitError{kExitInternal, std::string("internal error: ") + e.what()};
  }
  if (!cmd.stream.empty() && !stream_file.flush()) {
    throw ExitError{kExitIo, "cannot write " + cmd.stream};
  }
  emit(cmd, dump(cmd, search_report_to_json(report)), out);
  return kExitOk;
}

int selftest(const Command& cmd, std::ostream& out) {
  const auto checks = run_selftest();
  std::ostringstream os;
  std::size_t passed = 0;
  for (const SelftestCheck& c : checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.passed) os << ": " << c.detail;
    os << "\n";
    passed += c.passed;
  }
  os << "selftest: " << passed << "/" << checks.size() << " checks passed\n";
  emit(cmd, os.str(), out);
  return passed == checks.size() ? kExitOk : kExitInternal;
}

std::uint32_t hex_option(const std::string& s, const char* flag) {
  try {
    const std::uint64_t v = parse_hex(s);
    if (v > 0xFFFFFFFFULL) throw FormatError("too large");
    return static_cast<std::uint32_t>(v);
  } catch (const FormatError&) {
    throw CLI::ValidationError(flag, "expects a hex value such as 0x1");
  }
}

}  // namespace

ParseResult parse_command(const std::vector<std::string>& args) {
  CLI::App app{"Modified planar functions and their bent4 components"};
  app.name("mpf");
  app.require_subcommand(1);

  int default_shards = 1;
  if (const char* env = std::getenv("MPF_DEFAULT_SHARDS")) {
    try {
      std::size_t used = 0;
      default_shards = std::stoi(env, &used);
      if (used != std::string(env).size() || default_shards < 1) throw 0;
    } catch (...) {
      return {std::nullopt, kExitUsage,
              "MPF_DEFAULT_SHARDS must be a positive integer"};
    }
  }

  Command cmd;
  cmd.shards = default_shards;
  std::string c_hex;
  std::string modulus_hex;
  std::string format;
  std::string mode;
  std::string cls;
  std::string filter = "both";
  std::uint64_t sample = 0;
  int n = 0;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", cmd.out, "Output path (default stdout)");
    sub->add_flag("--timestamp", cmd.timestamp, "Stamp the output with UTC time");
  };

  CLI::App* analyze =
      app.add_subcommand("analyze", "Run every planarity and RDS test on a function");
  auto* file_opt = analyze->add_option("--file", cmd.file, "Function JSON");
  auto* do_opt = analyze->add_option("--do", cmd.do_file, "Dembowski-Ostrom polynomial JSON");
  file_opt->excludes(do_opt);
  analyze->add_option("--n", n, "Field degree for a polynomial without a field")
      ->check(CLI::Range(1, kMaxDegree));
  analyze->add_option("--modulus", modulus_hex, "Field modulus (hex)");
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--shards", cmd.shards, "Worker threads")->check(CLI::PositiveNumber);
  add_output(analyze);

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Dump the c-twisted spectrum of a Boolean function");
  spectrum->add_option("--file", cmd.file, "Truth table JSON")->required();
  spectrum->add_option("--c", c_hex, "Twist (hex)");
  spectrum->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  add_output(spectrum);

  CLI::App* verify =
      app.add_subcommand("verify-rds", "Check a relative difference set");
  verify->add_option("--file", cmd.file, "RDS input JSON")->required();
  verify->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  add_output(verify);

  CLI::App* search =
      app.add_subcommand("search", "Enumerate a class of functions, keep the planar ones");
  search->add_option("--mode", mode, "mv or uv")
      ->required()
      ->check(CLI::IsMember({"mv", "uv"}));
  search->add_option("--n", n, "Dimension")->required()->check(CLI::Range(1, kMaxDegree));
  search->add_option("--class", cls, "all, affine, do_quadratic or do_plus_affine")
      ->required()
      ->check(CLI::IsMember({"all", "affine", "do_quadratic", "do_plus_affine"}));
  search->add_option("--filter", filter, "perm, components or both")
      ->check(CLI::IsMember({"perm", "components", "both"}));
  search->add_option("--shards", cmd.shards, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--seed", cmd.seed, "Seed for sampled jobs");
  auto* sample_opt = search->add_option("--sample", sample, "Draw this many members");
  search->add_option("--modulus", modulus_hex, "Field modulus (hex, uv only)");
  search->add_option("--stream", cmd.stream, "Write every passing function here");
  search->add_option("--format", format, "json")->check(CLI::IsMember({"json"}));
  add_output(search);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in consistency checks");
  add_output(selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (analyze->parsed()) {
      cmd.verb = Verb::kAnalyze;
      if (cmd.file.empty() && cmd.do_file.empty()) {
        throw CLI::ValidationError("analyze", "needs --file or --do");
      }
      if (!cmd.file.empty() && (n != 0 || !modulus_hex.empty())) {
        throw CLI::ValidationError("analyze",
                                   "--n/--modulus only apply with --do");
      }
      if (!modulus_hex.empty() && n == 0) {
        throw CLI::ValidationError("analyze", "--modulus needs --n");
      }
      cmd.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
    } else if (spectrum->parsed()) {
      cmd.verb = Verb::kSpectrum;
      cmd.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
      if (!c_hex.empty()) cmd.c = hex_option(c_hex, "--c");
    } else if (verify->parsed()) {
      cmd.verb = Verb::kVerifyRds;
      cmd.format = format == "text" ? OutputFormat::kText : OutputFormat::kJson;
    } else if (search->parsed()) {
      cmd.verb = Verb::kSearch;
      cmd.format = OutputFormat::kJson;
      cmd.mode = mode == "mv" ? Mode::kMultivariate : Mode::kUnivariate;
      cmd.cls = *parse_class(cls);
      cmd.filter = *parse_filter(filter);
      if (sample_opt->count() > 0) cmd.sample = sample;
      if (!modulus_hex.empty() && cmd.mode == Mode::kMultivariate) {
        throw CLI::ValidationError("search", "--modulus only applies to uv");
      }
    } else {
      cmd.verb = Verb::kSelftest;
    }
    if (n != 0) cmd.n = n;
    if (!modulus_hex.empty()) cmd.modulus = hex_option(modulus_hex, "--modulus");
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitUsage, out.str() + err.str()};
  }
  return {cmd, kExitOk, ""};
}

int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.verb) {
      case Verb::kAnalyze: return analyze(cmd, out);
      case Verb::kSpectrum: return spectrum(cmd, out);
      case Verb::kVerifyRds: return verify_rds(cmd, out);
      case Verb::kSearch: return search(cmd, out);
      case Verb::kSelftest: return selftest(cmd, out);
    }
  } catch (const ExitError& e) {
    err << "mpf: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    // Malformed or out-of-bounds input.
    err << "mpf: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  const ParseResult parsed = parse_command(args);
  if (!parsed.command) {
    (parsed.exit_code == kExitOk ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  return run_command(*parsed.command, out, err);
}

}  // namespace mpf::cli
