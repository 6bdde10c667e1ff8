#pragma once

// The `qalpha` command line: field, transform, sequence, graph and verify
// subcommands. Exit codes: 0 success, 1 verification failure, 2 usage or
// input error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qalpha/field.hpp"

namespace qalpha::cli {

enum class Format { Default, Text, Json, Dot, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
  std::string field = "s=3,mod=conway";
  std::string alpha = "root";
  std::vector<std::string> polys;
  Format format = Format::Default;
  std::uint64_t seed = 0;
  int target_degree = 0;  // 0: four times the seed degree
  std::string suite;
  std::string out;
};

struct CommandOutput {
  int exit_code = kExitOk;
  std::string text;
};

Format parse_format(std::string_view name);
/// "root" for the canonical root, "g^k", "g", or hex bits.
FieldElement parse_alpha(const FieldSpec& spec, std::string_view text);

CommandOutput cmd_field(const CliConfig& cfg);
CommandOutput cmd_transform(const CliConfig& cfg);
CommandOutput cmd_sequence(const CliConfig& cfg);
CommandOutput cmd_graph(const CliConfig& cfg);
CommandOutput cmd_verify(const CliConfig& cfg);

/// Full dispatch including argument parsing and error-to-exit-code mapping.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qalpha::cli
