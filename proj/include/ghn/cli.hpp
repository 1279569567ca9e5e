#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace ghn::cli {

enum class Command {
  Validate,
  Semistable,
  NuEval,
  LeadingHn,
  Ghn,
  SlopeCanonical,
  Degree,
  CentralCheck,
  OracleCompare,
};

enum class Format { Json, Text };

/// Which random family `--seed` draws from when no input is given.
enum class Generator { General, GlIdentity, Central };

struct RunConfig {
  Command command = Command::Validate;
  /// File path, "-" for stdin, or the name of an embedded fixture.
  std::string input = "-";
  Format format = Format::Json;
  std::optional<std::string> lambda;
  std::optional<std::int64_t> bound;
  std::optional<std::uint64_t> seed;
  Generator generator = Generator::General;
  std::uint64_t max_candidates = 20'000'000;
  unsigned threads = 1;
  bool color = false;
};

enum ExitCode : int {
  kOk = 0,
  kDomainFailure = 1,
  kParseError = 2,
  kInternalError = 3,
};

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);
std::optional<Generator> parse_generator(std::string_view name);

/// Executes one command. Results go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ghn::cli
