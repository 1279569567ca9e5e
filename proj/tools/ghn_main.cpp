#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ghn/cli.hpp"

int main(int argc, char** argv) {
  using namespace ghn::cli;
  CLI::App app{"Gieseker semistability and GHN filtrations of torus-diagonalized rho-sheaves"};

  std::string command;
  std::string format = "json";
  std::string generator = "general";
  RunConfig config;
  app.add_option("command", command,
                 "validate | semistable | nu-eval | leading-hn | ghn | slope-canonical | "
                 "degree | central-check | oracle-compare")
      ->required();
  app.add_option("--input,-i", config.input, "sheaf JSON file, '-' for stdin, or a fixture name");
  app.add_option("--preset", config.input, "embedded fixture name");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--lambda", config.lambda, "cocharacter for nu-eval, e.g. \"[1,0,0]\"");
  app.add_option("--bound", config.bound, "oracle box half-width");
  app.add_option("--seed", config.seed, "generate a random sheaf instead of reading input");
  app.add_option("--generator", generator, "general, gl-identity or central (with --seed)")
      ->check(CLI::IsMember({"general", "gl-identity", "central"}));
  app.add_option("--max-candidates", config.max_candidates, "oracle enumeration cap");
  app.add_option("--threads", config.threads, "oracle worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }
  auto parsed = parse_command(command);
  if (!parsed) {
    std::cerr << "unknown command '" << command << "'\n";
    return kParseError;
  }
  config.command = *parsed;
  config.format = format == "text" ? Format::Text : Format::Json;
  config.generator = *parse_generator(generator);
  const char* color = std::getenv("GHN_COLOR");
  config.color = color != nullptr && std::string(color) == "1";
  return run(config, std::cin, std::cout, std::cerr);
}
