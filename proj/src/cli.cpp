#include "ghn/cli.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "ghn/error.hpp"
#include "ghn/filtration.hpp"
#include "ghn/fixtures.hpp"
#include "ghn/generators.hpp"
#include "ghn/json_io.hpp"

namespace ghn::cli {

namespace {

using io::json;

constexpr std::array<std::pair<std::string_view, Command>, 9> kCommands = {{
    {"validate", Command::Validate},
    {"semistable", Command::Semistable},
    {"nu-eval", Command::NuEval},
    {"leading-hn", Command::LeadingHn},
    {"ghn", Command::Ghn},
    {"slope-canonical", Command::SlopeCanonical},
    {"degree", Command::Degree},
    {"central-check", Command::CentralCheck},
    {"oracle-compare", Command::OracleCompare},
}};

constexpr std::string_view kScope = "toral";

std::optional<std::string> read_fixture(std::string name) {
  if (name == "so7_p3" || name == "so7_p3.json") name = "so7_p3_paper.json";
  if (auto text = fixture(name)) return std::string(*text);
  if (auto text = fixture(name + ".json")) return std::string(*text);
  return std::nullopt;
}

CombinatorialRhoSheaf load(const RunConfig& config, std::istream& in) {
  if (config.seed && config.input == "-") {
    std::mt19937_64 rng(*config.seed);
    switch (config.generator) {
      case Generator::GlIdentity: return gen::gl_identity_instance(rng);
      case Generator::Central: return gen::central_slope_unstable_instance(rng);
      case Generator::General: return gen::random_instance(rng);
    }
  }
  std::string text;
  if (config.input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (std::filesystem::is_regular_file(config.input)) {
    std::ifstream file(config.input, std::ios::binary);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  } else if (auto preset = read_fixture(config.input)) {
    text = std::move(*preset);
  } else {
    throw Error(Errc::ParseError, "cannot open input '" + config.input + "'");
  }
  return io::parse_sheaf(text);
}

json lambda_or_null(const std::optional<Cocharacter>& c) {
  return c ? io::to_json(*c) : json(nullptr);
}

bool in_box(const Cocharacter& c, std::int64_t bound) {
  for (auto x : c.coords) {
    if (x > bound || x < -bound) return false;
  }
  return true;
}

BruteForceOptions oracle_options(const RunConfig& config) {
  BruteForceOptions opt;
  opt.bound = *config.bound;
  opt.max_candidates = config.max_candidates;
  opt.threads = config.threads;
  return opt;
}

json execute(const RunConfig& config, const CombinatorialRhoSheaf& sheaf, int& status) {
  switch (config.command) {
    case Command::Validate:
      break;
    case Command::Semistable: {
      json out{{"semistable", is_semistable(sheaf)}, {"scope", kScope}};
      if (auto lead = leading_cochar(sheaf)) {
        out["lambda"] = io::to_json(lead->lambda);
        out["leading_degree"] = lead->leading_degree;
      }
      return out;
    }
    case Command::NuEval: {
      if (!config.lambda) throw Error(Errc::ParseError, "nu-eval needs --lambda");
      json j;
      try {
        j = json::parse(*config.lambda);
      } catch (const json::exception&) {
        throw Error(Errc::ParseError, "--lambda must be a JSON array of integers");
      }
      Cocharacter lambda = io::cocharacter_from_json(j);
      if (lambda.coords.size() != sheaf.datum.torus_rank) {
        throw Error(Errc::ParseError, "--lambda has length " + std::to_string(lambda.coords.size()) +
                                          ", torus rank is " +
                                          std::to_string(sheaf.datum.torus_rank));
      }
      NuValue v = nu(sheaf, lambda);
      return {{"lambda", io::to_json(lambda)}, {"nu", io::to_json(v)}, {"sign", v.sign()}};
    }
    case Command::LeadingHn: {
      auto lead = leading_cochar(sheaf);
      if (!lead) return {{"semistable", true}, {"lambda", nullptr}, {"scope", kScope}};
      return {{"semistable", false},
              {"lambda", io::to_json(lead->lambda)},
              {"leading_degree", lead->leading_degree},
              {"nu", io::to_json(lead->value)},
              {"scope", kScope}};
    }
    case Command::Ghn: {
      json out = io::to_json(ghn_filtration(sheaf));
      out["scope"] = kScope;
      return out;
    }
    case Command::SlopeCanonical: {
      auto ray = slope_canonical(sheaf);
      return {{"slope_semistable", !ray.has_value()}, {"lambda", lambda_or_null(ray)}};
    }
    case Command::Degree: {
      return {{"c", io::to_json(Vec(c_values(sheaf)))},
              {"psi", io::to_json(psi_functional(sheaf))},
              {"degree", io::to_json(Vec(degree(sheaf)))}};
    }
    case Command::CentralCheck:
      return {{"central", is_central(sheaf.datum, sheaf.rep)}};
    case Command::OracleCompare: {
      if (!config.bound) throw Error(Errc::ParseError, "oracle-compare needs --bound");
      auto lead = leading_cochar(sheaf);
      auto best = brute_force_max(sheaf, oracle_options(config));
      bool agree = false;
      bool in_range = lead && in_box(lead->lambda, *config.bound);
      if (!lead) {
        agree = !best;
      } else if (in_range) {
        agree = best && primitive_scale(best->lambda.as_rational()) == lead->lambda &&
                compare_nu(best->value, lead->value) == 0;
      } else {
        // The maximizer lies outside the box; nothing inside may beat it.
        agree = !best || compare_nu(best->value, lead->value) < 0;
      }
      if (!agree) status = kDomainFailure;
      return {{"agree", agree},
              {"bound", *config.bound},
              {"in_range", in_range},
              {"leading", lead ? io::to_json(lead->lambda) : json(nullptr)},
              {"oracle", best ? io::to_json(best->lambda) : json(nullptr)}};
    }
  }
  return json::object();
}

void render_text(const json& j, const std::string& indent, bool color, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    out << indent << key << ":";
    if (value.is_object()) {
      out << '\n';
      render_text(value, indent + "  ", color, out);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << '\n';
      for (const auto& item : value) {
        out << indent << "  -\n";
        render_text(item, indent + "    ", color, out);
      }
    } else if (value.is_boolean() && color) {
      out << ' ' << (value.get<bool>() ? "\033[32mtrue\033[0m" : "\033[31mfalse\033[0m") << '\n';
    } else if (value.is_string()) {
      out << ' ' << value.get<std::string>() << '\n';
    } else {
      out << ' ' << value.dump() << '\n';
    }
  }
}

void emit(const RunConfig& config, const json& j, std::ostream& out) {
  if (config.format == Format::Json) {
    out << j.dump(2) << '\n';
  } else {
    render_text(j, "", config.color, out);
  }
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::UnsupportedType:
    case Errc::InvalidInput:
      return kParseError;
    case Errc::InternalNonRefinement:
      return kInternalError;
    default:
      return kDomainFailure;
  }
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [key, command] : kCommands) {
    if (key == name) return command;
  }
  return std::nullopt;
}

std::string_view command_name(Command command) {
  for (const auto& [key, c] : kCommands) {
    if (c == command) return key;
  }
  return "?";
}

std::optional<Generator> parse_generator(std::string_view name) {
  if (name == "general") return Generator::General;
  if (name == "gl-identity") return Generator::GlIdentity;
  if (name == "central") return Generator::Central;
  return std::nullopt;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == Command::OracleCompare && !config.bound) {
      throw Error(Errc::ParseError, "oracle-compare needs --bound");
    }
    CombinatorialRhoSheaf sheaf = load(config, in);
    ValidationReport report = validate(sheaf);
    if (config.command == Command::Validate || !report.ok()) {
      emit(config, io::to_json(report), out);
      return report.ok() ? kOk : kDomainFailure;
    }
    int status = kOk;
    json result = execute(config, sheaf, status);
    emit(config, result, out);
    return status;
  } catch (const Error& e) {
    err << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace ghn::cli
