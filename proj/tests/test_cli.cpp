#include <doctest.h>

#include <sstream>

#include "ghn/cli.hpp"
#include "ghn/json_io.hpp"
#include "support.hpp"

using namespace ghn;
using namespace ghn::cli;
using io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(RunConfig config, const std::string& stdin_text = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run(config, in, out, err);
  return {code, out.str(), err.str()};
}

RunConfig cfg(Command c, std::string input) {
  RunConfig r;
  r.command = c;
  r.input = std::move(input);
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("command names") {
  CHECK(parse_command("leading-hn") == Command::LeadingHn);
  CHECK(parse_command("oracle-compare") == Command::OracleCompare);
  CHECK_FALSE(parse_command("bogus"));
  CHECK(command_name(Command::SlopeCanonical) == "slope-canonical");
}

TEST_CASE("ghn on the SO(7) preset") {
  auto r = run_cli(cfg(Command::Ghn, "so7_p3.json"));
  REQUIRE(r.code == kOk);
  json j = json::parse(r.out);
  CHECK(j["q"] == 2);
  CHECK(j["scope"] == "toral");
  CHECK(j["steps"][0]["lambda"] == json::array({1, 0, 0}));
  CHECK(j["steps"][1]["lambda"] == json::array({0, 2, 1}));
  auto lex = io::lex_from_json(j);
  CHECK(lex.jumping_points.size() == 7);
}

TEST_CASE("semistable") {
  auto r = run_cli(cfg(Command::Semistable, "so7_p3_paper"));
  CHECK(r.code == kOk);
  json j = json::parse(r.out);
  CHECK(j["semistable"] == false);
  CHECK(j["scope"] == "toral");

  json trivial = io::to_json(test::gl_identity(projective_space(2),
                                               {binomial_poly(2, 0), binomial_poly(2, 0)}));
  auto t = run_cli(cfg(Command::Semistable, "-"), trivial.dump());
  CHECK(t.code == kOk);
  CHECK(json::parse(t.out)["semistable"] == true);
}

TEST_CASE("nu-eval") {
  auto c = cfg(Command::NuEval, "so7_p3_paper.json");
  c.lambda = "[1,0,0]";
  auto r = run_cli(c);
  REQUIRE(r.code == kOk);
  json j = json::parse(r.out);
  CHECK(j["nu"]["L"] == json::array({"1", "8/3"}));
  CHECK(j["nu"]["Q"] == "2");
  CHECK(j["sign"] == 1);

  c.lambda = "[1,0]";
  CHECK(run_cli(c).code == kParseError);
  c.lambda = "nonsense";
  CHECK(run_cli(c).code == kParseError);
  c.lambda.reset();
  CHECK(run_cli(c).code == kParseError);
}

TEST_CASE("leading-hn, slope-canonical, degree, central-check") {
  json lead = json::parse(run_cli(cfg(Command::LeadingHn, "so7_p3_corrected.json")).out);
  CHECK(lead["lambda"] == json::array({1, 0, 0}));
  CHECK(lead["leading_degree"] == 1);

  json slope = json::parse(run_cli(cfg(Command::SlopeCanonical, "so7_p3_corrected.json")).out);
  CHECK(slope["lambda"].is_null());
  CHECK(slope["slope_semistable"] == true);

  auto nc = run_cli(cfg(Command::SlopeCanonical, "glxgl_noncentral.json"));
  CHECK(nc.code == kDomainFailure);
  CHECK(nc.err.find("NotCentral") != std::string::npos);

  json deg = json::parse(run_cli(cfg(Command::Degree, "glxgl_noncentral.json")).out);
  CHECK(deg["degree"] == json::array({"3", "1"}));

  json central = json::parse(run_cli(cfg(Command::CentralCheck, "glxgl_noncentral.json")).out);
  CHECK(central["central"] == false);
}

TEST_CASE("oracle-compare") {
  auto c = cfg(Command::OracleCompare, "glxgl_noncentral.json");
  CHECK(run_cli(c).code == kParseError);  // --bound is required
  c.bound = 3;
  auto r = run_cli(c);
  CHECK(r.code == kOk);
  CHECK(json::parse(r.out)["agree"] == true);

  RunConfig random;
  random.command = Command::OracleCompare;
  random.bound = 3;
  random.seed = 99;
  auto rr = run_cli(random);
  CHECK(rr.code == kOk);
  CHECK(json::parse(rr.out)["agree"] == true);
}

TEST_CASE("validate exit codes") {
  CHECK(run_cli(cfg(Command::Validate, "so7_p3_corrected.json")).code == kOk);
  auto bad = io::to_json(test::load_fixture("so7_p3_corrected.json"));
  bad["summands"][0]["hp"] = json::array({"0", "1"});
  auto r = run_cli(cfg(Command::Ghn, "-"), bad.dump());
  CHECK(r.code == kDomainFailure);
  CHECK(json::parse(r.out)["ok"] == false);
  CHECK(run_cli(cfg(Command::Ghn, "-"), "{not json").code == kParseError);
  CHECK(run_cli(cfg(Command::Ghn, "/no/such/file.json")).code == kParseError);
}

TEST_CASE("output is deterministic") {
  RunConfig c;
  c.command = Command::Ghn;
  c.seed = 1234;
  auto a = run_cli(c), b = run_cli(c);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}

TEST_CASE("text format") {
  auto c = cfg(Command::Semistable, "so7_p3_paper.json");
  c.format = Format::Text;
  auto plain = run_cli(c);
  CHECK(plain.out.find("semistable: false") != std::string::npos);
  c.color = true;
  auto colored = run_cli(c);
  CHECK(colored.out.find("\033[31mfalse") != std::string::npos);
}

}  // TEST_SUITE
