// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ghn/cli.hpp"
#include "ghn/filtration.hpp"
#include "ghn/fixtures.hpp"
#include "ghn/generators.hpp"
#include "ghn/json_io.hpp"

using namespace ghn;
using io::json;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

json run_json(cli::Command command, const std::string& input, Outcome& o,
              std::optional<std::int64_t> bound = std::nullopt) {
  cli::RunConfig config;
  config.command = command;
  config.input = input;
  config.bound = bound;
  std::istringstream in;
  std::ostringstream out, err;
  int code = cli::run(config, in, out, err);
  o.require(code == cli::kOk, std::string(cli::command_name(command)) + " exited with " +
                                  std::to_string(code) + ": " + err.str());
  if (code != cli::kOk) return json();
  return json::parse(out.str());
}

CombinatorialRhoSheaf load(const char* name) { return io::parse_sheaf(*fixture(name)); }

// Every GHN run: strict refinement, step bound, semistable final blocks with
// no positive nu in the bound-3 box.
void check_run(const CombinatorialRhoSheaf& s, const LexFiltration& lex, Outcome& o) {
  o.require(lex.q() <= s.size() - s.blocks.size() + 1, "too many steps");
  for (const auto& step : lex.steps) {
    o.require(step.blocks_after.size() > step.blocks_before.size(), "step did not refine");
  }
  auto last = final_graded(s, lex);
  o.require(is_semistable(last), "final blocks are not semistable");
  o.require(!brute_force_max(last, {.bound = 3}).has_value(), "oracle destabilizes final blocks");
}

std::size_t g_runs = 0;
Outcome g_termination;

LexFiltration tracked_ghn(const CombinatorialRhoSheaf& s) {
  LexFiltration lex = ghn_filtration(s);
  check_run(s, lex, g_termination);
  ++g_runs;
  return lex;
}

Outcome golden_so7() {
  Outcome o;
  const std::vector<std::pair<std::string, IntVec>> expected{
      {"I_L", {-1, 0}}, {"I_Z", {0, -2}}, {"I_p", {0, -1}}, {"O", {0, 0}},
      {"O", {0, 1}},    {"O", {0, 2}},    {"O", {1, 0}}};
  for (const char* name : {"so7_p3_paper.json", "so7_p3_corrected.json"}) {
    std::string tag = std::string(name) + ": ";
    json lead = run_json(cli::Command::LeadingHn, name, o);
    o.require(lead.value("lambda", json()) == json::array({1, 0, 0}), tag + "leading ray");
    o.require(lead.value("leading_degree", -1) == 1, tag + "leading degree");

    json g = run_json(cli::Command::Ghn, name, o);
    o.require(g.value("q", 0) == 2, tag + "q");
    if (g.value("q", 0) == 2) {
      o.require(g["steps"][1]["lambda"] == json::array({0, 2, 1}), tag + "second ray");
      auto sheaf = load(name);
      auto lex = io::lex_from_json(g);
      std::vector<std::pair<std::string, IntVec>> got;
      for (const auto& jp : lex.jumping_points)
        for (auto i : jp.summands) got.push_back({sheaf.summands[i].label, jp.weight});
      std::sort(got.begin(), got.end());
      o.require(got == expected, tag + "jumping structure");
      tracked_ghn(sheaf);
    }
    json ss = run_json(cli::Command::Semistable, name, o);
    o.require(ss.value("semistable", true) == false, tag + "semistable verdict");
  }
  json slope = run_json(cli::Command::SlopeCanonical, "so7_p3_corrected.json", o);
  o.require(slope.value("lambda", json(1)).is_null(), "slope-canonical should be none");
  return o;
}

Outcome noncentral() {
  Outcome o;
  const char* name = "glxgl_noncentral.json";
  auto s = load(name);
  o.require(s.summands[0].rank == 1 && s.rep.dim(0) == 4, "fixture shape");
  o.require(degree(s) == std::vector<Rational>{3, 1}, "degrees 3 and 1");
  json central = run_json(cli::Command::CentralCheck, name, o);
  o.require(central.value("central", true) == false, "central-check should be false");
  json ss = run_json(cli::Command::Semistable, name, o);
  o.require(ss.value("semistable", true) == false, "semistable should be false");
  auto best = brute_force_max(s, {.bound = 3});
  o.require(best.has_value() && best->value.sign() > 0, "oracle found no destabilizing lambda");
  json cmp = run_json(cli::Command::OracleCompare, name, o, 3);
  o.require(cmp.value("agree", false), "oracle-compare disagrees");
  tracked_ghn(s);
  return o;
}

Outcome classical() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 3);
  std::size_t unstable = 0;
  for (int i = 0; i < 200; ++i) {
    auto s = gen::gl_identity_instance(rng);
    auto lex = tracked_ghn(s);
    unstable += lex.q() > 0;
    o.require(unweighted_chain(lex) == classical_hn_oracle(s), "instance " + std::to_string(i));
  }
  o.detail = o.ok ? std::to_string(unstable) + "/200 unstable" : o.detail;
  return o;
}

bool in_box(const Cocharacter& c, std::int64_t b) {
  return std::all_of(c.coords.begin(), c.coords.end(), [&](auto x) { return x <= b && x >= -b; });
}

Outcome analytic_vs_brute() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 4);
  int compared = 0, semistable = 0, outside = 0;
  for (int i = 0; i < 100; ++i) {
    auto s = gen::random_instance(rng);
    tracked_ghn(s);
    auto lead = leading_cochar(s);
    auto best = brute_force_max(s, {.bound = 4, .threads = 4});
    if (!lead) {
      ++semistable;
      o.require(!best, "oracle destabilizes a semistable instance " + std::to_string(i));
      continue;
    }
    if (!in_box(lead->lambda, 4)) {
      ++outside;
      o.require(!best || compare_nu(best->value, lead->value) < 0,
                "oracle beats the analytic maximizer on instance " + std::to_string(i));
      continue;
    }
    ++compared;
    o.require(best && best->lambda == lead->lambda &&
                  compare_nu(best->value, lead->value) == std::strong_ordering::equal,
              "mismatch on instance " + std::to_string(i));
  }
  if (o.ok) {
    o.detail = std::to_string(compared) + " compared in-box, " + std::to_string(outside) +
               " outside the box, " + std::to_string(semistable) + " semistable";
  }
  o.require(compared > 0, "no instance was comparable");
  return o;
}

Outcome slope_comparison() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 5);
  for (int i = 0; i < 50; ++i) {
    auto s = gen::central_slope_unstable_instance(rng);
    auto ells = ell_functionals(s);
    o.require(!is_zero(ells.front().covector), "generator gave ell_{d-1} = 0");
    auto lead = leading_cochar(s);
    auto ray = slope_canonical(s);
    tracked_ghn(s);
    if (!lead || !ray) {
      o.require(false, "missing ray on instance " + std::to_string(i));
      continue;
    }
    // Filtration degree is -<lambda, chi>, so the slope direction appears negated.
    Cocharacter flipped = *ray;
    for (auto& x : flipped.coords) x = -x;
    o.require(lead->leading_degree == s.variety.dim - 1, "leading degree below d-1");
    o.require(lead->lambda == flipped, "rays differ on instance " + std::to_string(i));
  }
  return o;
}

const std::vector<std::string> kBuiltins = {
    "gl(1)", "gl(3)", "sl(2)", "sl(4)", "so(2)", "so(3)", "so(4)", "so(5)", "so(7)", "so(8)",
    "sp(2)", "sp(4)", "sp(6)", "gl(2)xgl(2)", "so(5)xsl(3)", "sp(4)xgl(1)xso(4)"};

Outcome invariants() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 6);
  std::uniform_int_distribution<int> small(-5, 5), den(1, 3);
  auto rvec = [&](std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = ratio(small(rng), den(rng));
    return v;
  };
  auto rint = [&](std::size_t n) {
    IntVec v(n);
    for (auto& x : v) x = small(rng);
    return v;
  };

  std::vector<CombinatorialRhoSheaf> corpus{load("so7_p3_paper.json"), load("glxgl_noncentral.json")};
  for (int i = 0; i < 20; ++i) corpus.push_back(gen::random_instance(rng));
  std::size_t reconstructions = 0;
  for (const auto& s : corpus) {
    NuEvaluator eval(s);
    auto ells = ell_functionals(s);
    for (int t = 0; t < 50; ++t) {
      IntVec lambda = rint(s.datum.torus_rank);
      NuValue v = eval(lambda);
      for (int k = 1; k <= 5; ++k) {
        IntVec kl = lambda;
        for (auto& x : kl) x *= k;
        o.require(compare_nu(eval(kl), v) == std::strong_ordering::equal, "scale invariance");
      }
      IntVec neg = lambda;
      for (auto& x : neg) x = -x;
      NuValue w = eval(neg);
      o.require(w.L == -v.L && w.Q == v.Q, "antisymmetry");
      RationalPoly rebuilt;
      for (const auto& e : ells)
        rebuilt += RationalPoly::monomial(dot(e.covector, lambda), static_cast<unsigned>(e.degree));
      o.require(rebuilt == v.L, "ell reconstruction");
      ++reconstructions;
    }
  }
  o.require(reconstructions >= 1000, "fewer than 1000 reconstructions");

  for (const auto& spec : kBuiltins) {
    GroupDatum d = builtin_datum(spec);
    Representation rep = standard_representation(spec);
    for (std::size_t i = 0; i < d.simple_roots.size(); ++i)
      for (std::size_t j = 0; j < d.fund_coweights.size(); ++j)
        o.require(dot(d.simple_roots[i], d.fund_coweights[j]) == (i == j ? 1 : 0),
                  spec + ": <alpha_i, omega_j> != delta_ij");
    for (int t = 0; t < 10; ++t) {
      Vec a = rvec(d.torus_rank), b = rvec(d.torus_rank);
      for (std::size_t j = 0; j < d.simple_roots.size(); ++j)
        o.require(chi_inner(rep, reflect_cocharacter(d, j, a), reflect_cocharacter(d, j, b)) ==
                      chi_inner(rep, a, b),
                  spec + ": Weyl invariance");
      Vec pa = pi_z(d, rep, a);
      o.require(pi_z(d, rep, pa) == pa, spec + ": pi_Z idempotence");
      o.require(chi_inner(rep, pa, b) == chi_inner(rep, a, pi_z(d, rep, b)),
                spec + ": pi_Z self-adjointness");
      if (!is_zero(a)) {
        Cocharacter p = primitive_scale(a);
        o.require(primitive_scale(p.as_rational()) == p, "primitive_scale idempotence");
        o.require(primitive_scale(scaled(a, ratio(1 + t, 7))) == p, "primitive_scale scaling");
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "SO(7) on P3 golden structure (verbatim and corrected polynomials)", 1.0, golden_so7},
      {2, "noncentral GL(2)xGL(2) example", 1.0, noncentral},
      {3, "classical HN equivalence, 200 GL-identity instances", 10.0, classical},
      {4, "analytic maximizer vs brute force (bound 4), 100 instances", 60.0, analytic_vs_brute},
      {5, "leading ray vs slope-canonical ray, 50 central instances", 10.0, slope_comparison},
      {6, "invariant suite", 10.0, invariants},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    if (secs > c.limit_s) o.require(false, "over the time limit");
    all = all && o.ok;
    std::printf("[%s] %d %s (%.3f s%s%s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : "; ", o.detail.c_str());
  }

  Outcome& t = g_termination;
  t.require(g_runs > 0, "no GHN runs recorded");
  all = all && t.ok;
  std::printf("[%s] 7 termination and semistable graded pieces over %zu GHN runs%s%s\n",
              t.ok ? "PASS" : "FAIL", g_runs, t.detail.empty() ? "" : "; ", t.detail.c_str());
  return all ? 0 : 1;
}
