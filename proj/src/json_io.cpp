#include "ghn/json_io.hpp"

#include "ghn/error.hpp"

namespace ghn::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<Vec> vecs_from_json(const json& j, std::size_t n, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<Vec> out;
  for (const auto& v : j) {
    out.push_back(vec_from_json(v));
    if (out.back().size() != n) fail(std::string(what) + " entry has wrong length");
  }
  return out;
}

json vecs_to_json(const std::vector<Vec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

json int_array(const IntVec& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

IntVec int_vec_from_json(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array of integers");
  IntVec out;
  for (const auto& x : j) out.push_back(int_from_json(x, what));
  return out;
}

json partition_to_json(const Partition& p) {
  json out = json::array();
  for (const auto& b : p) out.push_back(b);
  return out;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) fail("partition must be an array of arrays");
  Partition p;
  for (const auto& b : j) {
    Block block;
    for (const auto& i : b) block.push_back(static_cast<std::size_t>(int_from_json(i, "block entry")));
    p.push_back(std::move(block));
  }
  return p;
}

}  // namespace

json to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  fail("rational must be a \"num/den\" string or an integer");
}

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) fail("vector must be an array");
  Vec out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json to_json(const RationalPoly& p) { return to_json(Vec(p.coeffs())); }

RationalPoly poly_from_json(const json& j) { return RationalPoly(vec_from_json(j)); }

json to_json(const GroupDatum& d) {
  json out;
  out["name"] = d.name;
  out["torus_rank"] = d.torus_rank;
  out["central_basis"] = vecs_to_json(d.central_basis);
  out["simple_roots"] = vecs_to_json(d.simple_roots);
  out["simple_coroots"] = vecs_to_json(d.simple_coroots);
  out["fund_coweights"] = vecs_to_json(d.fund_coweights);
  return out;
}

GroupDatum datum_from_json(const json& j) {
  if (j.is_string()) return builtin_datum(j.get<std::string>());
  if (!j.is_object()) fail("group must be a spec string or a datum object");
  GroupDatum d;
  auto n = int_from_json(field(j, "torus_rank"), "torus_rank");
  if (n <= 0) fail("torus_rank must be positive");
  d.torus_rank = static_cast<std::size_t>(n);
  d.central_basis = vecs_from_json(field(j, "central_basis"), d.torus_rank, "central_basis");
  d.simple_roots = vecs_from_json(field(j, "simple_roots"), d.torus_rank, "simple_roots");
  d.simple_coroots = vecs_from_json(field(j, "simple_coroots"), d.torus_rank, "simple_coroots");
  d.fund_coweights = vecs_from_json(field(j, "fund_coweights"), d.torus_rank, "fund_coweights");
  if (d.simple_coroots.size() != d.simple_roots.size() ||
      d.fund_coweights.size() != d.simple_roots.size()) {
    fail("simple_roots, simple_coroots and fund_coweights must have equal length");
  }
  d.name = j.value("name", std::string("custom"));
  for (std::size_t i = 0; i < d.simple_roots.size(); ++i) d.root_labels.push_back(i + 1);
  return d;
}

json to_json(const Representation& rep) {
  json out = json::array();
  for (const auto& f : rep.factors) {
    json factor = json::array();
    for (const auto& w : f) factor.push_back({{"weight", int_array(w.weight)}, {"mult", w.mult}});
    out.push_back(std::move(factor));
  }
  return out;
}

Representation representation_from_json(const json& j, std::size_t torus_rank) {
  if (!j.is_array() || j.empty()) fail("representation must be a nonempty array of factors");
  Representation rep;
  for (const auto& f : j) {
    if (!f.is_array() || f.empty()) fail("representation factor must be a nonempty array");
    std::vector<WeightEntry> factor;
    for (const auto& w : f) {
      WeightEntry e;
      const json& weight = field(w, "weight");
      if (!weight.is_array()) fail("weight must be an array");
      for (const auto& x : weight) {
        if (!x.is_number_integer()) fail("weights must be integer covectors");
        e.weight.push_back(x.get<std::int64_t>());
      }
      if (e.weight.size() != torus_rank) fail("weight length differs from torus_rank");
      e.mult = w.contains("mult") ? int_from_json(w.at("mult"), "mult") : 1;
      if (e.mult <= 0) fail("mult must be positive");
      factor.push_back(std::move(e));
    }
    rep.factors.push_back(std::move(factor));
  }
  return rep;
}

json to_json(const VarietyDescriptor& v) {
  return {{"dim", v.dim}, {"A_d", to_json(v.degree)}, {"todd_line", to_json(v.todd_line)},
          {"name", v.name}};
}

VarietyDescriptor variety_from_json(const json& j) {
  if (j.is_object() && j.contains("preset")) {
    const json& p = j.at("preset");
    if (!p.is_string()) fail("variety preset must be a string");
    std::string name = p.get<std::string>();
    if (name.size() >= 2 && (name[0] == 'P' || name[0] == 'p') &&
        name.find_first_not_of("0123456789", 1) == std::string::npos && name.size() <= 3) {
      int d = std::stoi(name.substr(1));
      if (d >= 1) return projective_space(d);
    }
    throw Error(Errc::UnsupportedType, "unknown variety preset '" + name + "'");
  }
  VarietyDescriptor v;
  auto dim = int_from_json(field(j, "dim"), "dim");
  if (dim < 1 || dim > 64) fail("dim must be between 1 and 64");
  v.dim = static_cast<int>(dim);
  v.degree = rational_from_json(field(j, "A_d"));
  v.todd_line = rational_from_json(field(j, "todd_line"));
  v.name = j.value("name", std::string());
  return v;
}

json to_json(const CombinatorialRhoSheaf& sheaf) {
  json out;
  out["variety"] = to_json(sheaf.variety);
  if (!datum_issues(sheaf.datum).empty() || sheaf.datum.name.empty()) {
    out["group"] = to_json(sheaf.datum);
  } else {
    try {
      // Builtin names round-trip as spec strings when they rebuild the same datum.
      GroupDatum rebuilt = builtin_datum(sheaf.datum.name);
      bool same = rebuilt.simple_roots == sheaf.datum.simple_roots &&
                  rebuilt.central_basis == sheaf.datum.central_basis &&
                  rebuilt.fund_coweights == sheaf.datum.fund_coweights;
      out["group"] = same ? json(sheaf.datum.name) : to_json(sheaf.datum);
    } catch (const Error&) {
      out["group"] = to_json(sheaf.datum);
    }
  }
  out["representation"] = to_json(sheaf.rep);
  json summands = json::array();
  for (const auto& s : sheaf.summands) {
    json e{{"factor", s.factor}, {"index", s.index}, {"hp", to_json(s.hp)}, {"rank", s.rank}};
    if (!s.label.empty()) e["label"] = s.label;
    summands.push_back(std::move(e));
  }
  out["summands"] = std::move(summands);
  return out;
}

CombinatorialRhoSheaf sheaf_from_json(const json& j) {
  if (!j.is_object()) fail("sheaf must be a JSON object");
  VarietyDescriptor variety = variety_from_json(field(j, "variety"));
  GroupDatum datum = datum_from_json(field(j, "group"));
  Representation rep = representation_from_json(field(j, "representation"), datum.torus_rank);
  const json& js = field(j, "summands");
  if (!js.is_array()) fail("summands must be an array");
  std::vector<Summand> summands;
  for (const auto& e : js) {
    Summand s;
    auto factor = int_from_json(field(e, "factor"), "factor");
    auto index = int_from_json(field(e, "index"), "index");
    if (factor < 0 || index < 0) fail("summand factor/index must be non-negative");
    s.factor = static_cast<std::size_t>(factor);
    s.index = static_cast<std::size_t>(index);
    s.hp = poly_from_json(field(e, "hp"));
    s.rank = e.contains("rank") ? int_from_json(e.at("rank"), "rank") : 1;
    s.label = e.value("label", std::string());
    summands.push_back(std::move(s));
  }
  try {
    return make_sheaf(std::move(variety), std::move(datum), std::move(rep), std::move(summands));
  } catch (const Error& e) {
    fail(e.what());
  }
}

CombinatorialRhoSheaf parse_sheaf(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return sheaf_from_json(j);
}

json to_json(const NuValue& v) {
  return {{"L", to_json(v.L)}, {"Q", to_json(v.Q)}, {"A_d", to_json(v.A_d)}};
}

NuValue nu_from_json(const json& j) {
  NuValue v;
  v.L = poly_from_json(field(j, "L"));
  v.Q = rational_from_json(field(j, "Q"));
  v.A_d = rational_from_json(field(j, "A_d"));
  return v;
}

json to_json(const Cocharacter& c) { return int_array(c.coords); }

Cocharacter cocharacter_from_json(const json& j) {
  return Cocharacter{int_vec_from_json(j, "cocharacter")};
}

json to_json(const LexFiltration& lex) {
  json out;
  out["q"] = lex.q();
  json steps = json::array();
  for (const auto& s : lex.steps) {
    steps.push_back({{"lambda", to_json(s.lambda)},
                     {"leading_degree", s.leading_degree},
                     {"blocks_after", partition_to_json(s.blocks_after)}});
  }
  out["steps"] = std::move(steps);
  json weights = json::array();
  for (const auto& w : lex.summand_weights) weights.push_back(int_array(w));
  out["summand_weights"] = std::move(weights);
  json points = json::array();
  for (const auto& p : lex.jumping_points) {
    points.push_back({{"weight", int_array(p.weight)}, {"summands", p.summands}});
  }
  out["jumping_points"] = std::move(points);
  if (!lex.warnings.empty()) out["warnings"] = lex.warnings;
  return out;
}

LexFiltration lex_from_json(const json& j) {
  LexFiltration lex;
  const json& steps = field(j, "steps");
  if (!steps.is_array()) fail("steps must be an array");
  Partition before;
  for (const auto& s : steps) {
    FiltrationStep step;
    step.lambda = cocharacter_from_json(field(s, "lambda"));
    step.leading_degree = static_cast<int>(int_from_json(field(s, "leading_degree"), "leading_degree"));
    step.blocks_before = before;
    step.blocks_after = partition_from_json(field(s, "blocks_after"));
    before = step.blocks_after;
    lex.steps.push_back(std::move(step));
  }
  if (int_from_json(field(j, "q"), "q") != static_cast<std::int64_t>(lex.steps.size())) {
    fail("q does not match the number of steps");
  }
  for (const auto& w : field(j, "summand_weights")) {
    lex.summand_weights.push_back(int_vec_from_json(w, "summand weight"));
  }
  for (const auto& p : field(j, "jumping_points")) {
    JumpingPoint jp;
    jp.weight = int_vec_from_json(field(p, "weight"), "jumping point weight");
    for (const auto& i : field(p, "summands")) {
      jp.summands.push_back(static_cast<std::size_t>(int_from_json(i, "summand index")));
    }
    lex.jumping_points.push_back(std::move(jp));
  }
  if (j.contains("warnings")) lex.warnings = j.at("warnings").get<std::vector<std::string>>();
  return lex;
}

json to_json(const ValidationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  return {{"ok", report.ok()}, {"checks", std::move(checks)}};
}

}  // namespace ghn::io
