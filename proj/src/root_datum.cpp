#include "ghn/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ghn/error.hpp"

namespace ghn {

Matrix GroupDatum::cartan_matrix() const {
  const std::size_t l = simple_roots.size();
  Matrix c(l, l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) c(i, j) = dot(simple_roots[i], simple_coroots[j]);
  }
  return c;
}

std::int64_t Representation::dim(std::size_t factor) const {
  std::int64_t r = 0;
  for (const auto& w : factors.at(factor)) r += w.mult;
  return r;
}

std::size_t Representation::entry_count() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += f.size();
  return n;
}

bool Cocharacter::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](auto x) { return x == 0; });
}

bool Cocharacter::is_primitive() const {
  std::int64_t g = 0;
  for (auto x : coords) g = std::gcd(g, x < 0 ? -x : x);
  return g == 1;
}

std::string to_string(const Cocharacter& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.coords.size(); ++i) {
    if (i) os << ",";
    os << c.coords[i];
  }
  os << ")";
  return os.str();
}

std::vector<std::size_t> parabolic_type(const GroupDatum& datum,
                                        std::span<const Rational> lambda) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < datum.simple_roots.size(); ++j) {
    int s = sgn(dot(datum.simple_roots[j], lambda));
    if (s < 0) {
      throw Error(Errc::NotDominant,
                  "cocharacter pairs negatively with simple root " +
                      std::to_string(datum.root_labels[j]));
    }
    if (s > 0) out.push_back(datum.root_labels[j]);
  }
  return out;
}

std::vector<Vec> levi_center_basis(const GroupDatum& datum,
                                   std::span<const Rational> lambda) {
  auto type = parabolic_type(datum, lambda);
  std::vector<Vec> basis = datum.central_basis;
  for (std::size_t j = 0; j < datum.simple_roots.size(); ++j) {
    if (std::find(type.begin(), type.end(), datum.root_labels[j]) != type.end()) {
      basis.push_back(datum.fund_coweights[j]);
    }
  }
  return basis;
}

Vec reflect_cocharacter(const GroupDatum& datum, std::size_t j,
                        std::span<const Rational> v) {
  Rational p = dot(datum.simple_roots[j], v);
  return sub(v, scaled(datum.simple_coroots[j], p));
}

Vec reflect_character(const GroupDatum& datum, std::size_t j,
                      std::span<const Rational> chi) {
  Rational p = dot(chi, datum.simple_coroots[j]);
  return sub(chi, scaled(datum.simple_roots[j], p));
}

DominantConjugate dominant_conjugate(const GroupDatum& datum,
                                     std::span<const Rational> lambda) {
  DominantConjugate out{Vec(lambda.begin(), lambda.end()), {}};
  // Each reflection through a negatively paired simple root strictly
  // shortens the Weyl element, so the loop ends after at most |W| steps.
  for (;;) {
    std::size_t j = 0;
    while (j < datum.simple_roots.size() && dot(datum.simple_roots[j], out.dominant) >= 0) ++j;
    if (j == datum.simple_roots.size()) return out;
    out.dominant = reflect_cocharacter(datum, j, out.dominant);
    out.word.push_back(j);
  }
}

std::vector<Vec> coweights_in_coroot_span(const std::vector<Vec>& roots,
                                          const std::vector<Vec>& coroots,
                                          std::size_t torus_rank) {
  const std::size_t l = roots.size();
  Matrix c(l, l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t k = 0; k < l; ++k) c(i, k) = dot(roots[i], coroots[k]);
  }
  std::vector<Vec> out;
  for (std::size_t j = 0; j < l; ++j) {
    Vec e(l);
    e[j] = 1;
    auto sol = solve(c, e);
    if (sol.status != LinearSolution::Status::Unique) {
      throw Error(Errc::DegenerateForm, "singular Cartan matrix");
    }
    Vec w(torus_rank);
    for (std::size_t k = 0; k < l; ++k) w = add(w, scaled(coroots[k], sol.x[k]));
    out.push_back(std::move(w));
  }
  return out;
}

GroupDatum levi_subdatum(const GroupDatum& datum, std::span<const Rational> lambda) {
  DominantConjugate dc = dominant_conjugate(datum, lambda);
  auto undo_character = [&](Vec chi) {
    for (auto it = dc.word.rbegin(); it != dc.word.rend(); ++it) {
      chi = reflect_character(datum, *it, chi);
    }
    return chi;
  };
  auto undo_cocharacter = [&](Vec v) {
    for (auto it = dc.word.rbegin(); it != dc.word.rend(); ++it) {
      v = reflect_cocharacter(datum, *it, v);
    }
    return v;
  };

  GroupDatum sub;
  sub.torus_rank = datum.torus_rank;
  sub.central_basis = datum.central_basis;
  sub.name = datum.name;
  for (std::size_t j = 0; j < datum.simple_roots.size(); ++j) {
    if (dot(datum.simple_roots[j], dc.dominant) > 0) {
      sub.central_basis.push_back(undo_cocharacter(datum.fund_coweights[j]));
    } else {
      sub.simple_roots.push_back(undo_character(datum.simple_roots[j]));
      sub.simple_coroots.push_back(undo_cocharacter(datum.simple_coroots[j]));
      sub.root_labels.push_back(datum.root_labels[j]);
    }
  }
  sub.fund_coweights =
      coweights_in_coroot_span(sub.simple_roots, sub.simple_coroots, sub.torus_rank);
  return sub;
}

Rational chi_inner(const Representation& rep, std::span<const Rational> delta,
                   std::span<const Rational> gamma) {
  Rational acc = 0;
  for (const auto& factor : rep.factors) {
    for (const auto& w : factor) {
      acc += Rational(static_cast<long>(w.mult)) * dot(delta, w.weight) * dot(gamma, w.weight);
    }
  }
  return acc;
}

Matrix gram_matrix(const Representation& rep, std::size_t torus_rank) {
  Matrix g(torus_rank, torus_rank);
  for (const auto& factor : rep.factors) {
    for (const auto& w : factor) {
      for (std::size_t s = 0; s < torus_rank; ++s) {
        if (w.weight[s] == 0) continue;
        for (std::size_t t = 0; t < torus_rank; ++t) {
          g(s, t) += Rational(static_cast<long>(w.mult * w.weight[s] * w.weight[t]));
        }
      }
    }
  }
  return g;
}

Vec pi_z(const GroupDatum& datum, const Representation& rep,
         std::span<const Rational> v) {
  Matrix g = gram_matrix(rep, datum.torus_rank);
  if (rank(g) < datum.torus_rank) {
    throw Error(Errc::DegenerateForm, "weights do not span; ._chi is degenerate");
  }
  const auto& z = datum.central_basis;
  const std::size_t h = z.size();
  if (h == 0) return Vec(v.begin(), v.end());
  Matrix zgz(h, h);
  Vec rhs(h);
  for (std::size_t a = 0; a < h; ++a) {
    Vec gza = g.apply(z[a]);
    rhs[a] = dot(gza, v);
    for (std::size_t b = 0; b < h; ++b) zgz(a, b) = dot(gza, z[b]);
  }
  auto sol = solve(zgz, rhs);
  if (sol.status != LinearSolution::Status::Unique) {
    throw Error(Errc::DegenerateForm, "central basis is linearly dependent");
  }
  Vec out(v.begin(), v.end());
  for (std::size_t a = 0; a < h; ++a) out = sub(out, scaled(z[a], sol.x[a]));
  return out;
}

Cocharacter primitive_scale(std::span<const Rational> v) {
  if (is_zero(v)) throw Error(Errc::ZeroVector, "cannot scale the zero vector");
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  Cocharacter out;
  for (auto& n : ints) out.coords.push_back(to_int64(n / g));
  return out;
}

std::vector<Vec> character_group_basis(const GroupDatum& datum) {
  if (datum.simple_coroots.empty()) {
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < datum.torus_rank; ++i) {
      Vec e(datum.torus_rank);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return nullspace(Matrix::from_rows(datum.simple_coroots, datum.torus_rank));
}

bool weights_span(const Representation& rep, std::size_t torus_rank) {
  std::vector<Vec> rows;
  for (const auto& f : rep.factors) {
    for (const auto& w : f) rows.push_back(to_rational(w.weight));
  }
  if (rows.empty()) return torus_rank == 0;
  return rank(Matrix::from_rows(rows, torus_rank)) == torus_rank;
}

std::vector<std::string> datum_issues(const GroupDatum& datum) {
  std::vector<std::string> issues;
  const std::size_t n = datum.torus_rank;
  const std::size_t l = datum.simple_roots.size();
  auto check_len = [&](const std::vector<Vec>& vs, const char* what) {
    for (const auto& v : vs) {
      if (v.size() != n) issues.push_back(std::string(what) + " has wrong length");
    }
  };
  check_len(datum.central_basis, "central basis vector");
  check_len(datum.simple_roots, "simple root");
  check_len(datum.simple_coroots, "simple coroot");
  check_len(datum.fund_coweights, "fundamental coweight");
  if (!issues.empty()) return issues;
  if (datum.simple_coroots.size() != l || datum.fund_coweights.size() != l) {
    issues.push_back("simple roots, coroots and coweights differ in number");
    return issues;
  }
  if (datum.central_basis.size() + l != n) {
    issues.push_back("central basis and coweights do not have torus_rank elements");
  } else {
    std::vector<Vec> basis = datum.central_basis;
    basis.insert(basis.end(), datum.fund_coweights.begin(), datum.fund_coweights.end());
    if (n > 0 && rank(Matrix::from_rows(basis, n)) != n) {
      issues.push_back("central basis and coweights are not a basis");
    }
  }
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      Rational p = dot(datum.simple_roots[i], datum.fund_coweights[j]);
      if (p != (i == j ? 1 : 0)) {
        issues.push_back("<alpha_" + std::to_string(i + 1) + ", omega_" +
                         std::to_string(j + 1) + "> = " + format_rational(p));
      }
    }
    for (std::size_t k = 0; k < datum.central_basis.size(); ++k) {
      if (dot(datum.simple_roots[i], datum.central_basis[k]) != 0) {
        issues.push_back("simple root " + std::to_string(i + 1) +
                         " does not vanish on central vector " + std::to_string(k + 1));
      }
    }
  }
  Matrix c = datum.cartan_matrix();
  for (std::size_t i = 0; i < l; ++i) {
    if (c(i, i) != 2) issues.push_back("Cartan diagonal entry " + std::to_string(i + 1) + " != 2");
    for (std::size_t j = 0; j < l; ++j) {
      if (c(i, j).get_den() != 1) issues.push_back("Cartan matrix entry is not an integer");
    }
  }
  return issues;
}

// -- builtin groups -------------------------------------------------------

namespace {

struct Factor {
  GroupDatum datum;
  std::vector<WeightEntry> weights;
};

Vec unit(std::size_t n, std::size_t i, long value = 1) {
  Vec e(n);
  e[i] = value;
  return e;
}

IntVec unit_int(std::size_t n, std::size_t i, std::int64_t value = 1) {
  IntVec e(n, 0);
  e[i] = value;
  return e;
}

void finish(GroupDatum& d) {
  d.fund_coweights = coweights_in_coroot_span(d.simple_roots, d.simple_coroots, d.torus_rank);
}

Factor make_gl(std::size_t k) {
  Factor f;
  auto& d = f.datum;
  d.torus_rank = k;
  d.central_basis.push_back(Vec(k, Rational(1)));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    Vec a = sub(unit(k, i), unit(k, i + 1));
    d.simple_roots.push_back(a);
    d.simple_coroots.push_back(a);
  }
  finish(d);
  for (std::size_t i = 0; i < k; ++i) f.weights.push_back({unit_int(k, i), 1});
  return f;
}

Factor make_sl(std::size_t k) {
  // Torus coordinates are taken in the coroot basis alpha_i^vee = e_i - e_{i+1}.
  Factor f;
  auto& d = f.datum;
  const std::size_t n = k - 1;
  d.torus_rank = n;
  auto eps = [&](std::size_t m) {
    IntVec w(n, 0);
    if (m < n) w[m] += 1;
    if (m >= 1) w[m - 1] -= 1;
    return w;
  };
  for (std::size_t i = 0; i < n; ++i) {
    d.simple_roots.push_back(sub(to_rational(eps(i)), to_rational(eps(i + 1))));
    d.simple_coroots.push_back(unit(n, i));
  }
  finish(d);
  for (std::size_t m = 0; m < k; ++m) f.weights.push_back({eps(m), 1});
  return f;
}

Factor make_so(std::size_t k) {
  Factor f;
  auto& d = f.datum;
  const std::size_t n = k / 2;
  d.torus_rank = n;
  if (k == 2) {
    d.central_basis.push_back(unit(1, 0));
  } else if (k % 2 == 1) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Vec a = sub(unit(n, i), unit(n, i + 1));
      d.simple_roots.push_back(a);
      d.simple_coroots.push_back(a);
    }
    d.simple_roots.push_back(unit(n, n - 1));
    d.simple_coroots.push_back(unit(n, n - 1, 2));
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Vec a = sub(unit(n, i), unit(n, i + 1));
      d.simple_roots.push_back(a);
      d.simple_coroots.push_back(a);
    }
    Vec a = add(unit(n, n - 2), unit(n, n - 1));
    d.simple_roots.push_back(a);
    d.simple_coroots.push_back(a);
  }
  finish(d);
  // Torus diag(t^{a_1}, ..., t^{a_n}, [1,] t^{-a_n}, ..., t^{-a_1}).
  for (std::size_t i = 0; i < n; ++i) f.weights.push_back({unit_int(n, i), 1});
  if (k % 2 == 1) f.weights.push_back({IntVec(n, 0), 1});
  for (std::size_t i = n; i-- > 0;) f.weights.push_back({unit_int(n, i, -1), 1});
  return f;
}

Factor make_sp(std::size_t k) {
  Factor f;
  auto& d = f.datum;
  const std::size_t n = k / 2;
  d.torus_rank = n;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vec a = sub(unit(n, i), unit(n, i + 1));
    d.simple_roots.push_back(a);
    d.simple_coroots.push_back(a);
  }
  d.simple_roots.push_back(unit(n, n - 1, 2));
  d.simple_coroots.push_back(unit(n, n - 1));
  finish(d);
  for (std::size_t i = 0; i < n; ++i) f.weights.push_back({unit_int(n, i), 1});
  for (std::size_t i = n; i-- > 0;) f.weights.push_back({unit_int(n, i, -1), 1});
  return f;
}

std::string trim_copy(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

Factor parse_factor(const std::string& tok) {
  auto open = tok.find('(');
  if (open == std::string::npos || tok.back() != ')' || open + 2 > tok.size() - 1) {
    throw Error(Errc::ParseError, "malformed group factor '" + tok + "'");
  }
  std::string kind = tok.substr(0, open);
  std::string arg = tok.substr(open + 1, tok.size() - open - 2);
  if (arg.empty() || !std::all_of(arg.begin(), arg.end(), ::isdigit) || arg.size() > 4) {
    throw Error(Errc::ParseError, "malformed size in group factor '" + tok + "'");
  }
  std::size_t k = std::stoul(arg);
  if (kind == "gl" && k >= 1) return make_gl(k);
  if (kind == "sl" && k >= 2) return make_sl(k);
  if (kind == "so" && k >= 2) return make_so(k);
  if (kind == "sp" && k >= 2 && k % 2 == 0) return make_sp(k);
  if (kind == "gl" || kind == "sl" || kind == "so" || kind == "sp") {
    throw Error(Errc::UnsupportedType, "unsupported size in group factor '" + tok + "'");
  }
  throw Error(Errc::UnsupportedType, "unsupported group type '" + kind + "'");
}

std::vector<Factor> parse_factors(std::string_view spec) {
  std::string s = trim_copy(spec);
  if (s.empty()) throw Error(Errc::ParseError, "empty group spec");
  std::vector<Factor> out;
  std::size_t pos = 0;
  for (;;) {
    auto close = s.find(')', pos);
    if (close == std::string::npos) {
      throw Error(Errc::ParseError, "malformed group spec '" + std::string(spec) + "'");
    }
    out.push_back(parse_factor(s.substr(pos, close + 1 - pos)));
    pos = close + 1;
    if (pos == s.size()) break;
    if (s[pos] != 'x' || pos + 1 == s.size()) {
      throw Error(Errc::ParseError, "expected 'x' between factors in '" + std::string(spec) + "'");
    }
    ++pos;
  }
  return out;
}

// Embeds a vector of one factor into the concatenated torus.
Vec embed(const Vec& v, std::size_t offset, std::size_t total) {
  Vec out(total);
  for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
  return out;
}

}  // namespace

GroupDatum builtin_datum(std::string_view spec) {
  auto factors = parse_factors(spec);
  std::size_t total = 0;
  for (const auto& f : factors) total += f.datum.torus_rank;
  GroupDatum d;
  d.torus_rank = total;
  d.name = trim_copy(spec);
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& z : f.datum.central_basis) d.central_basis.push_back(embed(z, offset, total));
    for (std::size_t j = 0; j < f.datum.simple_roots.size(); ++j) {
      d.simple_roots.push_back(embed(f.datum.simple_roots[j], offset, total));
      d.simple_coroots.push_back(embed(f.datum.simple_coroots[j], offset, total));
      d.fund_coweights.push_back(embed(f.datum.fund_coweights[j], offset, total));
    }
    offset += f.datum.torus_rank;
  }
  for (std::size_t j = 0; j < d.simple_roots.size(); ++j) d.root_labels.push_back(j + 1);
  return d;
}

Representation standard_representation(std::string_view spec) {
  auto factors = parse_factors(spec);
  std::size_t total = 0;
  for (const auto& f : factors) total += f.datum.torus_rank;
  Representation rep;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    std::vector<WeightEntry> weights;
    for (const auto& w : f.weights) {
      IntVec full(total, 0);
      std::copy(w.weight.begin(), w.weight.end(), full.begin() + static_cast<std::ptrdiff_t>(offset));
      weights.push_back({std::move(full), w.mult});
    }
    rep.factors.push_back(std::move(weights));
    offset += f.datum.torus_rank;
  }
  return rep;
}

}  // namespace ghn
