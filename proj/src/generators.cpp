#include "ghn/generators.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace ghn::gen {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

VarietyDescriptor random_variety(std::mt19937_64& rng, int max_dim) {
  int d = uniform(rng, 1, max_dim);
  if (uniform(rng, 0, 1) == 0) return projective_space(d);
  VarietyDescriptor v;
  v.dim = d;
  v.degree = uniform(rng, 1, 3);
  v.todd_line = ratio(uniform(rng, -2, 4), 2);
  v.name = "random";
  return v;
}

// Polynomial with a_d = rank * A_d and a_{d-1} = rank * (c + t); the lower
// coefficients are supplied by the caller.
RationalPoly hilbert_poly(const VarietyDescriptor& v, std::int64_t rank, const Rational& c,
                          const std::vector<Rational>& lower) {
  const int d = v.dim;
  std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
  Rational r(static_cast<long>(rank));
  coeffs[static_cast<std::size_t>(d)] = r * v.degree / factorial(static_cast<unsigned>(d));
  coeffs[static_cast<std::size_t>(d - 1)] =
      r * (c + v.todd_line) / factorial(static_cast<unsigned>(d - 1));
  for (int e = 0; e + 1 < d; ++e) coeffs[static_cast<std::size_t>(e)] = lower[static_cast<std::size_t>(e)];
  return RationalPoly(std::move(coeffs));
}

struct GroupChoice {
  const char* spec;
  std::size_t torus_rank;
  std::size_t dim;
};

constexpr std::array kGroups = {
    GroupChoice{"gl(1)", 1, 1},         GroupChoice{"gl(2)", 2, 2},
    GroupChoice{"gl(3)", 3, 3},         GroupChoice{"gl(4)", 4, 4},
    GroupChoice{"sl(2)", 1, 2},         GroupChoice{"sl(3)", 2, 3},
    GroupChoice{"sl(4)", 3, 4},         GroupChoice{"sl(5)", 4, 5},
    GroupChoice{"so(3)", 1, 3},         GroupChoice{"so(4)", 2, 4},
    GroupChoice{"so(5)", 2, 5},         GroupChoice{"so(6)", 3, 6},
    GroupChoice{"so(7)", 3, 7},         GroupChoice{"so(8)", 4, 8},
    GroupChoice{"sp(2)", 1, 2},         GroupChoice{"sp(4)", 2, 4},
    GroupChoice{"sp(6)", 3, 6},         GroupChoice{"sp(8)", 4, 8},
    GroupChoice{"gl(1)xgl(1)", 2, 2},   GroupChoice{"gl(2)xgl(2)", 4, 4},
    GroupChoice{"gl(1)xsl(3)", 3, 4},   GroupChoice{"gl(2)xgl(1)", 3, 3},
    GroupChoice{"so(3)xgl(1)", 2, 4},   GroupChoice{"sp(4)xgl(2)", 4, 6},
    GroupChoice{"so(5)xsl(2)", 3, 7},   GroupChoice{"gl(1)xgl(1)xgl(1)", 3, 3},
};

CombinatorialRhoSheaf build(std::mt19937_64& rng, const RandomInstanceOptions& options,
                            bool central, bool require_noncentral_psi) {
  std::vector<GroupChoice> pool;
  for (const auto& g : kGroups) {
    if (g.torus_rank <= options.max_torus_rank && g.dim <= options.max_summands) pool.push_back(g);
  }
  for (;;) {
    const auto& g = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    GroupDatum datum = builtin_datum(g.spec);
    Representation rep = standard_representation(g.spec);
    int mode = central ? 0 : uniform(rng, 0, 2);
    if (mode == 1 && rep.factors.size() > 1) {
      Representation merged;
      merged.factors.emplace_back();
      for (auto& f : rep.factors) {
        merged.factors[0].insert(merged.factors[0].end(), f.begin(), f.end());
      }
      rep = std::move(merged);
    } else if (mode == 2) {
      auto& f = rep.factors[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rep.factors.size()) - 1))];
      f[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(f.size()) - 1))].mult = 2;
    }

    Vec psi(datum.torus_rank);
    for (auto& x : psi) x = ratio(uniform(rng, -2, 2), uniform(rng, 1, 2));
    if (require_noncentral_psi && is_zero(pi_z(datum, rep, psi))) continue;

    VarietyDescriptor variety = random_variety(rng, options.max_dim);
    // A handful of lower-order profiles shared between summands.
    std::vector<std::vector<Rational>> profiles(static_cast<std::size_t>(uniform(rng, 1, 3)));
    for (auto& p : profiles) {
      for (int e = 0; e + 1 < variety.dim; ++e) p.push_back(ratio(uniform(rng, -2, 2), uniform(rng, 1, 2)));
    }
    std::vector<Summand> summands;
    for (std::size_t fi = 0; fi < rep.factors.size(); ++fi) {
      for (std::size_t i = 0; i < rep.factors[fi].size(); ++i) {
        const auto& w = rep.factors[fi][i];
        Rational c = dot(psi, w.weight);
        const auto& profile =
            profiles[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(profiles.size()) - 1))];
        std::vector<Rational> lower;
        for (const auto& x : profile) lower.push_back(x * Rational(static_cast<long>(w.mult)));
        summands.push_back({fi, i, hilbert_poly(variety, w.mult, c, lower), w.mult, {}});
      }
    }
    return make_sheaf(variety, std::move(datum), std::move(rep), std::move(summands));
  }
}

}  // namespace

CombinatorialRhoSheaf gl_identity_instance(std::mt19937_64& rng, const GlIdentityOptions& options) {
  VarietyDescriptor variety = random_variety(rng, options.max_dim);
  const int d = variety.dim;
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(options.max_summands)));
  std::string spec = "gl(" + std::to_string(n) + ")";

  // Base coefficients below the leading one, then per-type perturbations at
  // a random degree.
  std::vector<Rational> base(static_cast<std::size_t>(d));
  for (auto& x : base) x = ratio(uniform(rng, -3, 3), uniform(rng, 1, 3));
  const int n_types = uniform(rng, std::min(2, static_cast<int>(n)), static_cast<int>(n));
  std::vector<std::vector<Rational>> types(static_cast<std::size_t>(n_types));
  for (auto& t : types) {
    t = base;
    int e = uniform(rng, 0, d - 1);
    int bump = uniform(rng, 1, 2) * (uniform(rng, 0, 1) ? 1 : -1);
    t[static_cast<std::size_t>(e)] += ratio(bump, uniform(rng, 1, 2));
    if (uniform(rng, 0, 2) == 0) {
      int e2 = uniform(rng, 0, d - 1);
      t[static_cast<std::size_t>(e2)] += ratio(uniform(rng, -1, 1), 3);
    }
  }
  std::vector<Summand> summands;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = types[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(types.size()) - 1))];
    std::vector<Rational> coeffs(t.begin(), t.end());
    coeffs.push_back(variety.degree / factorial(static_cast<unsigned>(d)));
    summands.push_back({0, i, RationalPoly(std::move(coeffs)), 1, {}});
  }
  return make_sheaf(variety, builtin_datum(spec), standard_representation(spec), std::move(summands));
}

CombinatorialRhoSheaf random_instance(std::mt19937_64& rng, const RandomInstanceOptions& options) {
  return build(rng, options, options.central_only, false);
}

CombinatorialRhoSheaf central_slope_unstable_instance(std::mt19937_64& rng,
                                                      const RandomInstanceOptions& options) {
  return build(rng, options, true, true);
}

}  // namespace ghn::gen
