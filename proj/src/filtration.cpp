#include "ghn/filtration.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>

#include "ghn/error.hpp"

namespace ghn {

Partition refine_blocks(const CombinatorialRhoSheaf& sheaf, const Cocharacter& lambda) {
  GroupDatum levi = levi_subdatum(sheaf.datum, lambda.as_rational());
  Partition out;
  for (const auto& block : sheaf.blocks) {
    std::vector<std::pair<Vec, Block>> groups;
    for (auto i : block) {
      Vec key;
      for (const auto& z : levi.central_basis) key.push_back(dot(z, sheaf.weight(i).weight));
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return g.first == key; });
      if (it == groups.end()) {
        groups.push_back({std::move(key), Block{i}});
      } else {
        it->second.push_back(i);
      }
    }
    for (auto& g : groups) out.push_back(std::move(g.second));
  }
  return out;
}

CombinatorialRhoSheaf associated_graded(const CombinatorialRhoSheaf& sheaf,
                                        const Cocharacter& lambda) {
  CombinatorialRhoSheaf out = sheaf;
  out.blocks = refine_blocks(sheaf, lambda);
  out.datum = levi_subdatum(sheaf.datum, lambda.as_rational());
  return out;
}

LexFiltration ghn_filtration(const CombinatorialRhoSheaf& sheaf) {
  LexFiltration lex;
  CombinatorialRhoSheaf current = sheaf;
  int previous_degree = INT_MAX;
  while (auto lead = leading_cochar(current)) {
    // A refining step adds at least one block, so more steps than summands
    // means the loop is not making progress.
    if (lex.steps.size() > sheaf.size()) {
      throw Error(Errc::InternalNonRefinement, "recursion exceeded the number of summands");
    }
    CombinatorialRhoSheaf next = associated_graded(current, lead->lambda);
    if (next.blocks.size() <= current.blocks.size()) {
      throw Error(Errc::InternalNonRefinement,
                  "step " + std::to_string(lex.steps.size() + 1) + " with lambda " +
                      to_string(lead->lambda) + " did not refine the blocks");
    }
    if (lead->leading_degree > previous_degree) {
      lex.warnings.push_back("leading degree rose from " + std::to_string(previous_degree) +
                             " to " + std::to_string(lead->leading_degree) + " at step " +
                             std::to_string(lex.steps.size() + 1));
    }
    previous_degree = lead->leading_degree;
    lex.steps.push_back({lead->lambda, lead->leading_degree, current.blocks, next.blocks});
    current = std::move(next);
  }

  lex.summand_weights.assign(sheaf.size(), IntVec{});
  for (std::size_t i = 0; i < sheaf.size(); ++i) {
    const auto& chi = sheaf.weight(i).weight;
    for (const auto& step : lex.steps) {
      std::int64_t p = 0;
      for (std::size_t k = 0; k < chi.size(); ++k) p += step.lambda.coords[k] * chi[k];
      lex.summand_weights[i].push_back(-p);
    }
  }
  std::map<IntVec, std::vector<std::size_t>, std::greater<>> points;
  for (std::size_t i = 0; i < sheaf.size(); ++i) points[lex.summand_weights[i]].push_back(i);
  for (auto& [w, members] : points) lex.jumping_points.push_back({w, members});
  return lex;
}

CombinatorialRhoSheaf final_graded(const CombinatorialRhoSheaf& sheaf,
                                   const LexFiltration& lex) {
  CombinatorialRhoSheaf current = sheaf;
  for (const auto& step : lex.steps) current = associated_graded(current, step.lambda);
  return current;
}

std::vector<std::vector<std::size_t>> unweighted_chain(const LexFiltration& lex) {
  std::vector<std::vector<std::size_t>> chain;
  std::vector<std::size_t> acc;
  for (const auto& jp : lex.jumping_points) {
    acc.insert(acc.end(), jp.summands.begin(), jp.summands.end());
    std::sort(acc.begin(), acc.end());
    chain.push_back(acc);
  }
  return chain;
}

namespace {

void require_gl_identity(const CombinatorialRhoSheaf& sheaf) {
  const auto& rep = sheaf.rep;
  const std::size_t n = sheaf.datum.torus_rank;
  if (rep.factors.size() != 1 || rep.factors[0].size() != n) {
    throw Error(Errc::WrongGroupShape,
                "expected a single general linear factor with the identity representation");
  }
  std::set<std::size_t> hit;
  for (const auto& w : rep.factors[0]) {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (w.weight[k] != 0) {
        ++nonzero;
        where = k;
      }
    }
    if (w.mult != 1 || nonzero != 1 || w.weight[where] != 1 || !hit.insert(where).second) {
      throw Error(Errc::WrongGroupShape, "weights are not distinct coordinate vectors");
    }
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> classical_hn_oracle(const CombinatorialRhoSheaf& sheaf) {
  require_gl_identity(sheaf);
  std::map<RationalPoly, std::vector<std::size_t>, std::greater<>> groups;
  for (std::size_t i = 0; i < sheaf.size(); ++i) groups[summand_reduced(sheaf, i)].push_back(i);
  std::vector<std::vector<std::size_t>> chain;
  std::vector<std::size_t> acc;
  for (auto& [p, members] : groups) {
    acc.insert(acc.end(), members.begin(), members.end());
    std::sort(acc.begin(), acc.end());
    chain.push_back(acc);
  }
  return chain;
}

IntVec leading_term_weights(const CombinatorialRhoSheaf& sheaf) {
  require_gl_identity(sheaf);
  const int d = sheaf.variety.dim;
  RationalPoly total = block_hp(sheaf, sheaf.blocks.empty() ? Block{} : sheaf.blocks.front());
  for (int e = d - 1; e >= 0; --e) {
    std::vector<Rational> mu;
    for (const auto& s : sheaf.summands) mu.push_back(slope(s.hp, e));
    if (std::all_of(mu.begin(), mu.end(), [&](const Rational& x) { return x == mu.front(); })) {
      continue;
    }
    Rational mu_total = slope(total, e);
    // Least positive L with L*mu integral for every value involved:
    // lcm of denominators over gcd of nonzero numerators.
    Integer den = 1, num = 0;
    auto absorb = [&](const Rational& x) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num().get_mpz_t());
    };
    absorb(mu_total);
    for (const auto& x : mu) absorb(x);
    Rational scale = 1;
    if (num != 0) {
      scale = Rational(den, num);
      scale.canonicalize();
    }
    IntVec out;
    for (const auto& x : mu) {
      Rational w = scale * (x - mu_total);
      out.push_back(to_int64(w.get_num()));
    }
    return out;
  }
  throw Error(Errc::SemistableInput, "all slopes agree; the sheaf is semistable");
}

}  // namespace ghn
