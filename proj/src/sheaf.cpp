#include "ghn/sheaf.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "ghn/error.hpp"

namespace ghn {

VarietyDescriptor projective_space(int d) {
  return {d, Rational(1), ratio(d + 1, 2), "P" + std::to_string(d)};
}

RationalPoly projective_structure_hp(int d) {
  return binomial_poly(static_cast<unsigned>(d), Rational(0));
}

Partition factor_partition(const Representation& rep) {
  Partition p;
  std::size_t next = 0;
  for (const auto& f : rep.factors) {
    Block b;
    for (std::size_t i = 0; i < f.size(); ++i) b.push_back(next++);
    p.push_back(std::move(b));
  }
  return p;
}

CombinatorialRhoSheaf make_sheaf(VarietyDescriptor variety, GroupDatum datum,
                                 Representation rep, std::vector<Summand> summands) {
  std::sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) {
    return std::tie(a.factor, a.index) < std::tie(b.factor, b.index);
  });
  std::size_t expected = 0;
  for (std::size_t f = 0; f < rep.factors.size(); ++f) {
    for (std::size_t i = 0; i < rep.factors[f].size(); ++i, ++expected) {
      if (expected >= summands.size() || summands[expected].factor != f ||
          summands[expected].index != i) {
        throw Error(Errc::InvalidInput, "no summand for weight entry (factor " +
                                            std::to_string(f) + ", index " +
                                            std::to_string(i) + ")");
      }
    }
  }
  if (summands.size() != expected) {
    throw Error(Errc::InvalidInput, "summands do not match weight entries one to one");
  }
  for (const auto& f : rep.factors) {
    for (const auto& w : f) {
      if (w.weight.size() != datum.torus_rank) {
        throw Error(Errc::InvalidInput, "weight length differs from torus rank");
      }
    }
  }
  CombinatorialRhoSheaf s{std::move(variety), std::move(datum), std::move(rep),
                          std::move(summands), {}};
  s.blocks = factor_partition(s.rep);
  return s;
}

RationalPoly summand_reduced(const CombinatorialRhoSheaf& sheaf, std::size_t i) {
  return reduced_hp(sheaf.summands[i].hp);
}

RationalPoly block_hp(const CombinatorialRhoSheaf& sheaf, const Block& block) {
  RationalPoly total;
  for (auto i : block) total += sheaf.summands[i].hp;
  return total;
}

std::vector<Rational> c_values(const CombinatorialRhoSheaf& sheaf) {
  std::vector<Rational> out;
  const int d = sheaf.variety.dim;
  for (const auto& s : sheaf.summands) {
    out.push_back(sheaf.variety.degree * slope(s.hp, d - 1) - sheaf.variety.todd_line);
  }
  return out;
}

Vec psi_functional(const CombinatorialRhoSheaf& sheaf) {
  auto c = c_values(sheaf);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < sheaf.size(); ++i) rows.push_back(to_rational(sheaf.weight(i).weight));
  const std::size_t n = sheaf.datum.torus_rank;
  if (rows.empty()) {
    if (n == 0) return {};
    throw Error(Errc::UnderdeterminedPsi, "no weights to determine psi");
  }
  auto sol = solve(Matrix::from_rows(rows, n), c);
  if (sol.status == LinearSolution::Status::Inconsistent) {
    std::ostringstream os;
    os << "no psi exists: relation";
    for (std::size_t i = 0; i < sol.certificate.size(); ++i) {
      if (sol.certificate[i] == 0) continue;
      os << " " << format_rational(sol.certificate[i]) << "*chi_" << i;
    }
    os << " = 0 holds among weights but not among c-values";
    throw Error(Errc::InconsistentDegrees, os.str());
  }
  if (sol.status == LinearSolution::Status::Underdetermined) {
    throw Error(Errc::UnderdeterminedPsi, "weights do not span; psi is not unique");
  }
  return sol.x;
}

std::vector<Rational> degree(const CombinatorialRhoSheaf& sheaf) {
  Vec psi = psi_functional(sheaf);
  std::vector<Rational> out;
  for (const auto& chi : character_group_basis(sheaf.datum)) out.push_back(dot(chi, psi));
  return out;
}

bool is_central(const GroupDatum& datum, const Representation& rep) {
  for (const auto& z : datum.central_basis) {
    for (const auto& factor : rep.factors) {
      if (factor.empty()) continue;
      Rational first = dot(z, factor.front().weight);
      for (const auto& w : factor) {
        if (dot(z, w.weight) != first) return false;
      }
    }
  }
  return true;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

ValidationReport validate(const CombinatorialRhoSheaf& sheaf) {
  ValidationReport report;
  auto add = [&](std::string name, bool passed, std::string witness = {}) {
    report.checks.push_back({std::move(name), passed, passed ? std::string() : std::move(witness)});
  };

  auto issues = datum_issues(sheaf.datum);
  add("datum", issues.empty(), issues.empty() ? "" : issues.front());

  const int d = sheaf.variety.dim;
  bool variety_ok = d >= 1 && sheaf.variety.degree > 0;
  add("variety", variety_ok, "dimension must be >= 1 and A_d > 0");

  std::string deg_witness, lead_witness, rank_witness, weight_witness;
  for (std::size_t i = 0; i < sheaf.size(); ++i) {
    const auto& s = sheaf.summands[i];
    std::string who = s.label.empty() ? "summand " + std::to_string(i) : s.label;
    if (s.hp.degree() != d && deg_witness.empty()) {
      deg_witness = who + " has Hilbert polynomial of degree " + std::to_string(s.hp.degree()) +
                    ", expected " + std::to_string(d);
    }
    Rational want = Rational(static_cast<long>(s.rank)) * sheaf.variety.degree /
                    factorial(static_cast<unsigned>(std::max(d, 0)));
    if (s.hp.coeff(static_cast<std::size_t>(std::max(d, 0))) != want && lead_witness.empty()) {
      lead_witness = who + " has leading coefficient " +
                     format_rational(s.hp.coeff(static_cast<std::size_t>(std::max(d, 0)))) +
                     ", expected rank*A_d/d! = " + format_rational(want);
    }
    const auto& w = sheaf.weight(i);
    if ((s.rank != w.mult || s.rank <= 0) && rank_witness.empty()) {
      rank_witness = who + " has rank " + std::to_string(s.rank) +
                     " but its weight has multiplicity " + std::to_string(w.mult);
    }
    if (w.weight.size() != sheaf.datum.torus_rank && weight_witness.empty()) {
      weight_witness = who + " has a weight of the wrong length";
    }
  }
  add("hilbert_degree", deg_witness.empty(), deg_witness);
  add("leading_coefficient", lead_witness.empty(), lead_witness);
  add("rank_multiplicity", rank_witness.empty(), rank_witness);
  add("weight_length", weight_witness.empty(), weight_witness);

  bool spans = weight_witness.empty() && weights_span(sheaf.rep, sheaf.datum.torus_rank);
  add("spanning", spans, "weights do not span the character space");

  if (deg_witness.empty() && lead_witness.empty() && variety_ok && spans) {
    try {
      (void)psi_functional(sheaf);
      add("psi_consistency", true);
    } catch (const Error& e) {
      add("psi_consistency", false, e.what());
    }
  } else {
    add("psi_consistency", false, "skipped: prerequisites failed");
  }

  std::string block_witness;
  std::vector<int> seen(sheaf.size(), 0);
  for (const auto& b : sheaf.blocks) {
    if (b.empty()) block_witness = "empty block";
    for (auto i : b) {
      if (i >= sheaf.size()) {
        block_witness = "block index out of range";
        continue;
      }
      ++seen[i];
      if (sheaf.summands[i].factor != sheaf.summands[b.front()].factor) {
        block_witness = "block mixes factors";
      }
    }
  }
  for (std::size_t i = 0; i < seen.size() && block_witness.empty(); ++i) {
    if (seen[i] != 1) block_witness = "summand " + std::to_string(i) + " not in exactly one block";
  }
  add("blocks", block_witness.empty(), block_witness);
  return report;
}

}  // namespace ghn
