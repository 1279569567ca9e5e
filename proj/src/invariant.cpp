#include "ghn/invariant.hpp"

#include <algorithm>

namespace ghn {

namespace {

std::int64_t pairing(std::span<const std::int64_t> lambda, const IntVec& chi) {
  std::int64_t acc = 0;
  for (std::size_t k = 0; k < chi.size(); ++k) acc += lambda[k] * chi[k];
  return acc;
}

Rational pairing(std::span<const Rational> lambda, const IntVec& chi) {
  return dot(lambda, chi);
}

}  // namespace

WeightedFiltration filtration_from_cochar(const CombinatorialRhoSheaf& sheaf,
                                          const Cocharacter& lambda) {
  WeightedFiltration f;
  f.lambda = lambda;
  for (std::size_t i = 0; i < sheaf.size(); ++i) {
    std::int64_t m = -pairing(lambda.coords, sheaf.weight(i).weight);
    f.degrees.push_back(m);
    f.graded[m].push_back(i);
  }
  return f;
}

NuEvaluator::NuEvaluator(const CombinatorialRhoSheaf& sheaf)
    : centered_(sheaf.size()), degree_(sheaf.variety.degree) {
  for (std::size_t i = 0; i < sheaf.size(); ++i) {
    weights_.push_back(sheaf.weight(i).weight);
    ranks_.push_back(sheaf.summands[i].rank);
  }
  for (const auto& block : sheaf.blocks) {
    RationalPoly block_reduced = reduced_hp(block_hp(sheaf, block));
    for (auto i : block) {
      centered_[i] = (summand_reduced(sheaf, i) - block_reduced) *
                     Rational(static_cast<long>(ranks_[i]));
    }
  }
}

NuValue NuEvaluator::operator()(std::span<const std::int64_t> lambda) const {
  NuValue v;
  v.A_d = degree_;
  std::int64_t q = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    std::int64_t m = -pairing(lambda, weights_[i]);
    if (m == 0) continue;
    q += m * m * ranks_[i];
    v.L += centered_[i] * Rational(static_cast<long>(m));
  }
  v.Q = static_cast<long>(q);
  return v;
}

NuValue NuEvaluator::operator()(std::span<const Rational> lambda) const {
  NuValue v;
  v.A_d = degree_;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    Rational m = -pairing(lambda, weights_[i]);
    if (m == 0) continue;
    v.Q += m * m * Rational(static_cast<long>(ranks_[i]));
    v.L += centered_[i] * m;
  }
  return v;
}

NuValue nu(const CombinatorialRhoSheaf& sheaf, const Cocharacter& lambda) {
  return NuEvaluator(sheaf)(std::span<const std::int64_t>(lambda.coords));
}

NuValue nu_from_graded(const CombinatorialRhoSheaf& sheaf, const Cocharacter& lambda) {
  WeightedFiltration f = filtration_from_cochar(sheaf, lambda);
  NuValue v;
  v.A_d = sheaf.variety.degree;
  for (const auto& block : sheaf.blocks) {
    RationalPoly block_reduced = reduced_hp(block_hp(sheaf, block));
    for (const auto& [m, members] : f.graded) {
      if (m == 0) continue;
      Block piece;
      std::int64_t rk = 0;
      for (auto i : members) {
        if (std::find(block.begin(), block.end(), i) != block.end()) {
          piece.push_back(i);
          rk += sheaf.summands[i].rank;
        }
      }
      if (piece.empty()) continue;
      RationalPoly gr_reduced = reduced_hp(block_hp(sheaf, piece));
      v.L += (gr_reduced - block_reduced) * Rational(static_cast<long>(m * rk));
      v.Q += Rational(static_cast<long>(m * m * rk));
    }
  }
  return v;
}

std::vector<EllFunctional> ell_functionals(const CombinatorialRhoSheaf& sheaf) {
  const int d = sheaf.variety.dim;
  const std::size_t n = sheaf.datum.torus_rank;
  std::vector<EllFunctional> out;
  std::vector<RationalPoly> centered(sheaf.size());
  for (const auto& block : sheaf.blocks) {
    RationalPoly block_reduced = reduced_hp(block_hp(sheaf, block));
    for (auto i : block) {
      centered[i] = (summand_reduced(sheaf, i) - block_reduced) *
                    Rational(static_cast<long>(sheaf.summands[i].rank));
    }
  }
  for (int e = d - 1; e >= 0; --e) {
    EllFunctional ell{e, Vec(n)};
    for (std::size_t i = 0; i < sheaf.size(); ++i) {
      Rational c = centered[i].coeff(static_cast<std::size_t>(e));
      if (c == 0) continue;
      const auto& chi = sheaf.weight(i).weight;
      for (std::size_t k = 0; k < n; ++k) {
        if (chi[k] != 0) ell.covector[k] -= c * Rational(static_cast<long>(chi[k]));
      }
    }
    out.push_back(std::move(ell));
  }
  return out;
}

bool is_semistable(const CombinatorialRhoSheaf& sheaf) {
  auto ells = ell_functionals(sheaf);
  return std::all_of(ells.begin(), ells.end(),
                     [](const EllFunctional& e) { return is_zero(e.covector); });
}

std::strong_ordering compare_nu(const NuValue& a, const NuValue& b) {
  int sa = a.sign();
  int sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Same sign: compare A_a Q_b L_a^2 with A_b Q_a L_b^2, then orient.
  RationalPoly lhs = (a.L * a.L) * (a.A_d * b.Q);
  RationalPoly rhs = (b.L * b.L) * (b.A_d * a.Q);
  auto ord = poly_cmp(lhs, rhs);
  return sa > 0 ? ord : (0 <=> ord);
}

}  // namespace ghn
