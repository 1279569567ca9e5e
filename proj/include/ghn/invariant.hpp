#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ghn/sheaf.hpp"

namespace ghn {

/// Toral filtration induced by a cocharacter: summand i sits in graded
/// degree m_i = -<lambda, chi_i>.
struct WeightedFiltration {
  Cocharacter lambda;
  std::vector<std::int64_t> degrees;
  std::map<std::int64_t, std::vector<std::size_t>, std::greater<>> graded;
};

/// The numerical invariant nu = sqrt(A_d) * L / sqrt(Q), kept exact as the
/// triple (L, Q, A_d). Q = 0 marks a degenerate filtration, read as nu = 0.
struct NuValue {
  RationalPoly L;
  Rational Q;
  Rational A_d = 1;

  bool degenerate() const { return Q == 0; }
  /// +1, 0 or -1 according to nu in the asymptotic order.
  int sign() const { return degenerate() ? 0 : leading_sign(L); }
  friend bool operator==(const NuValue&, const NuValue&) = default;
};

WeightedFiltration filtration_from_cochar(const CombinatorialRhoSheaf& sheaf,
                                          const Cocharacter& lambda);

/// Precomputes the block-centered reduced polynomials rk_i (p_i - p_block)
/// so that nu can be evaluated repeatedly for the same sheaf.
class NuEvaluator {
 public:
  explicit NuEvaluator(const CombinatorialRhoSheaf& sheaf);

  NuValue operator()(std::span<const std::int64_t> lambda) const;
  NuValue operator()(std::span<const Rational> lambda) const;

 private:
  std::vector<IntVec> weights_;
  std::vector<std::int64_t> ranks_;
  std::vector<RationalPoly> centered_;  // rk_i * (p_i - p_block(i))
  Rational degree_;
};

NuValue nu(const CombinatorialRhoSheaf& sheaf, const Cocharacter& lambda);

/// nu computed from the graded pieces: sum over blocks and degrees m of
/// m * rk(gr_m) * (p(gr_m) - p(block)). Agrees with nu() exactly.
NuValue nu_from_graded(const CombinatorialRhoSheaf& sheaf, const Cocharacter& lambda);

struct EllFunctional {
  int degree = 0;
  Vec covector;
};

/// Degree-e parts of the numerator of nu as covectors on the cocharacter
/// space, for e = d-1 down to 0: L(lambda) = sum_e ell_e(lambda) n^e.
std::vector<EllFunctional> ell_functionals(const CombinatorialRhoSheaf& sheaf);

/// Semistability within toral filtrations: every ell_e vanishes.
bool is_semistable(const CombinatorialRhoSheaf& sheaf);

/// Exact comparison of nu values in the asymptotic order.
std::strong_ordering compare_nu(const NuValue& a, const NuValue& b);

}  // namespace ghn
