#pragma once

#include <cstdint>
#include <optional>

#include "ghn/invariant.hpp"

namespace ghn {

struct LeadingTerm {
  Cocharacter lambda;
  int leading_degree = 0;
  NuValue value;
};

/// nu-maximizing cocharacter ray of the sheaf under its current blocks.
///
/// With e* the top degree whose functional ell_{e*} is nonzero, the leading
/// coefficient of nu(lambda) is ell_{e*}(lambda) / sqrt(lambda^T G lambda)
/// (G the multiplicity-weighted Gram matrix). By Cauchy-Schwarz in the inner
/// product G, its maximum over the whole cocharacter space is attained on the
/// single ray G^{-1} ell_{e*}. Toral filtrations put no parabolic constraint
/// on lambda, so this unconstrained critical point is the global maximizer,
/// and uniqueness of the ray leaves nothing for lower degrees to break.
///
/// Returns nullopt when the sheaf is semistable. Throws DegenerateForm when
/// the weights do not span.
std::optional<LeadingTerm> leading_cochar(const CombinatorialRhoSheaf& sheaf);

struct BruteForceOptions {
  std::int64_t bound = 3;
  /// Refuse to enumerate more than this many lattice points.
  std::uint64_t max_candidates = 20'000'000;
  unsigned threads = 1;
};

struct BruteForceResult {
  Cocharacter lambda;
  NuValue value;
};

/// Exhaustive maximum of nu over the box [-bound, bound]^{n_T}, evaluated
/// straight from the definition. Ties (equal nu) prefer primitive vectors,
/// then the lexicographically smallest. nullopt when no candidate has
/// positive nu. Throws SearchSpaceTooLarge.
std::optional<BruteForceResult> brute_force_max(const CombinatorialRhoSheaf& sheaf,
                                                const BruteForceOptions& options);

/// Primitive ray of pi_Z(psi): the direction of the slope-canonical
/// parabolic reduction. nullopt when pi_Z(psi) = 0. Throws NotCentral.
std::optional<Cocharacter> slope_canonical(const CombinatorialRhoSheaf& sheaf);

}  // namespace ghn
