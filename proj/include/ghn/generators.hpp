#pragma once

#include <cstddef>
#include <random>

#include "ghn/sheaf.hpp"

namespace ghn::gen {

/// Seeded random sheaves for property suites and `--seed` runs. All
/// instances pass validate().

struct GlIdentityOptions {
  int max_dim = 3;
  std::size_t max_summands = 6;
};

/// GL(N) with its identity representation (a direct sum of rank-one
/// summands). Summands are drawn from a few Hilbert polynomial types that
/// differ at random degrees, so ties and deep recursions both occur.
CombinatorialRhoSheaf gl_identity_instance(std::mt19937_64& rng,
                                           const GlIdentityOptions& options = {});

struct RandomInstanceOptions {
  std::size_t max_torus_rank = 4;
  std::size_t max_summands = 8;
  int max_dim = 3;
  /// Only standard (central) representations.
  bool central_only = false;
};

/// A builtin group of small rank with its standard representation, the
/// factors merged into one (non-central) or a weight multiplicity doubled.
/// Degree data come from a random psi so the input is consistent.
CombinatorialRhoSheaf random_instance(std::mt19937_64& rng,
                                      const RandomInstanceOptions& options = {});

/// Central representation whose psi has a nonzero component off the
/// center, so the top functional ell_{d-1} is nonzero.
CombinatorialRhoSheaf central_slope_unstable_instance(std::mt19937_64& rng,
                                                      const RandomInstanceOptions& options = {});

}  // namespace ghn::gen
