#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghn/optimizer.hpp"

namespace ghn {

struct FiltrationStep {
  Cocharacter lambda;
  int leading_degree = 0;
  Partition blocks_before;
  Partition blocks_after;
};

struct JumpingPoint {
  IntVec weight;
  std::vector<std::size_t> summands;
};

/// Lexicographic Z^q-filtration produced by the recursive construction.
/// Summand i carries the weight vector (-<lambda_k, chi_i>)_k; jumping
/// points are the distinct weight vectors in descending lexicographic order.
struct LexFiltration {
  std::vector<FiltrationStep> steps;
  std::vector<IntVec> summand_weights;
  std::vector<JumpingPoint> jumping_points;
  /// Non-fatal observations, e.g. a leading degree that went up.
  std::vector<std::string> warnings;

  std::size_t q() const noexcept { return steps.size(); }
};

/// Splits every block of the sheaf by the restriction of its weights to the
/// center of the Levi of lambda (taken inside the sheaf's current datum).
/// Blocks are never merged.
Partition refine_blocks(const CombinatorialRhoSheaf& sheaf, const Cocharacter& lambda);

/// The sheaf viewed as a graded Levi sheaf after lambda: Levi sub-datum and
/// refined blocks.
CombinatorialRhoSheaf associated_graded(const CombinatorialRhoSheaf& sheaf,
                                        const Cocharacter& lambda);

/// Iterates leading_cochar through Levi refinements until the blocks are
/// semistable. Throws InternalNonRefinement if a step does not refine.
LexFiltration ghn_filtration(const CombinatorialRhoSheaf& sheaf);

/// The final graded Levi sheaf reached by ghn_filtration.
CombinatorialRhoSheaf final_graded(const CombinatorialRhoSheaf& sheaf,
                                   const LexFiltration& lex);

/// Partial unions of the jumping-point summand sets, largest weight first.
std::vector<std::vector<std::size_t>> unweighted_chain(const LexFiltration& lex);

/// Classical Gieseker-Harder-Narasimhan filtration of a direct sum of
/// semistable summands: group by reduced Hilbert polynomial, sort
/// descending, take partial unions. Requires a single general linear factor
/// whose weights are distinct coordinate vectors of multiplicity one.
/// Throws WrongGroupShape.
std::vector<std::vector<std::size_t>> classical_hn_oracle(const CombinatorialRhoSheaf& sheaf);

/// Weights L (mu_e(summand) - mu_e(F)) of the weighted leading term
/// filtration, e the largest index where the slopes differ and L the least
/// positive rational making every L mu_e integral. Throws WrongGroupShape
/// or SemistableInput.
IntVec leading_term_weights(const CombinatorialRhoSheaf& sheaf);

}  // namespace ghn
