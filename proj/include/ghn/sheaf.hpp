#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ghn/poly.hpp"
#include "ghn/root_datum.hpp"

namespace ghn {

/// Polarized smooth projective variety, reduced to the numbers the
/// invariants need: dimension, H^d, and the degree-one Todd term t_1.H^{d-1}.
struct VarietyDescriptor {
  int dim = 1;
  Rational degree = 1;      // A_d = H^d
  Rational todd_line = 1;   // t_1 . H^{d-1}
  std::string name;
};

/// Projective d-space with the hyperplane class: A_d = 1, t_1.H^{d-1} = (d+1)/2.
VarietyDescriptor projective_space(int d);

/// Hilbert polynomial of the structure sheaf of projective d-space.
RationalPoly projective_structure_hp(int d);

/// One weight space of the torus-diagonalized sheaf.
struct Summand {
  std::size_t factor = 0;
  std::size_t index = 0;
  RationalPoly hp;
  std::int64_t rank = 1;
  std::string label;
};

using Block = std::vector<std::size_t>;
using Partition = std::vector<Block>;

/// A rho-sheaf whose G-reduction over the big open set is a T-reduction:
/// one summand per weight entry of the representation, in factor-major
/// order. `datum` is the (Levi sub-)datum the sheaf is currently viewed
/// under and `blocks` the matching refinement of the factor partition.
struct CombinatorialRhoSheaf {
  VarietyDescriptor variety;
  GroupDatum datum;
  Representation rep;
  std::vector<Summand> summands;
  Partition blocks;

  const WeightEntry& weight(std::size_t summand) const {
    const auto& s = summands[summand];
    return rep.factors[s.factor][s.index];
  }
  std::size_t size() const noexcept { return summands.size(); }
};

/// One block per representation factor.
Partition factor_partition(const Representation& rep);

/// Assembles a sheaf with factor blocks. Summands may be given in any order;
/// they are sorted into factor-major order. Throws InvalidInput when the
/// summands do not match the weight entries one to one.
CombinatorialRhoSheaf make_sheaf(VarietyDescriptor variety, GroupDatum datum,
                                 Representation rep, std::vector<Summand> summands);

/// Reduced Hilbert polynomial of one summand.
RationalPoly summand_reduced(const CombinatorialRhoSheaf& sheaf, std::size_t i);
/// Total Hilbert polynomial of a block.
RationalPoly block_hp(const CombinatorialRhoSheaf& sheaf, const Block& block);

/// c_i = A_d * mu_{d-1}(hp_i) - t_1.H^{d-1}; the first Chern class degree of
/// the summand divided by its rank.
std::vector<Rational> c_values(const CombinatorialRhoSheaf& sheaf);

/// The vector psi in the cocharacter space with <psi, chi_i> = c_i for
/// every summand. Throws InconsistentDegrees or UnderdeterminedPsi.
Vec psi_functional(const CombinatorialRhoSheaf& sheaf);

/// Pairings of psi with character_group_basis(datum).
std::vector<Rational> degree(const CombinatorialRhoSheaf& sheaf);

/// Whether every central basis vector acts on each factor through a single
/// weight.
bool is_central(const GroupDatum& datum, const Representation& rep);

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
};

ValidationReport validate(const CombinatorialRhoSheaf& sheaf);

}  // namespace ghn
