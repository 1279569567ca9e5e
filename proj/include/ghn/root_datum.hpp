#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ghn/linalg.hpp"
#include "ghn/rational.hpp"

namespace ghn {

/// Split reductive root datum in fixed torus coordinates Q^{n_T}.
///
/// Cocharacter-space vectors (central basis, coroots, coweights) and
/// covectors (roots) are both stored as rational coordinate lists; the
/// pairing <chi, v> is the plain dot product.
struct GroupDatum {
  std::size_t torus_rank = 0;
  std::vector<Vec> central_basis;
  std::vector<Vec> simple_roots;
  std::vector<Vec> simple_coroots;
  std::vector<Vec> fund_coweights;
  /// 1-based label of each simple root in the datum this one descends from.
  /// Levi sub-data keep the labels of the roots they retain.
  std::vector<std::size_t> root_labels;
  std::string name;

  std::size_t semisimple_rank() const noexcept { return simple_roots.size(); }
  /// C(i, j) = <alpha_i, alpha_j^vee>.
  Matrix cartan_matrix() const;
};

struct WeightEntry {
  IntVec weight;
  std::int64_t mult = 1;
};

/// A representation into a product of general linear groups, given by the
/// torus weights of each factor.
struct Representation {
  std::vector<std::vector<WeightEntry>> factors;

  std::size_t factor_count() const noexcept { return factors.size(); }
  /// r_j: dimension of factor j counted with multiplicity.
  std::int64_t dim(std::size_t factor) const;
  /// Number of weight entries over all factors.
  std::size_t entry_count() const;
};

/// Integer cocharacter G_m -> T.
struct Cocharacter {
  IntVec coords;

  Vec as_rational() const { return to_rational(coords); }
  bool is_zero() const;
  bool is_primitive() const;
  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
  friend auto operator<=>(const Cocharacter&, const Cocharacter&) = default;
};

std::string to_string(const Cocharacter& c);

// -- parabolic / Levi combinatorics ---------------------------------------

/// Labels j with <alpha_j, lambda> > 0. Throws NotDominant if some simple
/// root pairs negatively.
std::vector<std::size_t> parabolic_type(const GroupDatum& datum,
                                        std::span<const Rational> lambda);

/// Central basis plus the fundamental coweights of parabolic_type: a basis
/// of the cocharacter space of the center of the Levi of lambda.
std::vector<Vec> levi_center_basis(const GroupDatum& datum,
                                   std::span<const Rational> lambda);

/// s_j(v) = v - <alpha_j, v> alpha_j^vee, with j a position (not a label).
Vec reflect_cocharacter(const GroupDatum& datum, std::size_t j,
                        std::span<const Rational> v);
/// s_j(chi) = chi - <chi, alpha_j^vee> alpha_j.
Vec reflect_character(const GroupDatum& datum, std::size_t j,
                      std::span<const Rational> chi);

struct DominantConjugate {
  Vec dominant;
  /// Positions of the simple reflections applied to lambda, in order.
  std::vector<std::size_t> word;
};

/// Moves lambda into the closed dominant chamber by simple reflections.
DominantConjugate dominant_conjugate(const GroupDatum& datum,
                                     std::span<const Rational> lambda);

/// Root datum of the Levi subgroup centralizing lambda, on the same torus.
/// lambda need not be dominant: it is conjugated into the dominant chamber,
/// the Levi there keeps the simple roots orthogonal to it, and the result is
/// conjugated back. The central basis grows by the fundamental coweights of
/// the dropped roots, and coweights are recomputed inside the span of the
/// retained coroots.
GroupDatum levi_subdatum(const GroupDatum& datum,
                         std::span<const Rational> lambda);

// -- representation-induced geometry --------------------------------------

/// delta ._chi gamma = sum over weights (with multiplicity) of
/// <delta, chi> <gamma, chi>.
Rational chi_inner(const Representation& rep, std::span<const Rational> delta,
                   std::span<const Rational> gamma);

Matrix gram_matrix(const Representation& rep, std::size_t torus_rank);

/// Orthogonal projection (for ._chi) onto the ._chi-orthogonal complement of
/// the central span. Throws DegenerateForm when the Gram matrix is singular.
Vec pi_z(const GroupDatum& datum, const Representation& rep,
         std::span<const Rational> v);

/// The positive multiple of v with coprime integer entries. Throws
/// ZeroVector.
Cocharacter primitive_scale(std::span<const Rational> v);

/// Q-basis of the characters of G: covectors killing every simple coroot.
std::vector<Vec> character_group_basis(const GroupDatum& datum);

/// Whether the weights of rep span the covector space.
bool weights_span(const Representation& rep, std::size_t torus_rank);

/// Fundamental coweights inside the span of the given coroots, dual to the
/// given roots. Throws DegenerateForm if the Cartan matrix is singular.
std::vector<Vec> coweights_in_coroot_span(const std::vector<Vec>& roots,
                                          const std::vector<Vec>& coroots,
                                          std::size_t torus_rank);

/// Human-readable list of violated datum invariants (empty when sound).
std::vector<std::string> datum_issues(const GroupDatum& datum);

// -- builtin groups -------------------------------------------------------

/// Parses `factor ("x" factor)*` with factor in gl(k), sl(k), so(k), sp(2k).
/// Throws ParseError or UnsupportedType.
GroupDatum builtin_datum(std::string_view spec);

/// The standard representation of each factor of a builtin product, one
/// general linear factor per group factor.
Representation standard_representation(std::string_view spec);

}  // namespace ghn
