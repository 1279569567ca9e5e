#pragma once

#include <string>
#include <vector>

#include "ghn/fixtures.hpp"
#include "ghn/json_io.hpp"
#include "ghn/sheaf.hpp"

namespace ghn::test {

inline CombinatorialRhoSheaf load_fixture(const std::string& name) {
  return io::parse_sheaf(*fixture(name));
}

/// GL(N) with the identity representation and one rank-1 summand per
/// Hilbert polynomial.
inline CombinatorialRhoSheaf gl_identity(const VarietyDescriptor& variety,
                                         const std::vector<RationalPoly>& hps) {
  std::string spec = "gl(" + std::to_string(hps.size()) + ")";
  std::vector<Summand> summands;
  for (std::size_t i = 0; i < hps.size(); ++i) summands.push_back({0, i, hps[i], 1, {}});
  return make_sheaf(variety, builtin_datum(spec), standard_representation(spec),
                    std::move(summands));
}

/// Hilbert polynomial on projective d-space with a_{d-1} chosen so that the
/// summand has c-value c, plus the given lower coefficients.
inline RationalPoly hp_with_c(int d, const Rational& c, std::vector<Rational> lower = {}) {
  VarietyDescriptor v = projective_space(d);
  std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
  for (std::size_t e = 0; e < lower.size() && e + 1 < coeffs.size(); ++e) coeffs[e] = lower[e];
  coeffs[static_cast<std::size_t>(d)] = 1 / factorial(static_cast<unsigned>(d));
  coeffs[static_cast<std::size_t>(d - 1)] = (c + v.todd_line) / factorial(static_cast<unsigned>(d - 1));
  return RationalPoly(std::move(coeffs));
}

inline Rational q(long num, long den = 1) { return ratio(num, den); }

inline Vec vq(std::initializer_list<Rational> xs) { return Vec(xs); }

}  // namespace ghn::test
