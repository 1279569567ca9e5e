#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "ghn/rational.hpp"

namespace ghn {

/// Exact polynomial in one variable n with rational coefficients, stored in
/// the plain monomial basis: coeff(i) multiplies n^i. Trailing zeros are
/// never stored, so the zero polynomial has no coefficients.
///
/// Comparison is the asymptotic order "p(n) >= q(n) for n >> 0": p > q iff
/// the highest nonzero coefficient of p - q is positive.
class RationalPoly {
 public:
  static constexpr int kZeroDegree = -1;

  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  /// c * n^k
  static RationalPoly monomial(const Rational& c, unsigned k);

  /// kZeroDegree for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of n^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational leading() const;

  /// i! * coeff(i), the normalized coefficient a_i of a Hilbert polynomial
  /// written as sum a_i n^i / i!.
  Rational normalized_coeff(std::size_t i) const;

  Rational evaluate(const Rational& n) const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& c);
  RationalPoly& operator/=(const Rational& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }
  friend RationalPoly operator/(RationalPoly a, const Rational& c) { return a /= c; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  RationalPoly operator-() const;

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend std::strong_ordering operator<=>(const RationalPoly& a,
                                          const RationalPoly& b);

  /// Human-readable form, e.g. "1/6 n^3 + n^2 - 1/2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Sign of the leading coefficient: +1, -1, or 0 for the zero polynomial.
int leading_sign(const RationalPoly& p);

/// Asymptotic comparison, identical to operator<=>.
std::strong_ordering poly_cmp(const RationalPoly& p, const RationalPoly& q);

/// P / a_d where a_d = d! * leading coefficient. Throws ZeroPolynomial or
/// NonPositiveLeading.
RationalPoly reduced_hp(const RationalPoly& p);

/// mu_i = a_i / a_d for 0 <= i < d. Throws IndexOutOfRange or
/// NonPositiveLeading (ZeroPolynomial for p = 0).
Rational slope(const RationalPoly& p, int i);

/// Binomial(n + k, d) as a polynomial in n: the Hilbert polynomial of
/// O(k) on projective d-space.
RationalPoly binomial_poly(unsigned d, const Rational& k);

}  // namespace ghn
