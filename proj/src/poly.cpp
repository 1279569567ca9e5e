#include "ghn/poly.hpp"

#include <sstream>

#include "ghn/error.hpp"

namespace ghn {

RationalPoly::RationalPoly(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs)
    : coeffs_(coeffs) {
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) {
  return RationalPoly(std::vector<Rational>{c});
}

RationalPoly RationalPoly::monomial(const Rational& c, unsigned k) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return RationalPoly(std::move(coeffs));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational RationalPoly::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational RationalPoly::normalized_coeff(std::size_t i) const {
  return factorial(static_cast<unsigned>(i)) * coeff(i);
}

Rational RationalPoly::evaluate(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * n + *it;
  }
  return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RationalPoly& RationalPoly::operator/=(const Rational& c) {
  for (auto& x : coeffs_) x /= c;
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

std::strong_ordering operator<=>(const RationalPoly& a, const RationalPoly& b) {
  std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t k = n; k-- > 0;) {
    int s = sgn(a.coeff(k) - b.coeff(k));
    if (s > 0) return std::strong_ordering::greater;
    if (s < 0) return std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::string RationalPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << format_rational(mag);
      if (k > 0) os << " ";
    }
    if (k == 1) os << "n";
    if (k > 1) os << "n^" << k;
  }
  return os.str();
}

int leading_sign(const RationalPoly& p) { return sgn(p.leading()); }

std::strong_ordering poly_cmp(const RationalPoly& p, const RationalPoly& q) {
  return p <=> q;
}

namespace {

void require_positive_leading(const RationalPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "zero polynomial");
  if (p.leading() <= 0) {
    throw Error(Errc::NonPositiveLeading,
                "leading coefficient of " + p.to_string() + " is not positive");
  }
}

}  // namespace

RationalPoly reduced_hp(const RationalPoly& p) {
  require_positive_leading(p);
  return p / p.normalized_coeff(static_cast<std::size_t>(p.degree()));
}

Rational slope(const RationalPoly& p, int i) {
  require_positive_leading(p);
  int d = p.degree();
  if (i < 0 || i >= d) {
    throw Error(Errc::IndexOutOfRange, "slope index " + std::to_string(i) +
                                           " outside [0, " + std::to_string(d - 1) + "]");
  }
  return p.normalized_coeff(static_cast<std::size_t>(i)) /
         p.normalized_coeff(static_cast<std::size_t>(d));
}

RationalPoly binomial_poly(unsigned d, const Rational& k) {
  // prod_{j=1..d} (n + k + j) / d!
  RationalPoly acc = RationalPoly::constant(1);
  for (unsigned j = 1; j <= d; ++j) {
    acc = acc * RationalPoly{k + j, Rational(1)};
  }
  return acc / factorial(d);
}

}  // namespace ghn
