#include "ghn/rational.hpp"

#include <cctype>
#include <limits>

#include "ghn/error.hpp"

namespace ghn {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NonPositiveLeading: return "NonPositiveLeading";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotDominant: return "NotDominant";
    case Errc::DegenerateForm: return "DegenerateForm";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedType: return "UnsupportedType";
    case Errc::InconsistentDegrees: return "InconsistentDegrees";
    case Errc::UnderdeterminedPsi: return "UnderdeterminedPsi";
    case Errc::NotCentral: return "NotCentral";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::WrongGroupShape: return "WrongGroupShape";
    case Errc::SemistableInput: return "SemistableInput";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::InternalNonRefinement: return "InternalNonRefinement";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos
                             ? std::string_view("1")
                             : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+') {
    throw Error(Errc::ParseError,
                "malformed rational '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) {
    throw Error(Errc::ParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational dot(std::span<const Rational> a, std::span<const std::int64_t> b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) acc += a[i] * Rational(static_cast<long>(b[i]));
  }
  return acc;
}

Vec to_rational(std::span<const std::int64_t> v) {
  Vec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

Vec scaled(std::span<const Rational> v, const Rational& factor) {
  Vec out(v.begin(), v.end());
  for (auto& x : out) x *= factor;
  return out;
}

Vec add(std::span<const Rational> a, std::span<const Rational> b) {
  Vec out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(std::span<const Rational> a, std::span<const Rational> b) {
  Vec out(a.begin(), a.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) {
    throw Error(Errc::InvalidInput,
                "integer " + value.get_str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(value.get_si());
}

Rational ratio(long num, long den) {
  if (den == 0) throw Error(Errc::InvalidInput, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

int sign(const Rational& value) { return sgn(value); }

}  // namespace ghn
