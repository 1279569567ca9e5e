#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ghn {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense rational vector. Used for cocharacter-space vectors and covectors
/// alike; which one is meant follows from context.
using Vec = std::vector<Rational>;
using IntVec = std::vector<std::int64_t>;

/// Parses "p/q", "p" or "-p/q". Throws Error(ParseError) on malformed input
/// or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational dot(std::span<const Rational> a, std::span<const std::int64_t> b);

Vec to_rational(std::span<const std::int64_t> v);
Vec scaled(std::span<const Rational> v, const Rational& factor);
Vec add(std::span<const Rational> a, std::span<const Rational> b);
Vec sub(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);

/// Converts an integral mpz to int64, throwing Error(InvalidInput) on overflow.
std::int64_t to_int64(const Integer& value);

/// num/den in lowest terms. mpq_class(num, den) does not reduce, and
/// comparisons assume reduced values.
Rational ratio(long num, long den);

Rational factorial(unsigned n);
int sign(const Rational& value);

}  // namespace ghn
