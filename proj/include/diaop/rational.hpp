#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace diaop {

using BigInt = boost::multiprecision::mpz_int;

/// Exact fraction, always stored reduced with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;

/// Serializes as "p/q", or "p" when q = 1.
std::string to_string(const Rational &r);

/// Parses "p/q" or "p" (optional leading sign, no whitespace).
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// -1, 0 or 1.
int sign(const Rational &r);

Rational factorial(std::size_t n);
Rational binomial(std::size_t n, std::size_t k);

/// Binomial coefficients C(n, 0..n) as one Pascal row.
std::vector<Rational> binomial_row(std::size_t n);

} // namespace diaop
