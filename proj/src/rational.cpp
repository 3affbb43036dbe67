#include "diaop/rational.hpp"

#include "diaop/error.hpp"

#include <cctype>

namespace diaop {

std::string to_string(const Rational &r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

namespace {

// Reads an optionally signed run of digits starting at pos.
BigInt read_integer(std::string_view text, std::size_t &pos, bool allow_sign) {
  const std::string input(text);
  const std::size_t start = pos;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    ++pos;
  }
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (pos == digits) {
    throw ParseError(input, pos, "expected digits");
  }
  std::string token(text.substr(start, pos - start));
  if (token.front() == '+') {
    token.erase(0, 1);
  }
  return BigInt(token);
}

} // namespace

Rational parse_rational(std::string_view text) {
  const std::string input(text);
  if (text.empty()) {
    throw ParseError(input, 0, "empty rational");
  }
  std::size_t pos = 0;
  const BigInt num = read_integer(text, pos, true);
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_pos = pos;
    den = read_integer(text, pos, false);
    if (den == 0) {
      throw ParseError(input, den_pos, "zero denominator");
    }
  }
  if (pos != text.size()) {
    throw ParseError(input, pos, "unexpected character '" +
                                     std::string(1, text[pos]) + "'");
  }
  return Rational(num, den);
}

int sign(const Rational &r) { return r.sign(); }

Rational factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
  }
  return Rational(f);
}

Rational binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return Rational(0);
  }
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
  }
  return Rational(c);
}

std::vector<Rational> binomial_row(std::size_t n) {
  std::vector<Rational> row(n + 1);
  BigInt c = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    row[k] = Rational(c);
    c = c * (n - k) / (k + 1);
  }
  return row;
}

} // namespace diaop
