#pragma once

#include "diaop/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace diaop {

/// Degree of a polynomial; std::nullopt marks the zero polynomial, which
/// compares as "below" every k.
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over the rationals. Index k of the
/// coefficient vector holds the coefficient of x^k. Trailing zeros are
/// stripped on construction, so the zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational &c);
  /// c * x^k
  static Polynomial monomial(std::size_t k, const Rational &c = Rational(1));
  /// x
  static Polynomial x();

  const std::vector<Rational> &coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  Rational coeff(std::size_t k) const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Degree degree() const noexcept;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational &x) const;

  Polynomial &operator+=(const Polynomial &other);
  Polynomial &operator-=(const Polynomial &other);
  Polynomial &operator*=(const Polynomial &other);
  Polynomial &operator*=(const Rational &scalar);
  Polynomial &operator/=(const Rational &scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial &b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational &s) { return a *= s; }
  friend Polynomial operator*(const Rational &s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Rational &s) { return a /= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend bool operator==(const Polynomial &a, const Polynomial &b) = default;

private:
  void normalize();

  std::vector<Rational> coeffs_;
};

Polynomial add(const Polynomial &p, const Polynomial &q);
Polynomial mul(const Polynomial &p, const Polynomial &q);
/// k-th derivative; zero when k > deg p.
Polynomial derivative(const Polynomial &p, std::size_t k = 1);
Rational evaluate(const Polynomial &p, const Rational &x);
/// Integer power p^e.
Polynomial pow(const Polynomial &p, std::size_t e);

/// Euclidean division; throws PreconditionError for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial &num,
                                         const Polynomial &den);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial &p, const Polynomial &q);
Polynomial monic(const Polynomial &p);

/// Degree-compare helper used by the degree profiles: true iff deg p == k.
bool has_degree(const Polynomial &p, std::size_t k);
/// True iff p is zero or deg p < k.
bool degree_below(const Polynomial &p, std::size_t k);
/// True iff p is zero or deg p <= k.
bool degree_at_most(const Polynomial &p, std::size_t k);

/// Human-readable form, e.g. "-5/8*x^4 + x - 1/2".
std::string to_string(const Polynomial &p);
/// LaTeX form, e.g. "-\frac{4}{105}x^{2}-\frac{1}{105}".
std::string to_latex(const Polynomial &p);
std::string to_latex(const Rational &r);
/// Comma-joined ascending coefficient strings, e.g. "0,-36,0,24".
std::string to_csv(const Polynomial &p);
/// Parses the comma-joined ascending form (empty string or "0" is zero).
Polynomial parse_polynomial_csv(std::string_view text);

// Real-root machinery ---------------------------------------------------

/// p / gcd(p, p'), monic. Throws PreconditionError for p = 0.
Polynomial square_free_part(const Polynomial &p);

/// Sturm chain p, p', -rem(...), ... with each element scaled by a positive
/// constant to integer content 1.
std::vector<Polynomial> sturm_chain(const Polynomial &p);

/// Number of distinct real roots of a square-free p, from sign variations
/// of the Sturm chain at -inf and +inf. Throws PreconditionError for p = 0
/// or when gcd(p, p') is non-constant.
std::size_t count_real_roots(const Polynomial &p);

/// Only real zeros (counted without multiplicity). Constants, including the
/// zero polynomial, count as hyperbolic.
bool is_hyperbolic(const Polynomial &p);

} // namespace diaop
