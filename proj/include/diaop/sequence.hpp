#pragma once

#include "diaop/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace diaop {

/// An eigenvalue sequence {a_n}, either closed-form or an explicit prefix.
class SequenceSpec {
public:
  struct Explicit {
    std::vector<Rational> values;
  };
  /// a_n = p(n)
  struct PolynomialInN {
    Polynomial p;
  };
  /// a_n = c * r^n
  struct Geometric {
    Rational r;
    Rational c{1};
  };
  /// a_n = c / n!
  struct ReciprocalFactorial {
    Rational c{1};
  };
  /// a_n = (-1)^n * inner(n)
  struct SignAlternating {
    std::shared_ptr<const SequenceSpec> inner;
  };

  using Kind = std::variant<Explicit, PolynomialInN, Geometric,
                            ReciprocalFactorial, SignAlternating>;

  SequenceSpec(Kind kind) : kind_(std::move(kind)) {}

  static SequenceSpec explicit_values(std::vector<Rational> values) {
    return SequenceSpec(Explicit{std::move(values)});
  }
  static SequenceSpec polynomial(Polynomial p) {
    return SequenceSpec(PolynomialInN{std::move(p)});
  }
  static SequenceSpec geometric(Rational r, Rational c = Rational(1)) {
    return SequenceSpec(Geometric{std::move(r), std::move(c)});
  }
  static SequenceSpec reciprocal_factorial(Rational c = Rational(1)) {
    return SequenceSpec(ReciprocalFactorial{std::move(c)});
  }
  static SequenceSpec alternating(SequenceSpec inner) {
    return SequenceSpec(
        SignAlternating{std::make_shared<const SequenceSpec>(std::move(inner))});
  }

  const Kind &kind() const noexcept { return kind_; }

  /// Largest evaluable length (Explicit only); nullopt for closed forms.
  std::optional<std::size_t> length() const;

  /// Exact a_n. Throws PreconditionError outside an Explicit prefix.
  Rational operator()(std::size_t n) const;

  /// a_0..a_{count-1}
  std::vector<Rational> prefix(std::size_t count) const;

  /// Canonical expression in the CLI grammar (round-trips through the parser).
  std::string expression() const;

private:
  Kind kind_;
};

Rational eval_sequence(const SequenceSpec &spec, std::size_t n);

/// Parses the sequence-expression grammar:
///   poly:<c0>,<c1>,...      a_n = c0 + c1 n + ...
///   list:<v0>,<v1>,...      explicit prefix
///   geom:<r>[:<c>]          c r^n
///   recip-factorial[:<c>]   c / n!
///   alt:<expr>              (-1)^n expr
/// Throws ParseError with the offending character offset.
SequenceSpec parse_sequence(std::string_view text);

} // namespace diaop
