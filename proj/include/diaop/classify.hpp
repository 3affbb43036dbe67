#pragma once

#include "diaop/operator.hpp"
#include "diaop/sequence.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace diaop {

/// Why a sequence cannot be interpolated by a polynomial.
enum class ReasonCode {
  BoundedNonConstant,     ///< non-constant with a bounded sub-sequence
  MonotoneWrongDirection, ///< non-negative decreasing or non-positive increasing
  AlternatingNonConstant, ///< non-constant alternating
  NonvanishingDifferences ///< (Delta^n a)_0 != 0 for every n
};

struct InterpolatedDegree {
  std::size_t m;
  friend bool operator==(const InterpolatedDegree &, const InterpolatedDegree &) = default;
};
struct NotInterpolatable {
  ReasonCode reason;
  friend bool operator==(const NotInterpolatable &, const NotInterpolatable &) = default;
};
/// Only evidence from a finite prefix; never a proof.
struct PrefixConsistentWithDegree {
  std::size_t m;
  friend bool operator==(const PrefixConsistentWithDegree &,
                         const PrefixConsistentWithDegree &) = default;
};
using SequenceVerdict =
    std::variant<InterpolatedDegree, NotInterpolatable, PrefixConsistentWithDegree>;

struct FiniteOrderAtMost {
  std::size_t m;
  friend bool operator==(const FiniteOrderAtMost &, const FiniteOrderAtMost &) = default;
};
struct InfiniteOrder {
  friend bool operator==(const InfiniteOrder &, const InfiniteOrder &) = default;
};
struct UndeterminedWithinWindow {
  friend bool operator==(const UndeterminedWithinWindow &,
                         const UndeterminedWithinWindow &) = default;
};
using OperatorVerdict = std::variant<FiniteOrderAtMost, InfiniteOrder, UndeterminedWithinWindow>;

struct ClassificationReport {
  SequenceVerdict sequence_verdict;
  OperatorVerdict operator_verdict;
  /// (Delta^n a)_0 for n = 0..window
  std::vector<Rational> difference_diagonal;
  std::vector<Degree> degree_profile;
  std::vector<std::string> notes;
};

std::string to_string(ReasonCode reason);
std::string to_string(const SequenceVerdict &verdict);
std::string to_string(const OperatorVerdict &verdict);

/// Forward-difference triangle: row r holds Delta^r a_0 .. Delta^r a_{depth-r}.
std::vector<std::vector<Rational>> finite_difference_table(const SequenceSpec &spec,
                                                           std::size_t depth);

/// Exact verdicts for closed forms; Explicit prefixes (and the degenerate
/// c * 0^n) only get PrefixConsistentWithDegree over a_0..a_window.
SequenceVerdict classify_sequence(const SequenceSpec &spec, std::size_t window);

/// Smallest r such that Q_k = 0 for every r < k <= N and the window holds at
/// least r + 1 vanishing slots past r (N >= 2r + 1). nullopt otherwise.
std::optional<std::size_t> finite_order_witness(const OperatorRep &op);

/// Combines the degree profile with the sequence verdict. Finite order is
/// only reported for an interpolated sequence with a window witness.
OperatorVerdict classify_operator(const OperatorRep &op, const SequenceVerdict &verdict);

/// Full report for a diagonal spec: derives the operator on spec.max_order
/// and classifies with window = spec.max_order.
ClassificationReport classify(const DiagonalSpec &spec);

/// Newton form sum_{k<=m} leading[k] * binom(x, k). Throws PreconditionError
/// if leading[k] != 0 for some k > m, or if the result fails to reproduce
/// a_n = eigen_from_leading(leading, n) on the supplied window.
Polynomial interpolating_polynomial(std::span<const Rational> leading, std::size_t m);
/// As above, additionally checked against eval_sequence(spec, n).
Polynomial interpolating_polynomial(std::span<const Rational> leading, std::size_t m,
                                    const SequenceSpec &spec);

/// binom(x, k) = x (x-1) ... (x-k+1) / k!
Polynomial binomial_polynomial(std::size_t k);

/// sum_{k<=n} C(n,k) p(k) (-1)^{n-k}; zero for n > deg p, n! lead(p) at n = deg p.
Rational alternating_binomial_poly_sum(const Polynomial &p, std::size_t n);

} // namespace diaop
