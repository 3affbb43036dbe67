#pragma once

#include "diaop/basis.hpp"
#include "diaop/operator.hpp"
#include "diaop/sequence.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace diaop {

// Multiplier-sequence diagnostics. Everything here certifies negatives only:
// a Turan violation, an irregular sign pattern, a failed monotonicity gate or
// a counterexample each prove the sequence is not a multiplier sequence.
// Passing every check proves nothing.

struct TuranViolation {
  std::size_t k;
  /// gamma_{k+1}^2 - gamma_k gamma_{k+2} (< 0)
  Rational value;
};

enum class SignPattern {
  NonNegative,
  NonPositive,
  AlternatingFromEven, ///< (-1)^k |gamma_k|
  AlternatingFromOdd,  ///< (-1)^{k+1} |gamma_k|
  Irregular
};

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string to_string(SignPattern pattern);
std::string to_string(CheckStatus status);

std::vector<TuranViolation> turan_check(std::span<const Rational> prefix);

/// Zeros are wildcards. Patterns are tried in declaration order.
SignPattern sign_pattern(std::span<const Rational> prefix);

/// sum a_k c_k x^k for p = sum c_k x^k
Polynomial apply_sequence_monomial(const SequenceSpec &eigen, const Polynomial &p);
/// Expand in the basis, scale coordinate n by a_n, reconstruct.
Polynomial apply_sequence_basis(const SequenceSpec &eigen, const Basis &basis,
                                const Polynomial &p);

struct Corpus {
  std::uint64_t seed = 0;
  std::size_t max_degree = 0;
  std::vector<Polynomial> polynomials;
};

/// Real-rooted test inputs: 1, (x+1)^n, x^n, prod_j (x - (n-1-2j)), H_n, P_n
/// for 1 <= n <= max_degree, then seeded products of linear factors with
/// roots on the grid {-3, -5/2, ..., 3}.
Corpus corpus_generate(std::size_t max_degree, std::uint64_t seed);

struct Counterexample {
  std::size_t corpus_index;
  Polynomial input;
  Polynomial image;
  /// Sturm count on the square-free part of the image.
  std::size_t image_real_roots;
  /// Degree of the square-free part (number of distinct complex roots).
  std::size_t image_distinct_roots;
};

/// First corpus element whose image is not hyperbolic. nullopt means none
/// was found. Throws PreconditionError if a corpus element exceeds
/// op.max_order().
std::optional<Counterexample> hyperbolicity_sample(const OperatorRep &op,
                                                   const Corpus &corpus);

struct IncreasingCheck {
  CheckStatus status = CheckStatus::NotApplicable;
  std::optional<std::size_t> first_violation;
};

/// For a_0 > 0 and a sequence interpolated by a non-constant polynomial,
/// requires a_k < a_{k+1} for k < window. Otherwise NotApplicable.
IncreasingCheck increasing_eigenvalue_check(const SequenceSpec &eigen, std::size_t window);

struct FinalDegreeCheck {
  /// NotApplicable: the hypothesis 0 < a_n < a_{n+1} fails in the window.
  CheckStatus status = CheckStatus::NotApplicable;
  std::optional<std::size_t> first_failure;
  std::optional<std::size_t> hypothesis_failure;
};

/// With a_n recovered from the operator's leading values, checks
/// 0 < a_0 < a_1 < ... < a_N first, then deg Q_k = k for 0 <= k <= m
/// (interpolation_degree = m) or for every k <= N (nullopt: not
/// interpolatable).
FinalDegreeCheck final_degree_check(const OperatorRep &op,
                                    std::optional<std::size_t> interpolation_degree);

/// n-th coefficient of e^{-x} sum_k a_k x^k / k!:
///   sum_{j<=n} (-1)^{n-j} / (n-j)! * a_j / j!
Rational exp_weighted_coefficient(const SequenceSpec &eigen, std::size_t n);

struct MsReport {
  std::string eigen;
  std::string basis;
  std::size_t max_order = 0;
  std::vector<Rational> prefix;
  std::vector<TuranViolation> turan_violations;
  SignPattern sign_pattern = SignPattern::Irregular;
  IncreasingCheck increasing_check;
  std::optional<Counterexample> counterexample;
  std::uint64_t seed = 0;
  std::size_t corpus_size = 0;

  /// True when at least one negative certificate is present.
  bool certified_not_multiplier_sequence() const;
};

/// Runs every check. prefix_length and max_order are clamped to an explicit
/// sequence's length. Throws PreconditionError if fewer than 3 terms remain.
MsReport check_multiplier_sequence(const SequenceSpec &eigen, const Basis &basis,
                                   std::size_t prefix_length, std::size_t max_order,
                                   std::uint64_t seed);

} // namespace diaop
