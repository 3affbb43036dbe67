#pragma once

#include "diaop/basis.hpp"
#include "diaop/polynomial.hpp"
#include "diaop/sequence.hpp"

#include <optional>
#include <span>
#include <vector>

namespace diaop {

/// Truncated differential representation sum_{k=0}^{N} Q_k(x) D^k.
///
/// Application is exact for inputs of degree <= N (D^k kills anything of
/// degree < k) and refused above that.
class OperatorRep {
public:
  /// Zero operator of order window N.
  explicit OperatorRep(std::size_t max_order = 0);
  /// Takes Q_0..Q_N; an empty list is promoted to the order-0 zero operator.
  explicit OperatorRep(std::vector<Polynomial> q);

  static OperatorRep identity(std::size_t max_order = 0);

  std::size_t max_order() const noexcept { return q_.size() - 1; }
  const std::vector<Polynomial> &coefficients() const noexcept { return q_; }
  /// Q_k; zero for k > N.
  const Polynomial &q(std::size_t k) const;

  /// Largest k with Q_k != 0, nullopt for the zero operator.
  std::optional<std::size_t> order() const;

  /// Same operator on a window of size n: pads with zeros, or drops zero
  /// tail terms. Throws PreconditionError if a nonzero term would be dropped.
  OperatorRep with_window(std::size_t n) const;

  friend bool operator==(const OperatorRep &, const OperatorRep &) = default;

private:
  std::vector<Polynomial> q_;
};

/// Equality of the underlying formal operators: terms beyond the shorter
/// window must be zero in the longer one.
bool same_operator(const OperatorRep &a, const OperatorRep &b);

/// Images T[B_n] for n = 0..N. `diagonal` marks images of the form a_n B_n,
/// which enables the deg Q_k <= k invariant check.
struct ActionTable {
  std::vector<Polynomial> images;
  bool diagonal = false;
};

/// The data (B_n, a_n) with T[B_n] = a_n B_n, n = 0..max_order.
struct DiagonalSpec {
  Basis basis;
  SequenceSpec eigen;
  std::size_t max_order = 8;
};

ActionTable diagonal_action(const DiagonalSpec &spec);

/// Unique Q_0..Q_N with sum_k Q_k B_n^{(k)} = T[B_n] for every n <= N:
///
///   Q_n = ( T[B_n] - sum_{k<n} Q_k B_n^{(k)} ) / B_n^{(n)}
///
/// B_n^{(n)} is the constant n! * lead(B_n), nonzero for a simple basis.
/// For a diagonal action, deg Q_k <= k is asserted on the result.
OperatorRep peetre_derive(const ActionTable &action, const Basis &basis);

/// Shorthand for peetre_derive(diagonal_action(spec), spec.basis).
OperatorRep derive_diagonal(const DiagonalSpec &spec);

/// sum_k Q_k p^{(k)}. Throws PreconditionError if deg p > N.
Polynomial apply(const OperatorRep &op, const Polynomial &p);

/// a o b, expanded with D^k (R g) = sum_i C(k,i) R^{(i)} g^{(k-i)}.
/// The result has max_order a.N + b.N.
OperatorRep compose(const OperatorRep &a, const OperatorRep &b);

/// p(W) = sum_j c_j W^j on a window of target_order. Throws
/// PreconditionError if a nonzero Q_k with k > target_order would be lost.
OperatorRep operator_polynomial(const Polynomial &p, const OperatorRep &w,
                                std::size_t target_order);

/// Q_k^{(k)} = k! [x^k] Q_k for k = 0..N. Throws PreconditionError if some
/// deg Q_k > k.
std::vector<Rational> leading_values(const OperatorRep &op);

/// a_n = sum_{k<=n} C(n,k) Q_k^{(k)}
Rational eigen_from_leading(std::span<const Rational> leading, std::size_t n);

/// Q_n^{(n)} = sum_{k<=n} C(n,k) a_k (-1)^{n-k}, the n-th forward difference
/// of {a_k} at 0.
Rational leading_from_eigen(const SequenceSpec &eigen, std::size_t n);

/// c_n = sum_k C(n,k) a_k
std::vector<Rational> binomial_transform(std::span<const Rational> a);
/// a_n = sum_k C(n,k) c_k (-1)^{n-k}
std::vector<Rational> inverse_binomial_transform(std::span<const Rational> c);

/// sum_k (Q_k^{(k)}/k!) x^k D^k: the same eigenvalues, diagonal on {x^n}.
OperatorRep to_monomial_diagonal(const OperatorRep &op);

struct VerifyReport {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<std::size_t> first_failure;
  /// apply(op, B_n) and a_n B_n at the first failure.
  std::optional<Polynomial> got;
  std::optional<Polynomial> expected;
};

/// Checks apply(op, B_n) = a_n B_n for n <= spec.max_order. Throws
/// PreconditionError when spec.max_order > op.max_order().
VerifyReport verify_diagonal(const OperatorRep &op, const DiagonalSpec &spec);

/// Monic degree-m v with apply(op, v) = a_m v, by back-substitution on the
/// monomial coefficients. Throws EigenvalueCollisionError if a_m = a_k for
/// some k < m, PreconditionError if op raises degrees or m > N.
Polynomial eigenvector_solve(const OperatorRep &op, std::size_t m);

/// deg Q_k for k = 0..N (nullopt for Q_k = 0).
std::vector<Degree> degree_profile(const OperatorRep &op);

} // namespace diaop
