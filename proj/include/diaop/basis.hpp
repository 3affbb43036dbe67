#pragma once

#include "diaop/polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace diaop {

enum class BasisKind { Monomial, Hermite, Legendre, Laguerre, ChebyshevT, Custom };

/// Outcome of checking deg(B_n) = n and B_0 != 0 on a supplied list.
struct BasisValidation {
  bool valid = true;
  std::optional<std::size_t> first_violation;
  std::string message;
};

BasisValidation validate_custom(const std::vector<Polynomial> &polynomials);

/// A simple polynomial basis {B_n}: deg B_n = n and B_0 != 0.
///
/// Built-in kinds are generated by their three-term recurrences:
///   Hermite (physicists')  H_{n+1} = 2x H_n - 2n H_{n-1}
///   Legendre (Bonnet)      (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
///   Laguerre               (n+1) L_{n+1} = (2n+1-x) L_n - n L_{n-1}
///   Chebyshev T            T_{n+1} = 2x T_n - T_{n-1}
///
/// Generated polynomials are memoized. Copies of a Basis share the memo,
/// which is mutex-guarded so concurrent reads are safe.
class Basis {
public:
  explicit Basis(BasisKind kind = BasisKind::Monomial);

  /// Validates the list; throws PreconditionError naming the first bad index.
  static Basis custom(std::vector<Polynomial> polynomials, std::string label = "custom");

  static Basis monomial() { return Basis(BasisKind::Monomial); }
  static Basis hermite() { return Basis(BasisKind::Hermite); }
  static Basis legendre() { return Basis(BasisKind::Legendre); }
  static Basis laguerre() { return Basis(BasisKind::Laguerre); }
  static Basis chebyshev() { return Basis(BasisKind::ChebyshevT); }

  BasisKind kind() const noexcept { return kind_; }
  /// CLI-style name: monomial, hermite, legendre, laguerre, chebyshev, or the
  /// custom label.
  std::string name() const;

  /// Number of available elements for a custom basis; nullopt when unbounded.
  std::optional<std::size_t> size() const;

  /// B_n. Throws PreconditionError for a custom index out of range.
  Polynomial poly(std::size_t n) const;

  /// Coordinates c_0..c_d with p = sum c_n B_n (empty for p = 0).
  std::vector<Rational> expand(const Polynomial &p) const;

  /// sum c_n B_n
  Polynomial reconstruct(const std::vector<Rational> &coords) const;

private:
  struct Memo;

  BasisKind kind_;
  std::string label_;
  std::shared_ptr<Memo> memo_;
};

Polynomial basis_poly(const Basis &basis, std::size_t n);
std::vector<Rational> basis_expand(const Basis &basis, const Polynomial &p);

} // namespace diaop
