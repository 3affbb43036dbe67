#include "diaop/basis.hpp"

#include "diaop/error.hpp"

#include <mutex>

namespace diaop {

struct Basis::Memo {
  std::mutex mutex;
  std::vector<Polynomial> values;
};

BasisValidation validate_custom(const std::vector<Polynomial> &polynomials) {
  BasisValidation result;
  for (std::size_t n = 0; n < polynomials.size(); ++n) {
    if (!has_degree(polynomials[n], n)) {
      result.valid = false;
      result.first_violation = n;
      result.message = n == 0 && polynomials[0].is_zero()
                           ? "B_0 is the zero polynomial"
                           : "deg B_" + std::to_string(n) + " != " + std::to_string(n);
      return result;
    }
  }
  return result;
}

Basis::Basis(BasisKind kind) : kind_(kind), memo_(std::make_shared<Memo>()) {
  if (kind == BasisKind::Custom) {
    throw PreconditionError("use Basis::custom to build a custom basis");
  }
}

Basis Basis::custom(std::vector<Polynomial> polynomials, std::string label) {
  const auto check = validate_custom(polynomials);
  if (!check.valid) {
    throw PreconditionError("invalid custom basis at index " +
                            std::to_string(*check.first_violation) + ": " +
                            check.message);
  }
  Basis b;
  b.kind_ = BasisKind::Custom;
  b.label_ = std::move(label);
  b.memo_->values = std::move(polynomials);
  return b;
}

std::string Basis::name() const {
  switch (kind_) {
  case BasisKind::Monomial:
    return "monomial";
  case BasisKind::Hermite:
    return "hermite";
  case BasisKind::Legendre:
    return "legendre";
  case BasisKind::Laguerre:
    return "laguerre";
  case BasisKind::ChebyshevT:
    return "chebyshev";
  case BasisKind::Custom:
    return label_;
  }
  return "unknown";
}

std::optional<std::size_t> Basis::size() const {
  if (kind_ != BasisKind::Custom) {
    return std::nullopt;
  }
  return memo_->values.size();
}

namespace {

Polynomial next_element(BasisKind kind, std::size_t n, const Polynomial &prev,
                        const Polynomial &cur) {
  // cur = B_n, prev = B_{n-1}; returns B_{n+1}
  const Polynomial x = Polynomial::x();
  const Rational nn(static_cast<long>(n));
  switch (kind) {
  case BasisKind::Hermite:
    return Rational(2) * (x * cur) - Rational(2) * nn * prev;
  case BasisKind::Legendre:
    return (Rational(2 * n + 1) * (x * cur) - nn * prev) / Rational(n + 1);
  case BasisKind::Laguerre:
    return (Polynomial{Rational(2 * n + 1), Rational(-1)} * cur - nn * prev) /
           Rational(n + 1);
  case BasisKind::ChebyshevT:
    return Rational(2) * (x * cur) - prev;
  default:
    return x * cur;
  }
}

Polynomial first_element(BasisKind kind) {
  switch (kind) {
  case BasisKind::Hermite:
    return Polynomial{0, 2};
  case BasisKind::Laguerre:
    return Polynomial{1, -1};
  default:
    return Polynomial::x();
  }
}

} // namespace

Polynomial Basis::poly(std::size_t n) const {
  std::lock_guard lock(memo_->mutex);
  auto &values = memo_->values;
  if (kind_ == BasisKind::Custom) {
    if (n >= values.size()) {
      throw PreconditionError("custom basis index " + std::to_string(n) +
                              " out of range (size " +
                              std::to_string(values.size()) + ")");
    }
    return values[n];
  }
  if (kind_ == BasisKind::Monomial) {
    return Polynomial::monomial(n);
  }
  if (values.empty()) {
    values.push_back(Polynomial::constant(1));
  }
  if (values.size() == 1 && n >= 1) {
    values.push_back(first_element(kind_));
  }
  while (values.size() <= n) {
    const std::size_t k = values.size() - 1;
    values.push_back(next_element(kind_, k, values[k - 1], values[k]));
  }
  return values[n];
}

std::vector<Rational> Basis::expand(const Polynomial &p) const {
  if (p.is_zero()) {
    return {};
  }
  const std::size_t d = *p.degree();
  std::vector<Rational> coords(d + 1);
  Polynomial rest = p;
  for (std::size_t n = d + 1; n-- > 0;) {
    const Polynomial b = poly(n);
    const Rational c = rest.coeff(n) / b.leading();
    coords[n] = c;
    if (c != 0) {
      rest -= c * b;
    }
  }
  return coords;
}

Polynomial Basis::reconstruct(const std::vector<Rational> &coords) const {
  Polynomial out;
  for (std::size_t n = 0; n < coords.size(); ++n) {
    if (coords[n] != 0) {
      out += coords[n] * poly(n);
    }
  }
  return out;
}

Polynomial basis_poly(const Basis &basis, std::size_t n) { return basis.poly(n); }

std::vector<Rational> basis_expand(const Basis &basis, const Polynomial &p) {
  return basis.expand(p);
}

} // namespace diaop
