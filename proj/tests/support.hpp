#pragma once

// Random generators and independent oracles for the test suites. Nothing in
// here calls the library routine it is used to check.

#include "diaop/operator.hpp"
#include "diaop/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace diaop::testing {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small rational p/q with |p| <= 12, 1 <= q <= 6.
  Rational rational() { return Rational(integer(-12, 12), integer(1, 6)); }

  Rational nonzero_rational() {
    Rational r;
    do {
      r = rational();
    } while (r == 0);
    return r;
  }

  /// Random polynomial of exact degree d (d >= 0).
  Polynomial polynomial(std::size_t d) {
    std::vector<Rational> c(d + 1);
    for (auto &v : c) {
      v = rational();
    }
    c[d] = nonzero_rational();
    return Polynomial(std::move(c));
  }

  /// Random polynomial of degree at most d, possibly zero.
  Polynomial polynomial_upto(std::size_t d) {
    std::vector<Rational> c(d + 1);
    for (auto &v : c) {
      v = integer(0, 3) == 0 ? Rational(0) : rational();
    }
    return Polynomial(std::move(c));
  }

  std::vector<Rational> sequence(std::size_t n) {
    std::vector<Rational> a(n);
    for (auto &v : a) {
      v = rational();
    }
    return a;
  }

  /// Operator with deg Q_k <= k on window n.
  OperatorRep diagonal_like_operator(std::size_t n) {
    std::vector<Polynomial> q(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      q[k] = polynomial_upto(k);
    }
    return OperatorRep(std::move(q));
  }

  std::mt19937_64 &engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

/// Naive forward-difference diagonal (Delta^n a)_0 for n = 0..a.size()-1.
inline std::vector<Rational> naive_difference_diagonal(std::vector<Rational> a) {
  std::vector<Rational> diag;
  while (!a.empty()) {
    diag.push_back(a.front());
    std::vector<Rational> next;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      next.push_back(a[i + 1] - a[i]);
    }
    a = std::move(next);
  }
  return diag;
}

/// prod (x - r_i)
inline Polynomial from_roots(const std::vector<Rational> &roots) {
  std::vector<Rational> c{Rational(1)};
  for (const auto &r : roots) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

/// Applies sum_k Q_k D^k to x^n term by term: D^k x^n = n!/(n-k)! x^{n-k}.
inline Polynomial apply_to_monomial(const OperatorRep &op, std::size_t n) {
  Polynomial out;
  Rational falling = 1;
  for (std::size_t k = 0; k <= n && k <= op.max_order(); ++k) {
    out += op.q(k) * Polynomial::monomial(n - k, falling);
    falling *= Rational(static_cast<long>(n - k));
  }
  return out;
}

} // namespace diaop::testing
