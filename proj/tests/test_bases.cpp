#include "diaop/basis.hpp"
#include "diaop/error.hpp"
#include "support.hpp"

#include <doctest.h>

#include <thread>

using namespace diaop;
using diaop::testing::Gen;

namespace {
const Polynomial x = Polynomial::x();
const std::vector<Basis> builtins{Basis::monomial(), Basis::hermite(), Basis::legendre(),
                                  Basis::laguerre(), Basis::chebyshev()};
} // namespace

TEST_CASE("basis_poly closed values") {
  CHECK(basis_poly(Basis::hermite(), 2) == Polynomial{-2, 0, 4});
  CHECK(basis_poly(Basis::hermite(), 3) == Polynomial{0, -12, 0, 8});
  CHECK(basis_poly(Basis::legendre(), 2) == Polynomial{Rational(-1, 2), 0, Rational(3, 2)});
  CHECK(basis_poly(Basis::legendre(), 3) ==
        Polynomial{0, Rational(-3, 2), 0, Rational(5, 2)});
  CHECK(basis_poly(Basis::monomial(), 5) == Polynomial::monomial(5));
  // L_2 = (x^2 - 4x + 2)/2, T_3 = 4x^3 - 3x
  CHECK(basis_poly(Basis::laguerre(), 2) == Polynomial{1, -2, Rational(1, 2)});
  CHECK(basis_poly(Basis::chebyshev(), 3) == Polynomial{0, -3, 0, 4});
}

TEST_CASE("every built-in basis is simple up to 16") {
  for (const auto &b : builtins) {
    for (std::size_t n = 0; n <= 16; ++n) {
      CHECK(has_degree(b.poly(n), n));
    }
  }
}

TEST_CASE("Hermite and Legendre satisfy their ODEs") {
  const Basis h = Basis::hermite();
  const Basis p = Basis::legendre();
  for (std::size_t n = 0; n <= 12; ++n) {
    const Rational nn(static_cast<long>(n));
    const Polynomial hn = h.poly(n);
    CHECK((derivative(hn, 2) - Rational(2) * (x * derivative(hn)) + 2 * nn * hn).is_zero());
    const Polynomial pn = p.poly(n);
    CHECK((Polynomial{1, 0, -1} * derivative(pn, 2) - Rational(2) * (x * derivative(pn)) +
           nn * (nn + 1) * pn)
              .is_zero());
  }
}

TEST_CASE("Laguerre and Chebyshev satisfy their ODEs") {
  for (std::size_t n = 0; n <= 12; ++n) {
    const Rational nn(static_cast<long>(n));
    // x L'' + (1 - x) L' + n L = 0
    const Polynomial ln = Basis::laguerre().poly(n);
    CHECK((x * derivative(ln, 2) + Polynomial{1, -1} * derivative(ln) + nn * ln).is_zero());
    // (1 - x^2) T'' - x T' + n^2 T = 0
    const Polynomial tn = Basis::chebyshev().poly(n);
    CHECK((Polynomial{1, 0, -1} * derivative(tn, 2) - x * derivative(tn) + nn * nn * tn)
              .is_zero());
  }
}

TEST_CASE("basis_expand") {
  CHECK(basis_expand(Basis::hermite(), Polynomial{-2, 0, 4}) ==
        std::vector<Rational>{0, 0, 1});
  const Polynomial p{3, Rational(-1, 2), 0, 7};
  CHECK(basis_expand(Basis::monomial(), p) == p.coefficients());
  // x^2 = 1/2 H_0 + 0 H_1 + 1/4 H_2, solved by hand
  CHECK(basis_expand(Basis::hermite(), Polynomial::monomial(2)) ==
        std::vector<Rational>{Rational(1, 2), 0, Rational(1, 4)});
  CHECK(basis_expand(Basis::legendre(), Polynomial{}).empty());
}

TEST_CASE("property: expand then reconstruct is the identity") {
  Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = gen.polynomial(static_cast<std::size_t>(gen.integer(0, 12)));
    const Basis &b = builtins[static_cast<std::size_t>(gen.integer(0, 4))];
    CHECK(b.reconstruct(b.expand(p)) == p);
  }
}

TEST_CASE("validate_custom") {
  CHECK(validate_custom({Polynomial{1}, x, Polynomial::monomial(2)}).valid);
  const auto bad = validate_custom({Polynomial{1}, Polynomial{3}, Polynomial::monomial(2)});
  CHECK_FALSE(bad.valid);
  CHECK(bad.first_violation == 1);
  const auto zero = validate_custom({Polynomial{}, x});
  CHECK_FALSE(zero.valid);
  CHECK(zero.first_violation == 0);
}

TEST_CASE("custom basis") {
  const Basis b = Basis::custom({Polynomial{2}, Polynomial{1, 1}, Polynomial{0, 0, 3}});
  CHECK(b.kind() == BasisKind::Custom);
  CHECK(b.size() == 3);
  CHECK(b.poly(1) == Polynomial{1, 1});
  CHECK_THROWS_AS(b.poly(3), PreconditionError);
  CHECK_THROWS_AS(Basis::custom({Polynomial{}, x}), PreconditionError);
  CHECK(b.reconstruct(b.expand(Polynomial{5, -1, 2})) == Polynomial{5, -1, 2});
}

TEST_CASE("memo is shared between copies and safe under concurrent reads") {
  const Basis h = Basis::hermite();
  const Basis copy = h;
  std::vector<std::thread> threads;
  std::vector<Polynomial> results(8);
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] { results[t] = copy.poly(10 + t); });
  }
  for (auto &th : threads) {
    th.join();
  }
  for (std::size_t t = 0; t < results.size(); ++t) {
    CHECK(results[t] == Basis::hermite().poly(10 + t));
  }
}
