#include "diaop/error.hpp"
#include "diaop/hyperbolicity.hpp"
#include "diaop/kernels.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace diaop;

TEST_CASE("binomial transforms: serial and OpenMP agree") {
  diaop::testing::Gen gen(88);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = gen.sequence(static_cast<std::size_t>(gen.integer(0, 40)));
    const auto fwd = kernels::serial::binomial_transform(a);
    CHECK(kernels::omp::binomial_transform(a) == fwd);
    CHECK(kernels::omp::inverse_binomial_transform(fwd) ==
          kernels::serial::inverse_binomial_transform(fwd));
    CHECK(kernels::serial::inverse_binomial_transform(fwd) == a);
  }
}

TEST_CASE("binomial transform small values") {
  // forward: c_n = sum C(n,k) a_k
  const std::vector<Rational> ones{1, 1, 1, 1};
  CHECK(kernels::serial::binomial_transform(ones) == std::vector<Rational>{1, 2, 4, 8});
  CHECK(kernels::serial::inverse_binomial_transform(std::vector<Rational>{1, 2, 4, 8}) == ones);
  CHECK(kernels::omp::binomial_transform(std::vector<Rational>{}).empty());
}

TEST_CASE("hyperbolicity scan: serial and OpenMP agree") {
  diaop::testing::Gen gen(99);
  const Corpus corpus = corpus_generate(5, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto eigen = SequenceSpec::explicit_values(gen.sequence(6));
    const OperatorRep op = derive_diagonal({Basis::monomial(), eigen, 5});
    CHECK(kernels::omp::first_non_hyperbolic_image(op, corpus.polynomials) ==
          kernels::serial::first_non_hyperbolic_image(op, corpus.polynomials));
  }
  CHECK(kernels::max_threads() >= 1);
}

TEST_CASE("hyperbolicity scan propagates precondition failures") {
  const Corpus corpus = corpus_generate(4, 0);
  const OperatorRep small = OperatorRep::identity(2);
  CHECK_THROWS_AS(kernels::omp::first_non_hyperbolic_image(small, corpus.polynomials),
                  PreconditionError);
  CHECK_THROWS_AS(kernels::serial::first_non_hyperbolic_image(small, corpus.polynomials),
                  PreconditionError);
}
