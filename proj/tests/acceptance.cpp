// Acceptance checks. Prints one PASS/FAIL line per criterion; with an
// argument, runs only that criterion. Exit status is nonzero if any ran and
// failed.

#include "diaop/classify.hpp"
#include "diaop/hyperbolicity.hpp"
#include "diaop/kernels.hpp"
#include "diaop/operator.hpp"
#include "support.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace diaop;

namespace {

const Polynomial x = Polynomial::x();

// Collects failed sub-checks with a short label each.
class Outcome {
public:
  void check(bool ok, const std::string &label) {
    if (!ok) {
      failures_.push_back(label);
    }
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < failures_.size(); ++i) {
      out << (i ? "; " : "") << failures_[i];
    }
    return out.str();
  }

private:
  std::vector<std::string> failures_;
};

OperatorRep derive(const Basis &basis, const SequenceSpec &eigen, std::size_t n) {
  return derive_diagonal({basis, eigen, n});
}

void expect_q(Outcome &out, const OperatorRep &op, std::size_t k, const Polynomial &want) {
  out.check(op.q(k) == want, "Q_" + std::to_string(k) + " = " + to_string(op.q(k)) +
                                 ", expected " + to_string(want));
}

void expect_rest_zero(Outcome &out, const OperatorRep &op, std::set<std::size_t> skip) {
  for (std::size_t k = 0; k <= op.max_order(); ++k) {
    if (!skip.contains(k)) {
      expect_q(out, op, k, Polynomial{});
    }
  }
}

Outcome hermite_n() {
  Outcome out;
  const OperatorRep w = derive(Basis::hermite(), SequenceSpec::polynomial(x), 12);
  expect_q(out, w, 1, x);
  expect_q(out, w, 2, Polynomial{Rational(-1, 2)});
  expect_rest_zero(out, w, {1, 2});
  return out;
}

Outcome reciprocal_factorial_monomial() {
  Outcome out;
  const SequenceSpec eigen = SequenceSpec::reciprocal_factorial();
  const OperatorRep op = derive(Basis::monomial(), eigen, 8);
  // displayed values
  expect_q(out, op, 0, Polynomial{1});
  expect_q(out, op, 1, Polynomial{});
  expect_q(out, op, 2, Polynomial::monomial(2, Rational(-1, 2)));
  expect_q(out, op, 3, Polynomial::monomial(3, Rational(2, 3)));
  expect_q(out, op, 4, Polynomial::monomial(4, Rational(-5, 8)));
  // closed form
  for (std::size_t n = 0; n <= 8; ++n) {
    Rational s = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      const Rational term = Rational(binomial(n, k)) / factorial(k);
      s += (n - k) % 2 == 0 ? term : Rational(-term);
    }
    const Polynomial want = Polynomial::monomial(n, s / factorial(n));
    out.check(op.q(n) == want, "closed form at n = " + std::to_string(n));
  }
  return out;
}

Outcome legendre_n() {
  Outcome out;
  const OperatorRep op = derive(Basis::legendre(), SequenceSpec::polynomial(x), 8);
  expect_q(out, op, 1, x);
  expect_q(out, op, 2, Polynomial{Rational(-1, 3)});
  expect_q(out, op, 3, Polynomial{0, Rational(2, 15)});
  expect_q(out, op, 4, Polynomial{Rational(-1, 105), 0, Rational(-4, 105)});
  for (std::size_t k = 3; k <= 8; ++k) {
    out.check(degree_below(op.q(k), k), "deg Q_" + std::to_string(k) + " >= k");
  }
  return out;
}

Outcome hermite_alternating() {
  Outcome out;
  const OperatorRep op =
      derive(Basis::hermite(), SequenceSpec::alternating(SequenceSpec::polynomial(x)), 6);
  expect_q(out, op, 1, Polynomial{0, -1});
  expect_q(out, op, 2, Polynomial{Rational(-1, 2), 0, 2});
  expect_q(out, op, 3, Polynomial{0, 1, 0, -2});
  return out;
}

Outcome dual_derivation() {
  Outcome out;
  const SequenceSpec eigen = SequenceSpec::geometric(-1);
  const OperatorRep mono = derive(Basis::monomial(), eigen, 10);
  const OperatorRep herm = derive(Basis::hermite(), eigen, 10);
  out.check(mono == herm, "monomial and Hermite derivations differ");
  Rational scale = 1;
  for (std::size_t k = 0; k <= 10; ++k) {
    expect_q(out, mono, k, Polynomial::monomial(k, scale / factorial(k)));
    scale *= -2;
  }
  out.check(verify_diagonal(mono, {Basis::monomial(), eigen, 10}).pass, "verify monomial");
  out.check(verify_diagonal(mono, {Basis::hermite(), eigen, 10}).pass, "verify Hermite");
  return out;
}

Outcome legendre_square() {
  Outcome out;
  const OperatorRep op = derive(Basis::legendre(), SequenceSpec::polynomial({0, 1, 1}), 10);
  expect_q(out, op, 1, Polynomial{0, 2});
  expect_q(out, op, 2, Polynomial{-1, 0, 1});
  expect_rest_zero(out, op, {1, 2});
  return out;
}

Outcome operator_polynomial_witness() {
  Outcome out;
  const OperatorRep w = derive(Basis::hermite(), SequenceSpec::polynomial(x), 12);
  const OperatorRep pw = operator_polynomial(Polynomial{1, 3, 1}, w, 4);
  const OperatorRep direct =
      derive(Basis::hermite(), SequenceSpec::polynomial(Polynomial{1, 3, 1}), 10);
  out.check(same_operator(pw, direct), "p(W) differs from the derived operator");
  out.check(pw.with_window(10) == direct, "p(W) on window 10 differs");
  return out;
}

Outcome property_suites() {
  Outcome out;
  constexpr int cases = 200;
  diaop::testing::Gen gen(20240611);

  for (int t = 0; t < cases; ++t) {
    const auto a = gen.sequence(static_cast<std::size_t>(gen.integer(0, 24)));
    out.check(inverse_binomial_transform(binomial_transform(a)) == a, "binomial round trip");
  }

  for (int t = 0; t < cases; ++t) {
    const auto a = gen.sequence(static_cast<std::size_t>(gen.integer(1, 14)));
    const auto eigen = SequenceSpec::explicit_values(a);
    const auto naive = diaop::testing::naive_difference_diagonal(a);
    std::vector<Rational> leading(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
      leading[n] = leading_from_eigen(eigen, n);
    }
    out.check(leading == naive, "leading_from_eigen vs difference table");
    for (std::size_t n = 0; n < a.size(); ++n) {
      out.check(eigen_from_leading(leading, n) == a[n], "eigen_from_leading inverse");
    }
  }

  for (int t = 0; t < cases; ++t) {
    const auto na = static_cast<std::size_t>(gen.integer(0, 4));
    const auto nb = static_cast<std::size_t>(gen.integer(0, 4));
    const OperatorRep a = gen.diagonal_like_operator(na);
    const OperatorRep b = gen.diagonal_like_operator(nb);
    const Polynomial p = gen.polynomial_upto(std::min(na, nb));
    out.check(apply(compose(a, b), p) == apply(a, apply(b, p)), "compose");
  }

  for (int t = 0; t < cases; ++t) {
    const auto d = static_cast<std::size_t>(gen.integer(0, 6));
    const Polynomial p = gen.polynomial(d);
    const auto n = static_cast<std::size_t>(gen.integer(0, 10));
    const Rational s = alternating_binomial_poly_sum(p, n);
    if (n > d) {
      out.check(s == 0, "vanishing sum above the degree");
    } else if (n == d) {
      out.check(s == factorial(n) * p.leading(), "n! lead at the degree");
    }
  }

  for (int t = 0; t < cases; ++t) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 8));
    std::vector<Rational> roots;
    for (std::size_t i = 0; i < n; ++i) {
      roots.push_back(Rational(gen.integer(-6, 6), gen.integer(1, 3)));
    }
    const Polynomial p = gen.nonzero_rational() * diaop::testing::from_roots(roots);
    const std::set<Rational> distinct(roots.begin(), roots.end());
    out.check(count_real_roots(square_free_part(p)) == distinct.size(), "Sturm count");
  }
  return out;
}

Outcome classification() {
  Outcome out;
  const auto verdict = [](const SequenceSpec &eigen) {
    return classify({Basis::monomial(), eigen, 8});
  };
  const auto rf = verdict(SequenceSpec::reciprocal_factorial());
  out.check(rf.sequence_verdict ==
                SequenceVerdict{NotInterpolatable{ReasonCode::BoundedNonConstant}},
            "recip-factorial reason: " + to_string(rf.sequence_verdict));
  out.check(rf.operator_verdict == OperatorVerdict{InfiniteOrder{}},
            "recip-factorial order: " + to_string(rf.operator_verdict));

  const auto alt = verdict(SequenceSpec::alternating(SequenceSpec::polynomial(x)));
  out.check(alt.sequence_verdict ==
                SequenceVerdict{NotInterpolatable{ReasonCode::AlternatingNonConstant}},
            "alt:poly:0,1 reason: " + to_string(alt.sequence_verdict));
  out.check(alt.operator_verdict == OperatorVerdict{InfiniteOrder{}},
            "alt:poly:0,1 order: " + to_string(alt.operator_verdict));

  const SequenceSpec g2 = SequenceSpec::geometric(2);
  const OperatorRep op = derive(Basis::monomial(), g2, 8);
  for (std::size_t k = 0; k <= 8; ++k) {
    out.check(has_degree(op.q(k), k), "geom:2 deg Q_" + std::to_string(k));
    expect_q(out, op, k, Polynomial::monomial(k, 1 / factorial(k)));
    out.check(leading_from_eigen(g2, k) == 1, "geom:2 leading value");
  }
  return out;
}

Outcome hyperbolicity_negatives() {
  Outcome out;
  const auto report = check_multiplier_sequence(SequenceSpec::explicit_values({1, 1, 3}),
                                                Basis::monomial(), 24, 8, 0);
  out.check(!report.turan_violations.empty(), "no Turan violation for (1,1,3)");
  out.check(report.counterexample.has_value(), "no counterexample for (1,1,3)");
  if (report.counterexample) {
    const Polynomial &image = report.counterexample->image;
    const Polynomial sf = square_free_part(image);
    out.check(count_real_roots(sf) < *sf.degree(), "counterexample not Sturm-certified");
  }

  const OperatorRep rf = derive(Basis::monomial(), SequenceSpec::reciprocal_factorial(), 8);
  const auto gate = final_degree_check(rf, std::nullopt);
  out.check(gate.status == CheckStatus::NotApplicable,
            "1/n! gate status: " + to_string(gate.status));
  return out;
}

Outcome exp_weighted_identity() {
  Outcome out;
  const SequenceSpec eigen = SequenceSpec::polynomial(Polynomial{1, 1});
  for (std::size_t n = 0; n <= 12; ++n) {
    out.check(exp_weighted_coefficient(eigen, n) == leading_from_eigen(eigen, n) / factorial(n),
              "coefficient " + std::to_string(n));
  }
  return out;
}

struct Criterion {
  std::string name;
  std::function<Outcome()> run;
};

} // namespace

int main(int argc, char **argv) {
  const std::vector<Criterion> criteria{
      {"Hermite a_n = n gives xD - 1/2 D^2", hermite_n},
      {"monomial a_n = 1/n! displayed values and closed form", reciprocal_factorial_monomial},
      {"Legendre a_n = n coefficients and deg Q_k < k", legendre_n},
      {"Hermite a_n = (-1)^n n", hermite_alternating},
      {"(-1)^n from monomial and Hermite bases agree", dual_derivation},
      {"Legendre n^2 + n gives (x^2 - 1)D^2 + 2xD", legendre_square},
      {"p(W) equals the derived operator for n^2 + 3n + 1", operator_polynomial_witness},
      {"property suites", property_suites},
      {"classification verdicts", classification},
      {"hyperbolicity negatives", hyperbolicity_negatives},
      {"exponential-weighted coefficient identity", exp_weighted_identity},
  };

  std::size_t first = 0;
  std::size_t last = criteria.size();
  if (argc > 1) {
    const long which = std::strtol(argv[1], nullptr, 10);
    if (which < 1 || static_cast<std::size_t>(which) > criteria.size()) {
      std::cerr << "usage: " << argv[0] << " [1-" << criteria.size() << "]\n";
      return 2;
    }
    first = static_cast<std::size_t>(which) - 1;
    last = first + 1;
  }

  int failed = 0;
  for (std::size_t i = first; i < last; ++i) {
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception &e) {
      out.check(false, std::string("exception: ") + e.what());
    }
    std::cout << (out.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].name;
    if (!out.ok()) {
      std::cout << " [" << out.summary() << "]";
      ++failed;
    }
    std::cout << '\n';
  }
  return failed == 0 ? 0 : 1;
}
