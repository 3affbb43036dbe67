#include "diaop/hyperbolicity.hpp"

#include "diaop/classify.hpp"
#include "diaop/error.hpp"
#include "diaop/kernels.hpp"

#include <random>

namespace diaop {

std::string to_string(SignPattern pattern) {
  switch (pattern) {
  case SignPattern::NonNegative:
    return "NonNegative";
  case SignPattern::NonPositive:
    return "NonPositive";
  case SignPattern::AlternatingFromEven:
    return "AlternatingFromEven";
  case SignPattern::AlternatingFromOdd:
    return "AlternatingFromOdd";
  case SignPattern::Irregular:
    return "Irregular";
  }
  return "Irregular";
}

std::string to_string(CheckStatus status) {
  switch (status) {
  case CheckStatus::Pass:
    return "pass";
  case CheckStatus::Fail:
    return "fail";
  case CheckStatus::NotApplicable:
    return "not-applicable";
  }
  return "not-applicable";
}

std::vector<TuranViolation> turan_check(std::span<const Rational> prefix) {
  if (prefix.size() < 3) {
    throw PreconditionError("turan_check needs at least 3 terms");
  }
  std::vector<TuranViolation> out;
  for (std::size_t k = 0; k + 2 < prefix.size(); ++k) {
    Rational v = prefix[k + 1] * prefix[k + 1] - prefix[k] * prefix[k + 2];
    if (v < 0) {
      out.push_back({k, std::move(v)});
    }
  }
  return out;
}

SignPattern sign_pattern(std::span<const Rational> prefix) {
  // expected sign of term k for each pattern
  const auto fits = [&](auto expected) {
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      const int s = sign(prefix[k]);
      if (s != 0 && s != expected(k)) {
        return false;
      }
    }
    return true;
  };
  if (fits([](std::size_t) { return 1; })) {
    return SignPattern::NonNegative;
  }
  if (fits([](std::size_t) { return -1; })) {
    return SignPattern::NonPositive;
  }
  if (fits([](std::size_t k) { return k % 2 == 0 ? 1 : -1; })) {
    return SignPattern::AlternatingFromEven;
  }
  if (fits([](std::size_t k) { return k % 2 == 0 ? -1 : 1; })) {
    return SignPattern::AlternatingFromOdd;
  }
  return SignPattern::Irregular;
}

Polynomial apply_sequence_monomial(const SequenceSpec &eigen, const Polynomial &p) {
  std::vector<Rational> out = p.coefficients();
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] != 0) {
      out[k] *= eigen(k);
    }
  }
  return Polynomial(std::move(out));
}

Polynomial apply_sequence_basis(const SequenceSpec &eigen, const Basis &basis,
                                const Polynomial &p) {
  std::vector<Rational> coords = basis.expand(p);
  for (std::size_t n = 0; n < coords.size(); ++n) {
    if (coords[n] != 0) {
      coords[n] *= eigen(n);
    }
  }
  return basis.reconstruct(coords);
}

Corpus corpus_generate(std::size_t max_degree, std::uint64_t seed) {
  Corpus corpus{seed, max_degree, {}};
  auto &out = corpus.polynomials;
  out.push_back(Polynomial::constant(1));

  const Basis hermite = Basis::hermite();
  const Basis legendre = Basis::legendre();
  for (std::size_t n = 1; n <= max_degree; ++n) {
    out.push_back(pow(Polynomial{1, 1}, n));
    out.push_back(Polynomial::monomial(n));
    Polynomial symmetric = Polynomial::constant(1);
    for (std::size_t j = 0; j < n; ++j) {
      const long root = static_cast<long>(n) - 1 - 2 * static_cast<long>(j);
      symmetric *= Polynomial{Rational(-root), Rational(1)};
    }
    out.push_back(std::move(symmetric));
    out.push_back(hermite.poly(n));
    out.push_back(legendre.poly(n));
  }

  // Raw engine output is specified by the standard, so the corpus is
  // identical on every platform (distributions are not).
  std::mt19937_64 rng(seed);
  constexpr std::size_t grid_size = 13; // -3, -5/2, ..., 3
  constexpr std::size_t samples_per_degree = 6;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    for (std::size_t s = 0; s < samples_per_degree; ++s) {
      Polynomial p = Polynomial::constant(1);
      for (std::size_t i = 0; i < d; ++i) {
        const auto idx = static_cast<long>(rng() % grid_size);
        const Rational root(idx - 6, 2);
        p *= Polynomial{Rational(-root), Rational(1)};
      }
      out.push_back(std::move(p));
    }
  }
  return corpus;
}

std::optional<Counterexample> hyperbolicity_sample(const OperatorRep &op,
                                                   const Corpus &corpus) {
  for (const auto &p : corpus.polynomials) {
    if (!degree_at_most(p, op.max_order())) {
      throw PreconditionError("hyperbolicity_sample: corpus degree " +
                              std::to_string(*p.degree()) +
                              " exceeds operator window " +
                              std::to_string(op.max_order()));
    }
  }
  const auto hit = kernels::omp::first_non_hyperbolic_image(op, corpus.polynomials);
  if (!hit) {
    return std::nullopt;
  }
  Counterexample cx;
  cx.corpus_index = *hit;
  cx.input = corpus.polynomials[*hit];
  cx.image = apply(op, cx.input);
  const Polynomial sf = square_free_part(cx.image);
  cx.image_real_roots = count_real_roots(sf);
  cx.image_distinct_roots = *sf.degree();
  return cx;
}

IncreasingCheck increasing_eigenvalue_check(const SequenceSpec &eigen, std::size_t window) {
  IncreasingCheck out;
  const auto verdict = classify_sequence(eigen, window);
  const auto *interp = std::get_if<InterpolatedDegree>(&verdict);
  if (interp == nullptr || interp->m < 1 || eigen(0) <= 0) {
    return out;
  }
  out.status = CheckStatus::Pass;
  Rational prev = eigen(0);
  for (std::size_t k = 0; k < window; ++k) {
    Rational next = eigen(k + 1);
    if (!(prev < next)) {
      out.status = CheckStatus::Fail;
      out.first_violation = k;
      break;
    }
    prev = std::move(next);
  }
  return out;
}

FinalDegreeCheck final_degree_check(const OperatorRep &op,
                                    std::optional<std::size_t> interpolation_degree) {
  FinalDegreeCheck out;
  const auto leading = leading_values(op);
  std::vector<Rational> a(leading.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    a[n] = eigen_from_leading(leading, n);
  }
  if (a[0] <= 0) {
    out.hypothesis_failure = 0;
    return out;
  }
  for (std::size_t n = 0; n + 1 < a.size(); ++n) {
    if (!(a[n] < a[n + 1])) {
      out.hypothesis_failure = n;
      return out;
    }
  }
  const std::size_t upto =
      interpolation_degree ? std::min(*interpolation_degree, op.max_order()) : op.max_order();
  out.status = CheckStatus::Pass;
  for (std::size_t k = 0; k <= upto; ++k) {
    if (!has_degree(op.q(k), k)) {
      out.status = CheckStatus::Fail;
      out.first_failure = k;
      break;
    }
  }
  return out;
}

Rational exp_weighted_coefficient(const SequenceSpec &eigen, std::size_t n) {
  Rational acc = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    const Rational term = eigen(j) / (factorial(n - j) * factorial(j));
    if ((n - j) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

bool MsReport::certified_not_multiplier_sequence() const {
  return !turan_violations.empty() || sign_pattern == SignPattern::Irregular ||
         increasing_check.status == CheckStatus::Fail || counterexample.has_value();
}

MsReport check_multiplier_sequence(const SequenceSpec &eigen, const Basis &basis,
                                   std::size_t prefix_length, std::size_t max_order,
                                   std::uint64_t seed) {
  if (const auto len = eigen.length()) {
    prefix_length = std::min(prefix_length, *len);
    max_order = std::min(max_order, *len == 0 ? 0 : *len - 1);
  }
  if (prefix_length < 3) {
    throw PreconditionError("check_multiplier_sequence needs a prefix of at least 3 terms");
  }
  MsReport report;
  report.eigen = eigen.expression();
  report.basis = basis.name();
  report.max_order = max_order;
  report.seed = seed;
  report.prefix = eigen.prefix(prefix_length);
  report.turan_violations = turan_check(report.prefix);
  report.sign_pattern = sign_pattern(report.prefix);
  report.increasing_check = increasing_eigenvalue_check(eigen, prefix_length - 1);

  const OperatorRep op = derive_diagonal({basis, eigen, max_order});
  const Corpus corpus = corpus_generate(max_order, seed);
  report.corpus_size = corpus.polynomials.size();
  report.counterexample = hyperbolicity_sample(op, corpus);
  return report;
}

} // namespace diaop
