#include "diaop/classify.hpp"

#include "diaop/error.hpp"

namespace diaop {

namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::vector<Rational> diagonal_of(const std::vector<Rational> &values) {
  std::vector<Rational> row = values;
  std::vector<Rational> diag;
  diag.reserve(values.size());
  while (!row.empty()) {
    diag.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
      row[i] = row[i + 1] - row[i];
    }
    row.pop_back();
  }
  return diag;
}

PrefixConsistentWithDegree prefix_verdict(const std::vector<Rational> &values) {
  const auto diag = diagonal_of(values);
  std::size_t m = 0;
  for (std::size_t n = 0; n < diag.size(); ++n) {
    if (diag[n] != 0) {
      m = n;
    }
  }
  return {m};
}

SequenceVerdict classify_closed(const SequenceSpec &spec, bool flipped,
                                std::size_t window) {
  using S = SequenceSpec;
  return std::visit(
      overloaded{
          [&](const S::Explicit &e) -> SequenceVerdict {
            const std::size_t count = std::min(e.values.size(), window + 1);
            std::vector<Rational> values(e.values.begin(), e.values.begin() + count);
            if (flipped) {
              for (std::size_t n = 1; n < values.size(); n += 2) {
                values[n] = -values[n];
              }
            }
            return prefix_verdict(values);
          },
          [&](const S::PolynomialInN &p) -> SequenceVerdict {
            if (p.p.is_zero()) {
              return InterpolatedDegree{0};
            }
            if (flipped) {
              return NotInterpolatable{ReasonCode::AlternatingNonConstant};
            }
            return InterpolatedDegree{*p.p.degree()};
          },
          [&](const S::Geometric &g) -> SequenceVerdict {
            const Rational r = flipped ? Rational(-g.r) : g.r;
            if (g.c == 0 || r == 1) {
              return InterpolatedDegree{0};
            }
            if (r == 0) {
              // c, 0, 0, ...: never addressed as a closed form; prefix only.
              std::vector<Rational> values(window + 1);
              values[0] = g.c;
              return prefix_verdict(values);
            }
            if (r < 0 && flipped) {
              return NotInterpolatable{ReasonCode::AlternatingNonConstant};
            }
            if (r > 0 && r < 1) {
              // |c r^n| strictly decreases toward 0 with the sign of c fixed.
              return NotInterpolatable{ReasonCode::MonotoneWrongDirection};
            }
            // (Delta^n a)_0 = c (r - 1)^n != 0
            return NotInterpolatable{ReasonCode::NonvanishingDifferences};
          },
          [&](const S::ReciprocalFactorial &rf) -> SequenceVerdict {
            if (rf.c == 0) {
              return InterpolatedDegree{0};
            }
            if (flipped) {
              return NotInterpolatable{ReasonCode::AlternatingNonConstant};
            }
            return NotInterpolatable{ReasonCode::BoundedNonConstant};
          },
          [&](const S::SignAlternating &s) -> SequenceVerdict {
            return classify_closed(*s.inner, !flipped, window);
          },
      },
      spec.kind());
}

} // namespace

std::string to_string(ReasonCode reason) {
  switch (reason) {
  case ReasonCode::BoundedNonConstant:
    return "BoundedNonConstant";
  case ReasonCode::MonotoneWrongDirection:
    return "MonotoneWrongDirection";
  case ReasonCode::AlternatingNonConstant:
    return "AlternatingNonConstant";
  case ReasonCode::NonvanishingDifferences:
    return "NonvanishingDifferences";
  }
  return "Unknown";
}

std::string to_string(const SequenceVerdict &verdict) {
  return std::visit(
      overloaded{
          [](const InterpolatedDegree &v) {
            return "InterpolatedDegree(" + std::to_string(v.m) + ")";
          },
          [](const NotInterpolatable &v) {
            return "NotInterpolatable(" + to_string(v.reason) + ")";
          },
          [](const PrefixConsistentWithDegree &v) {
            return "PrefixConsistentWithDegree(" + std::to_string(v.m) + ")";
          },
      },
      verdict);
}

std::string to_string(const OperatorVerdict &verdict) {
  return std::visit(
      overloaded{
          [](const FiniteOrderAtMost &v) {
            return "FiniteOrderAtMost(" + std::to_string(v.m) + ")";
          },
          [](const InfiniteOrder &) { return std::string("InfiniteOrder"); },
          [](const UndeterminedWithinWindow &) {
            return std::string("UndeterminedWithinWindow");
          },
      },
      verdict);
}

std::vector<std::vector<Rational>> finite_difference_table(const SequenceSpec &spec,
                                                           std::size_t depth) {
  std::vector<std::vector<Rational>> table;
  table.reserve(depth + 1);
  table.push_back(spec.prefix(depth + 1));
  for (std::size_t r = 1; r <= depth; ++r) {
    const auto &prev = table.back();
    std::vector<Rational> row(prev.size() - 1);
    for (std::size_t i = 0; i < row.size(); ++i) {
      row[i] = prev[i + 1] - prev[i];
    }
    table.push_back(std::move(row));
  }
  return table;
}

SequenceVerdict classify_sequence(const SequenceSpec &spec, std::size_t window) {
  return classify_closed(spec, false, window);
}

std::optional<std::size_t> finite_order_witness(const OperatorRep &op) {
  const std::size_t r = op.order().value_or(0);
  if (op.max_order() >= 2 * r + 1) {
    return r;
  }
  return std::nullopt;
}

OperatorVerdict classify_operator(const OperatorRep &op, const SequenceVerdict &verdict) {
  if (std::holds_alternative<NotInterpolatable>(verdict)) {
    return InfiniteOrder{};
  }
  if (const auto *interp = std::get_if<InterpolatedDegree>(&verdict)) {
    const auto witness = finite_order_witness(op);
    if (witness && *witness >= interp->m) {
      return FiniteOrderAtMost{*witness};
    }
  }
  return UndeterminedWithinWindow{};
}

ClassificationReport classify(const DiagonalSpec &spec) {
  const OperatorRep op = derive_diagonal(spec);
  ClassificationReport report{
      classify_sequence(spec.eigen, spec.max_order),
      UndeterminedWithinWindow{},
      {},
      degree_profile(op),
      {}};
  report.operator_verdict = classify_operator(op, report.sequence_verdict);
  report.difference_diagonal = diagonal_of(spec.eigen.prefix(spec.max_order + 1));

  if (const auto *interp = std::get_if<InterpolatedDegree>(&report.sequence_verdict);
      interp && std::holds_alternative<UndeterminedWithinWindow>(report.operator_verdict)) {
    bool below = true;
    for (std::size_t k = interp->m + 1; k <= op.max_order(); ++k) {
      below = below && degree_below(op.q(k), k);
    }
    if (below && interp->m < op.max_order()) {
      report.notes.push_back("deg Q_k < k for " + std::to_string(interp->m) +
                             " < k <= " + std::to_string(op.max_order()) +
                             ", but Q_k != 0 persists: no finite-order witness in window");
    }
  }
  if (std::holds_alternative<PrefixConsistentWithDegree>(report.sequence_verdict)) {
    report.notes.push_back("explicit prefix: verdict is evidence only");
  }
  return report;
}

Polynomial binomial_polynomial(std::size_t k) {
  Polynomial p = Polynomial::constant(1);
  for (std::size_t j = 0; j < k; ++j) {
    p *= Polynomial{Rational(-static_cast<long>(j)), Rational(1)};
  }
  return p / factorial(k);
}

namespace {

Polynomial newton_form(std::span<const Rational> leading, std::size_t m) {
  for (std::size_t k = m + 1; k < leading.size(); ++k) {
    if (leading[k] != 0) {
      throw PreconditionError("interpolating_polynomial: leading value " +
                              std::to_string(k) + " is nonzero beyond degree " +
                              std::to_string(m));
    }
  }
  Polynomial p;
  for (std::size_t k = 0; k <= m && k < leading.size(); ++k) {
    if (leading[k] != 0) {
      p += leading[k] * binomial_polynomial(k);
    }
  }
  return p;
}

} // namespace

Polynomial interpolating_polynomial(std::span<const Rational> leading, std::size_t m) {
  Polynomial p = newton_form(leading, m);
  for (std::size_t n = 0; n < leading.size(); ++n) {
    if (p(Rational(static_cast<unsigned long>(n))) != eigen_from_leading(leading, n)) {
      throw PreconditionError("interpolating_polynomial: verification failed at n = " +
                              std::to_string(n));
    }
  }
  return p;
}

Polynomial interpolating_polynomial(std::span<const Rational> leading, std::size_t m,
                                    const SequenceSpec &spec) {
  Polynomial p = interpolating_polynomial(leading, m);
  for (std::size_t n = 0; n < leading.size(); ++n) {
    if (p(Rational(static_cast<unsigned long>(n))) != spec(n)) {
      throw PreconditionError("interpolating_polynomial: p(" + std::to_string(n) +
                              ") does not match the sequence");
    }
  }
  return p;
}

Rational alternating_binomial_poly_sum(const Polynomial &p, std::size_t n) {
  const auto row = binomial_row(n);
  Rational acc = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational term = row[k] * p(Rational(static_cast<unsigned long>(k)));
    if ((n - k) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

} // namespace diaop
