#include "diaop/operator.hpp"

#include "diaop/error.hpp"
#include "diaop/kernels.hpp"

namespace diaop {

namespace {

const Polynomial &zero_polynomial() {
  static const Polynomial zero;
  return zero;
}

void require_degree_at_most_k(const OperatorRep &op, std::size_t upto,
                              const char *what) {
  for (std::size_t k = 0; k <= upto && k <= op.max_order(); ++k) {
    if (!degree_at_most(op.q(k), k)) {
      throw PreconditionError(std::string(what) + ": deg Q_" + std::to_string(k) +
                              " = " + std::to_string(*op.q(k).degree()) +
                              " exceeds " + std::to_string(k));
    }
  }
}

} // namespace

OperatorRep::OperatorRep(std::size_t max_order) : q_(max_order + 1) {}

OperatorRep::OperatorRep(std::vector<Polynomial> q) : q_(std::move(q)) {
  if (q_.empty()) {
    q_.resize(1);
  }
}

OperatorRep OperatorRep::identity(std::size_t max_order) {
  OperatorRep op(max_order);
  op.q_[0] = Polynomial::constant(1);
  return op;
}

const Polynomial &OperatorRep::q(std::size_t k) const {
  return k < q_.size() ? q_[k] : zero_polynomial();
}

std::optional<std::size_t> OperatorRep::order() const {
  for (std::size_t k = q_.size(); k-- > 0;) {
    if (!q_[k].is_zero()) {
      return k;
    }
  }
  return std::nullopt;
}

OperatorRep OperatorRep::with_window(std::size_t n) const {
  std::vector<Polynomial> q = q_;
  if (n + 1 >= q.size()) {
    q.resize(n + 1);
    return OperatorRep(std::move(q));
  }
  for (std::size_t k = n + 1; k < q.size(); ++k) {
    if (!q[k].is_zero()) {
      throw PreconditionError("truncation to order " + std::to_string(n) +
                              " would discard nonzero Q_" + std::to_string(k) +
                              " = " + to_string(q[k]));
    }
  }
  q.resize(n + 1);
  return OperatorRep(std::move(q));
}

bool same_operator(const OperatorRep &a, const OperatorRep &b) {
  const std::size_t n = std::max(a.max_order(), b.max_order());
  for (std::size_t k = 0; k <= n; ++k) {
    if (a.q(k) != b.q(k)) {
      return false;
    }
  }
  return true;
}

ActionTable diagonal_action(const DiagonalSpec &spec) {
  ActionTable table;
  table.diagonal = true;
  table.images.reserve(spec.max_order + 1);
  for (std::size_t n = 0; n <= spec.max_order; ++n) {
    table.images.push_back(spec.eigen(n) * spec.basis.poly(n));
  }
  return table;
}

OperatorRep peetre_derive(const ActionTable &action, const Basis &basis) {
  if (action.images.empty()) {
    throw PreconditionError("peetre_derive: empty action table");
  }
  const std::size_t order = action.images.size() - 1;
  std::vector<Polynomial> q;
  q.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    const Polynomial b = basis.poly(n);
    if (!has_degree(b, n)) {
      throw PreconditionError("peetre_derive: basis is not simple at index " +
                              std::to_string(n));
    }
    Polynomial rest = action.images[n];
    Polynomial db = b;
    for (std::size_t k = 0; k < n; ++k) {
      if (!q[k].is_zero()) {
        rest -= q[k] * db;
      }
      db = derivative(db);
    }
    // db is now B_n^{(n)} = n! lead(B_n)
    q.push_back(rest / db.leading());
  }
  OperatorRep rep(std::move(q));
  if (action.diagonal) {
    require_degree_at_most_k(rep, order, "peetre_derive invariant violated");
  }
  return rep;
}

OperatorRep derive_diagonal(const DiagonalSpec &spec) {
  return peetre_derive(diagonal_action(spec), spec.basis);
}

Polynomial apply(const OperatorRep &op, const Polynomial &p) {
  if (p.is_zero()) {
    return p;
  }
  const std::size_t d = *p.degree();
  if (d > op.max_order()) {
    throw PreconditionError("apply: input degree " + std::to_string(d) +
                            " exceeds operator order window " +
                            std::to_string(op.max_order()));
  }
  Polynomial out;
  Polynomial dp = p;
  for (std::size_t k = 0; k <= d; ++k) {
    if (!op.q(k).is_zero()) {
      out += op.q(k) * dp;
    }
    dp = derivative(dp);
  }
  return out;
}

OperatorRep compose(const OperatorRep &a, const OperatorRep &b) {
  std::vector<Polynomial> out(a.max_order() + b.max_order() + 1);
  for (std::size_t k = 0; k <= a.max_order(); ++k) {
    const Polynomial &qk = a.q(k);
    if (qk.is_zero()) {
      continue;
    }
    const auto row = binomial_row(k);
    for (std::size_t j = 0; j <= b.max_order(); ++j) {
      Polynomial r = b.q(j);
      for (std::size_t i = 0; i <= k && !r.is_zero(); ++i) {
        out[k - i + j] += row[i] * (qk * r);
        r = derivative(r);
      }
    }
  }
  return OperatorRep(std::move(out));
}

namespace {

OperatorRep add_operators(const OperatorRep &a, const OperatorRep &b) {
  std::vector<Polynomial> out(std::max(a.max_order(), b.max_order()) + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = a.q(k) + b.q(k);
  }
  return OperatorRep(std::move(out));
}

OperatorRep scale_operator(const OperatorRep &a, const Rational &s) {
  std::vector<Polynomial> out = a.coefficients();
  for (auto &q : out) {
    q *= s;
  }
  return OperatorRep(std::move(out));
}

} // namespace

OperatorRep operator_polynomial(const Polynomial &p, const OperatorRep &w,
                                std::size_t target_order) {
  OperatorRep acc(0);
  if (p.is_zero()) {
    return acc.with_window(target_order);
  }
  OperatorRep power = OperatorRep::identity(0);
  const std::size_t d = *p.degree();
  for (std::size_t j = 0; j <= d; ++j) {
    if (p.coeff(j) != 0) {
      acc = add_operators(acc, scale_operator(power, p.coeff(j)));
    }
    if (j < d) {
      // Drop the zero tail so windows do not grow without bound.
      const auto ord = power.order();
      power = compose(power.with_window(ord.value_or(0)), w);
    }
  }
  return acc.with_window(target_order);
}

std::vector<Rational> leading_values(const OperatorRep &op) {
  require_degree_at_most_k(op, op.max_order(), "leading_values");
  std::vector<Rational> out(op.max_order() + 1);
  for (std::size_t k = 0; k <= op.max_order(); ++k) {
    out[k] = factorial(k) * op.q(k).coeff(k);
  }
  return out;
}

Rational eigen_from_leading(std::span<const Rational> leading, std::size_t n) {
  if (n >= leading.size()) {
    throw PreconditionError("eigen_from_leading: need leading values up to index " +
                            std::to_string(n));
  }
  const auto row = binomial_row(n);
  Rational acc = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    acc += row[k] * leading[k];
  }
  return acc;
}

Rational leading_from_eigen(const SequenceSpec &eigen, std::size_t n) {
  const auto a = eigen.prefix(n + 1);
  const auto row = binomial_row(n);
  Rational acc = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    if ((n - k) % 2 == 0) {
      acc += row[k] * a[k];
    } else {
      acc -= row[k] * a[k];
    }
  }
  return acc;
}

std::vector<Rational> binomial_transform(std::span<const Rational> a) {
  return kernels::omp::binomial_transform(a);
}

std::vector<Rational> inverse_binomial_transform(std::span<const Rational> c) {
  return kernels::omp::inverse_binomial_transform(c);
}

OperatorRep to_monomial_diagonal(const OperatorRep &op) {
  const auto leading = leading_values(op);
  std::vector<Polynomial> q(leading.size());
  for (std::size_t k = 0; k < leading.size(); ++k) {
    if (leading[k] != 0) {
      q[k] = Polynomial::monomial(k, leading[k] / factorial(k));
    }
  }
  return OperatorRep(std::move(q));
}

VerifyReport verify_diagonal(const OperatorRep &op, const DiagonalSpec &spec) {
  if (spec.max_order > op.max_order()) {
    throw PreconditionError("verify_diagonal: spec window " +
                            std::to_string(spec.max_order) +
                            " exceeds operator window " +
                            std::to_string(op.max_order()));
  }
  VerifyReport report;
  for (std::size_t n = 0; n <= spec.max_order; ++n) {
    const Polynomial b = spec.basis.poly(n);
    Polynomial got = apply(op, b);
    Polynomial expected = spec.eigen(n) * b;
    ++report.checked;
    if (got != expected) {
      report.pass = false;
      report.first_failure = n;
      report.got = std::move(got);
      report.expected = std::move(expected);
      break;
    }
  }
  return report;
}

Polynomial eigenvector_solve(const OperatorRep &op, std::size_t m) {
  if (m > op.max_order()) {
    throw PreconditionError("eigenvector_solve: m = " + std::to_string(m) +
                            " exceeds operator window " +
                            std::to_string(op.max_order()));
  }
  require_degree_at_most_k(op, m, "eigenvector_solve");

  // images[j] = op(x^j); upper triangular in the monomial basis.
  std::vector<Polynomial> images(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    images[j] = apply(op, Polynomial::monomial(j));
  }
  const Rational am = images[m].coeff(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (images[k].coeff(k) == am) {
      throw EigenvalueCollisionError(m, k);
    }
  }

  std::vector<Rational> v(m + 1);
  v[m] = 1;
  for (std::size_t i = m; i-- > 0;) {
    Rational rhs = 0;
    for (std::size_t j = i + 1; j <= m; ++j) {
      rhs -= images[j].coeff(i) * v[j];
    }
    v[i] = rhs / (images[i].coeff(i) - am);
  }
  return Polynomial(std::move(v));
}

std::vector<Degree> degree_profile(const OperatorRep &op) {
  std::vector<Degree> out;
  out.reserve(op.max_order() + 1);
  for (const auto &q : op.coefficients()) {
    out.push_back(q.degree());
  }
  return out;
}

} // namespace diaop
