#include "diaop/polynomial.hpp"

#include "diaop/error.hpp"

#include <algorithm>
#include <sstream>

namespace diaop {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
  normalize();
}

Polynomial Polynomial::constant(const Rational &c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational &c) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::x() { return monomial(1); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Degree Polynomial::degree() const noexcept {
  if (coeffs_.empty()) {
    return std::nullopt;
  }
  return coeffs_.size() - 1;
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational &x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial &Polynomial::operator+=(const Polynomial &other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  normalize();
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  normalize();
  return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial &Polynomial::operator*=(const Rational &scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto &c : coeffs_) {
    c *= scalar;
  }
  return *this;
}

Polynomial &Polynomial::operator/=(const Rational &scalar) {
  if (scalar == 0) {
    throw PreconditionError("polynomial division by zero scalar");
  }
  for (auto &c : coeffs_) {
    c /= scalar;
  }
  return *this;
}

Polynomial add(const Polynomial &p, const Polynomial &q) { return p + q; }

Polynomial mul(const Polynomial &p, const Polynomial &q) { return p * q; }

Polynomial derivative(const Polynomial &p, std::size_t k) {
  const auto &c = p.coefficients();
  if (k == 0) {
    return p;
  }
  if (k >= c.size()) {
    return {};
  }
  std::vector<Rational> out(c.size() - k);
  for (std::size_t i = k; i < c.size(); ++i) {
    // falling factorial i (i-1) ... (i-k+1)
    BigInt f = 1;
    for (std::size_t j = 0; j < k; ++j) {
      f *= i - j;
    }
    out[i - k] = c[i] * f;
  }
  return Polynomial(std::move(out));
}

Rational evaluate(const Polynomial &p, const Rational &x) { return p(x); }

Polynomial pow(const Polynomial &p, std::size_t e) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1U) {
      result *= base;
    }
    e >>= 1U;
    if (e > 0) {
      base *= base;
    }
  }
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial &num,
                                         const Polynomial &den) {
  if (den.is_zero()) {
    throw PreconditionError("polynomial division by zero");
  }
  const std::size_t dd = *den.degree();
  const Rational lead = den.leading();
  std::vector<Rational> rem = num.coefficients();
  if (rem.size() <= dd) {
    return {Polynomial{}, num};
  }
  std::vector<Rational> quot(rem.size() - dd);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) {
      continue;
    }
    const Rational f = rem[i] / lead;
    quot[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] -= f * den.coefficients()[j];
    }
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial monic(const Polynomial &p) {
  if (p.is_zero()) {
    return p;
  }
  return p / p.leading();
}

Polynomial gcd(const Polynomial &p, const Polynomial &q) {
  Polynomial a = p;
  Polynomial b = q;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

bool has_degree(const Polynomial &p, std::size_t k) {
  return p.degree() && *p.degree() == k;
}

bool degree_below(const Polynomial &p, std::size_t k) {
  return !p.degree() || *p.degree() < k;
}

bool degree_at_most(const Polynomial &p, std::size_t k) {
  return !p.degree() || *p.degree() <= k;
}

std::string to_string(const Polynomial &p) {
  if (p.is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  const auto &c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) {
      continue;
    }
    const bool negative = c[i] < 0;
    const Rational mag = negative ? Rational(-c[i]) : c[i];
    if (first) {
      out << (negative ? "-" : "");
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) {
      out << to_string(mag) << "*";
    }
    out << "x";
    if (i > 1) {
      out << "^" << i;
    }
  }
  return out.str();
}

std::string to_latex(const Rational &r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  const BigInt mag = negative ? BigInt(-num) : num;
  std::string body = den == 1 ? mag.str()
                              : "\\frac{" + mag.str() + "}{" + den.str() + "}";
  return negative ? "-" + body : body;
}

std::string to_latex(const Polynomial &p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  const auto &c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) {
      continue;
    }
    const bool negative = c[i] < 0;
    const Rational mag = negative ? Rational(-c[i]) : c[i];
    if (negative) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (i == 0 || mag != 1) {
      out += to_latex(mag);
    }
    if (i >= 1) {
      out += "x";
    }
    if (i > 1) {
      out += "^{" + std::to_string(i) + "}";
    }
  }
  return out;
}

std::string to_csv(const Polynomial &p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += to_string(p.coefficients()[i]);
  }
  return out;
}

Polynomial parse_polynomial_csv(std::string_view text) {
  std::vector<Rational> coeffs;
  if (text.empty()) {
    return {};
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    try {
      coeffs.push_back(parse_rational(token));
    } catch (const ParseError &e) {
      throw ParseError(std::string(text), start + e.position(),
                       "bad coefficient '" + std::string(token) + "'");
    }
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

Polynomial square_free_part(const Polynomial &p) {
  if (p.is_zero()) {
    throw PreconditionError("square_free_part of the zero polynomial");
  }
  const Polynomial g = gcd(p, derivative(p));
  return monic(divmod(p, g).first);
}

namespace {

// Scale by a positive rational so the coefficients are coprime integers.
Polynomial primitive_positive(const Polynomial &p) {
  if (p.is_zero()) {
    return p;
  }
  BigInt den_lcm = 1;
  for (const auto &c : p.coefficients()) {
    den_lcm = boost::multiprecision::lcm(den_lcm,
                                         boost::multiprecision::denominator(c));
  }
  BigInt num_gcd = 0;
  for (const auto &c : p.coefficients()) {
    const Rational scaled = c * den_lcm;
    num_gcd = boost::multiprecision::gcd(
        num_gcd, boost::multiprecision::abs(boost::multiprecision::numerator(scaled)));
  }
  return p * Rational(den_lcm, num_gcd);
}

std::size_t sign_variations(const std::vector<int> &signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      ++changes;
    }
    last = s;
  }
  return changes;
}

} // namespace

std::vector<Polynomial> sturm_chain(const Polynomial &p) {
  std::vector<Polynomial> chain;
  if (p.is_zero()) {
    return chain;
  }
  chain.push_back(primitive_positive(p));
  Polynomial d = derivative(p);
  if (d.is_zero()) {
    return chain;
  }
  chain.push_back(primitive_positive(d));
  while (true) {
    const auto &a = chain[chain.size() - 2];
    const auto &b = chain.back();
    Polynomial r = divmod(a, b).second;
    if (r.is_zero()) {
      break;
    }
    chain.push_back(primitive_positive(-r));
  }
  return chain;
}

std::size_t count_real_roots(const Polynomial &p) {
  if (p.is_zero()) {
    throw PreconditionError("count_real_roots of the zero polynomial");
  }
  if (!gcd(p, derivative(p)).is_constant()) {
    throw PreconditionError("count_real_roots requires a square-free polynomial");
  }
  const auto chain = sturm_chain(p);
  std::vector<int> at_neg_inf;
  std::vector<int> at_pos_inf;
  for (const auto &q : chain) {
    const int s = sign(q.leading());
    at_pos_inf.push_back(s);
    at_neg_inf.push_back((*q.degree() % 2 == 0) ? s : -s);
  }
  return sign_variations(at_neg_inf) - sign_variations(at_pos_inf);
}

bool is_hyperbolic(const Polynomial &p) {
  if (p.is_constant()) {
    return true;
  }
  const Polynomial sf = square_free_part(p);
  return count_real_roots(sf) == *sf.degree();
}

} // namespace diaop
