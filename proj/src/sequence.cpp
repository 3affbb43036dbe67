#include "diaop/sequence.hpp"

#include "diaop/error.hpp"

namespace diaop {

namespace {

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::string join(const std::vector<Rational> &values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += to_string(values[i]);
  }
  return out;
}

} // namespace

std::optional<std::size_t> SequenceSpec::length() const {
  return std::visit(
      overloaded{
          [](const Explicit &e) -> std::optional<std::size_t> { return e.values.size(); },
          [](const SignAlternating &s) { return s.inner->length(); },
          [](const auto &) -> std::optional<std::size_t> { return std::nullopt; },
      },
      kind_);
}

Rational SequenceSpec::operator()(std::size_t n) const {
  return std::visit(
      overloaded{
          [n](const Explicit &e) -> Rational {
            if (n >= e.values.size()) {
              throw PreconditionError("sequence index " + std::to_string(n) +
                                      " outside explicit prefix of length " +
                                      std::to_string(e.values.size()));
            }
            return e.values[n];
          },
          [n](const PolynomialInN &p) -> Rational {
            return p.p(Rational(static_cast<unsigned long>(n)));
          },
          [n](const Geometric &g) -> Rational {
            Rational v = g.c;
            for (std::size_t i = 0; i < n; ++i) {
              v *= g.r;
            }
            return v;
          },
          [n](const ReciprocalFactorial &r) -> Rational { return r.c / factorial(n); },
          [n](const SignAlternating &s) -> Rational {
            Rational v = (*s.inner)(n);
            return n % 2 == 0 ? v : Rational(-v);
          },
      },
      kind_);
}

std::vector<Rational> SequenceSpec::prefix(std::size_t count) const {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back((*this)(n));
  }
  return out;
}

std::string SequenceSpec::expression() const {
  return std::visit(
      overloaded{
          [](const Explicit &e) { return "list:" + join(e.values); },
          [](const PolynomialInN &p) { return "poly:" + to_csv(p.p); },
          [](const Geometric &g) {
            std::string s = "geom:" + to_string(g.r);
            if (g.c != 1) {
              s += ":" + to_string(g.c);
            }
            return s;
          },
          [](const ReciprocalFactorial &r) {
            return r.c == 1 ? std::string("recip-factorial")
                            : "recip-factorial:" + to_string(r.c);
          },
          [](const SignAlternating &s) { return "alt:" + s.inner->expression(); },
      },
      kind_);
}

Rational eval_sequence(const SequenceSpec &spec, std::size_t n) { return spec(n); }

namespace {

class SequenceParser {
public:
  explicit SequenceParser(std::string_view text) : text_(text) {}

  SequenceSpec parse() {
    SequenceSpec spec = parse_expr(0);
    return spec;
  }

private:
  [[noreturn]] void fail(std::size_t pos, const std::string &what) const {
    throw ParseError(std::string(text_), pos, what);
  }

  Rational rational_at(std::size_t begin, std::size_t end) const {
    try {
      return parse_rational(text_.substr(begin, end - begin));
    } catch (const ParseError &e) {
      fail(begin + e.position(), "malformed rational '" +
                                     std::string(text_.substr(begin, end - begin)) +
                                     "'");
    }
  }

  std::vector<Rational> rational_list(std::size_t begin) const {
    if (begin >= text_.size()) {
      fail(begin, "expected a comma-separated list of rationals");
    }
    std::vector<Rational> values;
    std::size_t start = begin;
    while (true) {
      std::size_t comma = text_.find(',', start);
      const std::size_t end = comma == std::string_view::npos ? text_.size() : comma;
      if (end == start) {
        fail(start, "empty list element");
      }
      values.push_back(rational_at(start, end));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    return values;
  }

  SequenceSpec parse_expr(std::size_t pos) {
    const std::size_t colon = text_.find(':', pos);
    const std::string_view head =
        text_.substr(pos, colon == std::string_view::npos ? std::string_view::npos
                                                          : colon - pos);
    const std::size_t body = colon == std::string_view::npos ? text_.size() : colon + 1;

    if (head == "poly") {
      require_body(colon, pos);
      return SequenceSpec::polynomial(Polynomial(rational_list(body)));
    }
    if (head == "list") {
      require_body(colon, pos);
      return SequenceSpec::explicit_values(rational_list(body));
    }
    if (head == "geom") {
      require_body(colon, pos);
      const std::size_t second = text_.find(':', body);
      if (second == std::string_view::npos) {
        return SequenceSpec::geometric(rational_at(body, text_.size()));
      }
      if (text_.find(':', second + 1) != std::string_view::npos) {
        fail(text_.find(':', second + 1), "geom takes at most two arguments");
      }
      return SequenceSpec::geometric(rational_at(body, second),
                                     rational_at(second + 1, text_.size()));
    }
    if (head == "recip-factorial") {
      if (colon == std::string_view::npos) {
        return SequenceSpec::reciprocal_factorial();
      }
      if (text_.find(':', body) != std::string_view::npos) {
        fail(text_.find(':', body), "recip-factorial takes at most one argument");
      }
      return SequenceSpec::reciprocal_factorial(rational_at(body, text_.size()));
    }
    if (head == "alt") {
      require_body(colon, pos);
      if (body >= text_.size()) {
        fail(body, "alt requires an inner expression");
      }
      return SequenceSpec::alternating(parse_expr(body));
    }
    fail(pos, head.empty() ? "expected a sequence kind"
                           : "unknown sequence kind '" + std::string(head) +
                                 "' (expected poly, list, geom, recip-factorial or alt)");
  }

  void require_body(std::size_t colon, std::size_t pos) const {
    if (colon == std::string_view::npos) {
      fail(text_.size(), "expected ':' after '" + std::string(text_.substr(pos)) + "'");
    }
  }

  std::string_view text_;
};

} // namespace

SequenceSpec parse_sequence(std::string_view text) {
  return SequenceParser(text).parse();
}

} // namespace diaop
