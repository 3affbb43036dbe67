#include "diaop/render.hpp"

#include <algorithm>
#include <sstream>

namespace diaop {

std::string render_table(const OperatorRep &op) {
  std::vector<std::string> polys;
  std::size_t width = 4;
  for (const auto &q : op.coefficients()) {
    polys.push_back(to_string(q));
    width = std::max(width, polys.back().size());
  }
  std::ostringstream out;
  const auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  out << pad("k", 4) << pad("Q_k", width + 2) << pad("deg", 6) << "Q_k^(k)\n";
  for (std::size_t k = 0; k <= op.max_order(); ++k) {
    const Polynomial &q = op.q(k);
    const std::string deg = q.degree() ? std::to_string(*q.degree()) : "zero";
    const std::string lead = degree_at_most(q, k)
                                 ? to_string(Rational(factorial(k) * q.coeff(k)))
                                 : std::string("-");
    out << pad(std::to_string(k), 4) << pad(polys[k], width + 2) << pad(deg, 6) << lead
        << "\n";
  }
  return out.str();
}

std::string render_latex(const OperatorRep &op) {
  std::string out;
  for (std::size_t k = 0; k <= op.max_order(); ++k) {
    const Polynomial &q = op.q(k);
    if (q.is_zero()) {
      continue;
    }
    if (!out.empty()) {
      out += "+";
    }
    out += "\\left(" + to_latex(q) + "\\right)";
    if (k == 1) {
      out += "D";
    } else if (k > 1) {
      out += "D^{" + std::to_string(k) + "}";
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace diaop
