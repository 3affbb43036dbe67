#pragma once

#include "diaop/operator.hpp"

#include <string>

namespace diaop {

/// Plain-text table: one row per k with Q_k, deg Q_k and Q_k^{(k)}
/// ("-" when deg Q_k > k).
std::string render_table(const OperatorRep &op);

/// "\left(x\right)D+\left(-\frac{1}{3}\right)D^{2}+..." with zero terms
/// omitted; "0" for the zero operator.
std::string render_latex(const OperatorRep &op);

} // namespace diaop
