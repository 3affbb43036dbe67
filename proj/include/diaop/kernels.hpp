#pragma once

// Data-parallel kernels. Each kernel has a serial reference in
// diaop::kernels::serial and an OpenMP version in diaop::kernels::omp with
// identical results; the library entry points use the OpenMP versions.

#include "diaop/operator.hpp"
#include "diaop/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace diaop::kernels {

namespace serial {

std::vector<Rational> binomial_transform(std::span<const Rational> a);
std::vector<Rational> inverse_binomial_transform(std::span<const Rational> c);

/// Index of the first corpus element whose image under op is not
/// hyperbolic.
std::optional<std::size_t> first_non_hyperbolic_image(const OperatorRep &op,
                                                       std::span<const Polynomial> corpus);

} // namespace serial

namespace omp {

std::vector<Rational> binomial_transform(std::span<const Rational> a);
std::vector<Rational> inverse_binomial_transform(std::span<const Rational> c);

/// Every element is checked in parallel; the smallest failing index wins,
/// so the answer matches the serial scan.
std::optional<std::size_t> first_non_hyperbolic_image(const OperatorRep &op,
                                                       std::span<const Polynomial> corpus);

} // namespace omp

/// Worker count the OpenMP kernels will use (1 when built without OpenMP).
int max_threads();

} // namespace diaop::kernels
