#include "diaop/kernels.hpp"

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace diaop::kernels {

namespace {

// sum_k C(n,k) a_k s^{n-k} with s = +1 or -1
Rational binomial_entry(std::span<const Rational> a, std::size_t n, bool alternate) {
  const auto row = binomial_row(n);
  Rational acc = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (a[k] == 0) {
      continue;
    }
    const Rational term = row[k] * a[k];
    if (alternate && (n - k) % 2 == 1) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

} // namespace

namespace serial {

std::vector<Rational> binomial_transform(std::span<const Rational> a) {
  std::vector<Rational> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    out[n] = binomial_entry(a, n, false);
  }
  return out;
}

std::vector<Rational> inverse_binomial_transform(std::span<const Rational> c) {
  std::vector<Rational> out(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    out[n] = binomial_entry(c, n, true);
  }
  return out;
}

std::optional<std::size_t> first_non_hyperbolic_image(const OperatorRep &op,
                                                       std::span<const Polynomial> corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!is_hyperbolic(apply(op, corpus[i]))) {
      return i;
    }
  }
  return std::nullopt;
}

} // namespace serial

namespace omp {

std::vector<Rational> binomial_transform(std::span<const Rational> a) {
  const auto size = static_cast<std::int64_t>(a.size());
  std::vector<Rational> out(a.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t n = 0; n < size; ++n) {
    out[n] = binomial_entry(a, static_cast<std::size_t>(n), false);
  }
  return out;
}

std::vector<Rational> inverse_binomial_transform(std::span<const Rational> c) {
  const auto size = static_cast<std::int64_t>(c.size());
  std::vector<Rational> out(c.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t n = 0; n < size; ++n) {
    out[n] = binomial_entry(c, static_cast<std::size_t>(n), true);
  }
  return out;
}

std::optional<std::size_t> first_non_hyperbolic_image(const OperatorRep &op,
                                                       std::span<const Polynomial> corpus) {
  const auto size = static_cast<std::int64_t>(corpus.size());
  std::vector<char> failed(corpus.size(), 0);
  // Precondition errors from apply must not escape a parallel region.
  std::vector<char> refused(corpus.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < size; ++i) {
    try {
      failed[i] = is_hyperbolic(apply(op, corpus[i])) ? 0 : 1;
    } catch (...) {
      refused[i] = 1;
    }
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (refused[i]) {
      // rethrow the same error serially
      (void)apply(op, corpus[i]);
    }
    if (failed[i]) {
      return i;
    }
  }
  return std::nullopt;
}

} // namespace omp

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace diaop::kernels
