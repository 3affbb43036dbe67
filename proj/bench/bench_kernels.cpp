// Serial reference kernels vs. their OpenMP counterparts.

#include "diaop/hyperbolicity.hpp"
#include "diaop/kernels.hpp"
#include "diaop/operator.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace diaop;

std::vector<Rational> random_sequence(std::size_t n) {
  std::mt19937_64 rng(42);
  std::vector<Rational> a(n);
  for (auto &v : a) {
    v = Rational(static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 9) + 1);
  }
  return a;
}

void BM_BinomialTransformSerial(benchmark::State &state) {
  const auto a = random_sequence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::serial::binomial_transform(a));
  }
}

void BM_BinomialTransformOmp(benchmark::State &state) {
  const auto a = random_sequence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::omp::binomial_transform(a));
  }
}

BENCHMARK(BM_BinomialTransformSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_BinomialTransformOmp)->Arg(64)->Arg(256);

// xD - D^2/2 maps the whole corpus to real-rooted images, so the scan
// visits every element.
struct ScanFixture {
  OperatorRep op;
  Corpus corpus;
  explicit ScanFixture(std::size_t degree)
      : op(derive_diagonal({Basis::hermite(), SequenceSpec::polynomial(Polynomial{0, 1}),
                            degree})),
        corpus(corpus_generate(degree, 0)) {}
};

void BM_HyperbolicityScanSerial(benchmark::State &state) {
  const ScanFixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::serial::first_non_hyperbolic_image(f.op, f.corpus.polynomials));
  }
}

void BM_HyperbolicityScanOmp(benchmark::State &state) {
  const ScanFixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::omp::first_non_hyperbolic_image(f.op, f.corpus.polynomials));
  }
}

BENCHMARK(BM_HyperbolicityScanSerial)->Arg(8)->Arg(12);
BENCHMARK(BM_HyperbolicityScanOmp)->Arg(8)->Arg(12);

} // namespace

BENCHMARK_MAIN();
