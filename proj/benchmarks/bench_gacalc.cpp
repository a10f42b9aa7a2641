#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "gacalc/expr.hpp"
#include "gacalc/pga3.hpp"
#include "gacalc/playfair.hpp"
#include "gacalc/structure.hpp"

namespace {

using namespace gacalc;

template <ScalarField S>
Multivector<S> dense_multivector(const std::shared_ptr<const Algebra<S>>& alg,
                                 std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  Multivector<S> out(alg);
  for (BladeMask m = 0; m < alg->blade_count(); ++m)
    out.add_term(m, scalar_traits<S>::from_int(num(g)) /
                        scalar_traits<S>::from_int(den(g)));
  return out;
}

void BM_GeometricProductPGA3Double(benchmark::State& state) {
  const auto alg = Algebra<double>::pga3();
  const auto x = dense_multivector<double>(alg, 1);
  const auto y = dense_multivector<double>(alg, 2);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_GeometricProductPGA3Double);

void BM_GeometricProductPGA3Rational(benchmark::State& state) {
  const auto alg = Algebra<Rational>::pga3();
  const auto x = dense_multivector<Rational>(alg, 1);
  const auto y = dense_multivector<Rational>(alg, 2);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_GeometricProductPGA3Rational);

void BM_GeometricProductDim8Double(benchmark::State& state) {
  const auto alg = Algebra<double>::from_signature(6, 1, 1);
  const auto x = dense_multivector<double>(alg, 3);
  const auto y = dense_multivector<double>(alg, 4);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_GeometricProductDim8Double);

void BM_DecomposeAtPoint(benchmark::State& state) {
  const auto alg = Algebra<Rational>::pga3();
  const auto comp = pga3::point_complement(
      pga3::Point<Rational>{Rational(1), Rational(2), Rational(3)});
  const PlayfairFrame<Rational> frame(alg, comp);
  const auto x = dense_multivector<Rational>(alg, 5);
  for (auto _ : state) benchmark::DoNotOptimize(frame.decompose(x));
}
BENCHMARK(BM_DecomposeAtPoint);

void BM_InversePGA3Rational(benchmark::State& state) {
  const auto alg = Algebra<Rational>::pga3();
  const auto one = Multivector<Rational>::one(alg);
  const auto e1 = Multivector<Rational>::basis_vector(alg, 1);
  const auto e0 = Multivector<Rational>::basis_vector(alg, 0);
  const auto u = (one + e1 * Rational(1, 3)) * (one + e0 * Rational(2, 5));
  for (auto _ : state) benchmark::DoNotOptimize(inverse(u));
}
BENCHMARK(BM_InversePGA3Rational);

void BM_ParseEval(benchmark::State& state) {
  const auto alg = Algebra<Rational>::pga3();
  const std::string src = "2 + 3*e1 - e01 + grade(e1*e2 + e0^e3, 2) x e12";
  for (auto _ : state) benchmark::DoNotOptimize(eval_expression<Rational>(src, alg));
}
BENCHMARK(BM_ParseEval);

}  // namespace

BENCHMARK_MAIN();
