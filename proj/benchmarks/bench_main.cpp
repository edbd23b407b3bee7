#include <benchmark/benchmark.h>

#include <random>

#include "sasano/classify.hpp"
#include "sasano/laurent.hpp"
#include "sasano/polynomial.hpp"
#include "sasano/systems.hpp"

using namespace sasano;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> d(-50, 50);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(d(rng), 1 + (d(rng) + 50) % 7);
  if (c.back().is_zero()) c.back() = Rational(1);
  return Polynomial(c);
}

Params b4(const char* a0, const char* a1, const char* a2, const char* a3, const char* a4) {
  return Params{System::B4, {Rational::parse(a0), Rational::parse(a1), Rational::parse(a2), Rational::parse(a3),
                             Rational::parse(a4)}};
}

}  // namespace

static void BM_PolynomialGcd(benchmark::State& state) {
  std::mt19937_64 rng(7);
  int n = static_cast<int>(state.range(0));
  Polynomial g = random_poly(rng, n / 2);
  Polynomial a = g * random_poly(rng, n / 2);
  Polynomial b = g * random_poly(rng, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolynomialGcd)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_ConstructStandardForm(benchmark::State& state) {
  Params p = b4("1/4", "1/4", "1/4", "-1/2", "1/2");
  for (auto _ : state) benchmark::DoNotOptimize(construct_rational_solution(p));
}
BENCHMARK(BM_ConstructStandardForm);

static void BM_ConstructShifted(benchmark::State& state) {
  // several shifts away from standard form
  Params p = b4("3/8", "-5/8", "-43/40", "1/5", "3/2");
  for (auto _ : state) benchmark::DoNotOptimize(construct_rational_solution(p));
}
BENCHMARK(BM_ConstructShifted);

static void BM_Residual(benchmark::State& state) {
  Params p = b4("3/8", "-5/8", "-43/40", "1/5", "3/2");
  auto r = construct_rational_solution(p);
  for (auto _ : state) benchmark::DoNotOptimize(residual(p, *r.solution));
}
BENCHMARK(BM_Residual);

static void BM_ResidualCertificate(benchmark::State& state) {
  Params p = b4("3/8", "-5/8", "-43/40", "1/5", "3/2");
  auto r = construct_rational_solution(p);
  for (auto _ : state) benchmark::DoNotOptimize(residual_vanishes(p, *r.solution));
}
BENCHMARK(BM_ResidualCertificate);

static void BM_LaurentAtInfinity(benchmark::State& state) {
  Params p = b4("3/8", "-5/8", "-43/40", "1/5", "3/2");
  auto r = construct_rational_solution(p);
  RationalFunction h = hamiltonian(p, *r.solution);
  for (auto _ : state) benchmark::DoNotOptimize(laurent_expand(h, ExpansionPoint::infinity(), 4));
}
BENCHMARK(BM_LaurentAtInfinity);
BENCHMARK_MAIN();
