// Benchmarks over the hot paths: basis computation, normal forms, minor
// expansion, monomial decomposition, and the bounded Frobenius certificates.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "calab/charp.hpp"
#include "calab/differentials.hpp"
#include "calab/dimension.hpp"
#include "calab/groebner.hpp"
#include "calab/ideal_ops.hpp"

using namespace calab;

namespace {

Polynomial var(const RingPtr& r, std::size_t i) {
  return Polynomial::variable(r, i);
}

// Deterministic dense-ish polynomial so the benchmarked input never drifts.
Polynomial seeded_poly(const RingPtr& r, std::mt19937& rng, int terms,
                       uint32_t deg) {
  Polynomial f = Polynomial::zero(r);
  const std::size_t n = r->nvars();
  for (int t = 0; t < terms; ++t) {
    Polynomial m = Polynomial::constant(
        r, Scalar::from_int(r->field(), 1 + static_cast<long long>(rng() % 6)));
    uint32_t budget = deg;
    for (std::size_t v = 0; v < n; ++v) {
      uint32_t e = rng() % (budget + 1);
      budget -= e;
      for (uint32_t k = 0; k < e; ++k) m = m * var(r, v);
    }
    f = f + m;
  }
  return f;
}

}  // namespace

static void BM_GroebnerPlaneLine(benchmark::State& state) {
  RingPtr R = Ring::create(0, {"x", "y", "z"});
  std::vector<Polynomial> gens = {var(R, 0) * var(R, 2), var(R, 1) * var(R, 2)};
  MonomialOrder ord = MonomialOrder::grevlex();
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(gens, ord));
  }
}
BENCHMARK(BM_GroebnerPlaneLine);

static void BM_GroebnerRandomTriple(benchmark::State& state) {
  RingPtr R = Ring::create(7, {"x", "y", "z"});
  std::mt19937 rng(5);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(seeded_poly(R, rng, 4, 3));
  MonomialOrder ord = MonomialOrder::grevlex();
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(gens, ord));
  }
}
BENCHMARK(BM_GroebnerRandomTriple);

static void BM_NormalFormCubicCone(benchmark::State& state) {
  RingPtr R = Ring::create(7, {"x", "y", "z"});
  Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2);
  Ideal I(R, {x.pow(3) + y.pow(3) + z.pow(3), x * y - z * z});
  auto gb = I.groebner(MonomialOrder::grevlex());
  Polynomial probe = (x + y + z).pow(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(probe, *gb));
  }
}
BENCHMARK(BM_NormalFormCubicCone);

static void BM_FittingChainPlaneLine(benchmark::State& state) {
  RingPtr R = Ring::create(0, {"x", "y", "z"});
  Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2);
  PresentedAlgebra A{R, Ideal(R, {x * z, y * z})};
  for (auto _ : state) {
    PolyMatrix M = jacobian_matrix(A);
    benchmark::DoNotOptimize(fitting_ideal(M, 1));
    benchmark::DoNotOptimize(fitting_ideal(M, 2));
  }
}
BENCHMARK(BM_FittingChainPlaneLine);

static void BM_MonomialMinPrimesCycle6(benchmark::State& state) {
  RingPtr R =
      Ring::create(7, {"x0", "x1", "x2", "x3", "x4", "x5"});
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < 6; ++v) {
    gens.push_back(var(R, v) * var(R, (v + 1) % 6));
  }
  for (auto _ : state) {
    Ideal I(R, gens);
    benchmark::DoNotOptimize(monomial_min_primes(I));
  }
}
BENCHMARK(BM_MonomialMinPrimesCycle6);

// Bounded tight-closure certificate on the cubic cone; the argument is the
// largest Frobenius exponent, so the last data point reduces modulo q = 49.
static void BM_TcCertifyCubicCone(benchmark::State& state) {
  RingPtr R = Ring::create(7, {"x", "y", "z"});
  Polynomial x = var(R, 0), y = var(R, 1), z = var(R, 2);
  PresentedAlgebra A{R, Ideal(R, {x.pow(3) + y.pow(3) + z.pow(3)}), true,
                     true};
  Ideal J(R, {x, y});
  int e_max = static_cast<int>(state.range(0));
  CharPContext ctx(7, e_max);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tc_certify_in(A, z.pow(2), J, x.pow(2), ctx));
  }
}
BENCHMARK(BM_TcCertifyCubicCone)->Arg(1)->Arg(2);

static void BM_FrobeniusPower(benchmark::State& state) {
  RingPtr R = Ring::create(7, {"x", "y", "z"});
  Ideal J(R, {var(R, 0) + var(R, 1), var(R, 1) * var(R, 2) + var(R, 0)});
  uint64_t q = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(frobenius_power(J, q));
  }
}
BENCHMARK(BM_FrobeniusPower)->Arg(7)->Arg(49)->Arg(343);

BENCHMARK_MAIN();
