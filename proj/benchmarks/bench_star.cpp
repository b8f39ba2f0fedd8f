#include <benchmark/benchmark.h>

#include <random>

#include "qmm/fedosov.hpp"
#include "qmm/star_product.hpp"

using namespace qmm;

namespace
{

// Dense polynomial with coefficients 1..k over all monomials of degree <= d.
FormalSeries dense(std::size_t nv, int degree, int order)
{
    Polynomial p(nv);
    int k = 1;
    for (const auto &e : monomials_up_to(nv, degree)) {
        p.add_term(e, Scalar(k++));
    }
    return FormalSeries::from_polynomial(p, order);
}

void moyal(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const int degree = static_cast<int>(state.range(1));
    const PhaseSpace space = PhaseSpace::standard(n);
    const FormalSeries f = dense(space.dim(), degree, 5);
    const FormalSeries g = dense(space.dim(), degree, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(moyal_product(space, f, g));
    }
}
BENCHMARK(moyal)->Args({1, 3})->Args({1, 5})->Args({2, 3});

void fedosov_connection(benchmark::State &state)
{
    const int cap = static_cast<int>(state.range(0));
    const PhaseSpace space = PhaseSpace::standard(1);
    const FedosovConfig config =
        FedosovConfig::with_omega(space, TwoFormSeries::multiple_of_omega(space, cap / 2, 1, Scalar(1)), cap);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_r(config));
    }
}
BENCHMARK(fedosov_connection)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void fedosov_taylor_series(benchmark::State &state)
{
    const int cap = static_cast<int>(state.range(0));
    const PhaseSpace space = PhaseSpace::standard(1);
    const WeylElement r = build_r(
        FedosovConfig::with_omega(space, TwoFormSeries::multiple_of_omega(space, cap / 2, 1, Scalar(1)), cap));
    const FormalSeries f = dense(2, 3, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fedosov_taylor(space, f, r));
    }
}
BENCHMARK(fedosov_taylor_series)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

// Fresh star per iteration so the section cache does not hide the cost.
void fedosov_star(benchmark::State &state)
{
    const PhaseSpace space = PhaseSpace::standard(1);
    const FormalSeries f = dense(2, 2, 3);
    const FormalSeries g = dense(2, 2, 3);
    for (auto _ : state) {
        const FedosovStar star(
            FedosovConfig::with_omega(space, TwoFormSeries::multiple_of_omega(space, 2, 1, Scalar(1)), 10));
        benchmark::DoNotOptimize(star.multiply(f, g));
    }
}
BENCHMARK(fedosov_star)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
