#include <benchmark/benchmark.h>

#include "quintic/lsys/constraints.hpp"
#include "quintic/lsys/sweep.hpp"
#include "quintic/projgeom/sampler.hpp"

using namespace quintic;

namespace {

std::vector<int> all_types()
{
    std::vector<int> t;
    for (int i = 1; i <= projgeom::kTypeCount; ++i)
        t.push_back(i);
    return t;
}

// a member of L(K) for a type-26 configuration
lsys::HomogeneousPoly test_quintic(const exactalg::Field& f)
{
    auto k = projgeom::sample_generic(26, f, 3);
    auto l = lsys::linear_system(k);
    exactalg::Vector v(lsys::monomial_count(5), exactalg::Scalar(f, 0));
    for (std::size_t r = 0; r < l.dim(); ++r)
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] += exactalg::Scalar(f, static_cast<long>(r + 1)) * l.basis()(r, j);
    return lsys::HomogeneousPoly::from_vector(f, 5, v);
}

void dims(benchmark::State& state, lsys::Execution exec)
{
    const auto f = exactalg::Field::prime(exactalg::kDefaultPrime);
    const auto types = all_types();
    for (auto _ : state)
        benchmark::DoNotOptimize(lsys::dims_sweep(types, f, 0, static_cast<std::uint64_t>(state.range(0)), exec));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(types.size()) * state.range(0));
}

void singular(benchmark::State& state, lsys::Execution exec)
{
    const auto f = exactalg::Field::prime(static_cast<std::uint64_t>(state.range(0)));
    const auto poly = test_quintic(f);
    for (auto _ : state)
        benchmark::DoNotOptimize(lsys::singular_points(poly, exec));
    const auto p = state.range(0);
    state.SetItemsProcessed(state.iterations() * (p * p + p + 1));
}

}  // namespace

BENCHMARK_CAPTURE(dims, serial, lsys::Execution::Serial)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(dims, parallel, lsys::Execution::Parallel)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(singular, serial, lsys::Execution::Serial)->Arg(101)->Arg(1009)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(singular, parallel, lsys::Execution::Parallel)->Arg(101)->Arg(1009)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
