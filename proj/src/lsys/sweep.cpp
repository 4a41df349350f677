#include "quintic/lsys/sweep.hpp"

#include <exception>

#include "quintic/lsys/constraints.hpp"
#include "quintic/lsys/taxonomy.hpp"
#include "quintic/projgeom/sampler.hpp"

namespace quintic::lsys {

namespace {

DimSample run_one(int type_id, std::uint64_t index, Field field, std::uint64_t seed)
{
    const std::uint64_t s = projgeom::derive_seed(seed, type_id, index);
    auto k = projgeom::sample_generic(type_id, field, s);
    return {type_id, index, s, dim_L(k), type_record(type_id).expected_dim};
}

}  // namespace

std::vector<DimSample> dims_sweep(const std::vector<int>& types, Field field, std::uint64_t seed,
                                  std::uint64_t per_type, Execution exec)
{
    for (int t : types)
        type_record(t);
    const std::size_t total = types.size() * per_type;
    std::vector<DimSample> out(total);
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < total; ++i)
            out[i] = run_one(types[i / per_type], i % per_type, field, seed);
        return out;
    }
    std::vector<std::exception_ptr> errors(total);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(total); ++i) {
        const auto u = static_cast<std::size_t>(i);
        try {
            out[u] = run_one(types[u / per_type], u % per_type, field, seed);
        } catch (...) {
            errors[u] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

}  // namespace quintic::lsys
