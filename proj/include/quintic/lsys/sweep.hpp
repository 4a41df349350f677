#pragma once

#include <cstdint>
#include <vector>

#include "quintic/lsys/singular.hpp"

namespace quintic::lsys {

struct DimSample {
    int type_id;
    std::uint64_t index;
    std::uint64_t seed;  // sampler seed, derive_seed(sweep seed, type, index)
    std::size_t dim;
    int expected;
    bool ok() const { return static_cast<int>(dim) == expected; }
};

/// dim_L of `per_type` sampled configurations of each listed type. Results are
/// ordered by (type, index) and do not depend on the execution mode.
std::vector<DimSample> dims_sweep(const std::vector<int>& types, Field field, std::uint64_t seed,
                                  std::uint64_t per_type, Execution exec = Execution::Parallel);

}  // namespace quintic::lsys
