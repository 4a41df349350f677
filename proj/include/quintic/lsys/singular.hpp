#pragma once

#include <cstdint>
#include <vector>

#include "quintic/lsys/poly.hpp"
#include "quintic/projgeom/config.hpp"

namespace quintic::lsys {

enum class Execution { Serial, Parallel };

struct SingularSet {
    Field field = Field::rationals();
    std::vector<ProjPoint> isolated_points;
    std::vector<projgeom::ProjLine> line_components;
    std::vector<projgeom::Conic> conic_components;
    bool whole_plane = false;

    bool empty() const
    {
        return isolated_points.empty() && line_components.empty() && conic_components.empty() && !whole_plane;
    }
    projgeom::Config to_config() const;
};

/// Every F_p-point of P^2 where all three partials of f vanish, in the order
/// (1:y:z), (0:1:z), (0:0:1) with y, z ascending.
std::vector<ProjPoint> singular_points(const HomogeneousPoly& f, Execution exec = Execution::Parallel);

/// Exhaustive singular set of f over F_p. A line or nondegenerate conic is a
/// component only when all p+1 of its points are singular.
SingularSet singular_set_bruteforce(const HomogeneousPoly& f, std::uint64_t p, Execution exec = Execution::Parallel);

}  // namespace quintic::lsys
