#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quintic/twisted/complex.hpp"

namespace quintic::twisted {

/// One vertex v, loops b and c: the figure-eight, a deformation retract of
/// C \ {+1, -1} and of each fiber of B(C^*, 2) -> C^*.
CwComplex figure_eight();
CwComplex circle();

/// Chain map of the figure-eight exchanging the loops b and c and fixing v.
ChainMap swap_loops(const TwistedChainComplex& fig8);

/// Fiber signs on (b, c) and the twist along the base loop a.
struct PropBSystem {
    long fiber_sign;
    long edge_twist;
};
/// index 1, 2, 3 -> (+1, -1), (-1, +1), (-1, -1).
PropBSystem prop_b_system(int index);

/// A named computation: the complex, and optionally a self-map whose action
/// on homology is reported.
struct Model {
    std::string name;
    TwistedChainComplex complex;
    std::optional<ChainMap> self_map;
    /// Complex dimension of the modelled manifold, for Borel-Moore duality.
    int complex_dim;
};

/// Mapping torus of the figure-eight under the loop swap, twisted along the
/// base: B(C^*, 2) with the system A_index. The self-map is
/// (x, 0) -> (x, 0), (0, y) -> (0, -edge_twist swap(y)).
Model prop_b_model(int index);

/// Figure-eight with both loops -1 and the loop swap (z -> -z on C \ {+-1}).
Model prop_c_model();

/// "prop-b-a1", "prop-b-a2", "prop-b-a3", "prop-c".
std::vector<std::string> builtin_model_names();
Model builtin_model(const std::string& name);

/// Random connected 2-complex with a local system of signs or small rationals
/// that extends over every face.
struct RandomModel {
    CwComplex space;
    LocalSystem system;
};
RandomModel random_model(std::uint64_t seed);

}  // namespace quintic::twisted
