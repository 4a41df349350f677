#pragma once

#include <cstdint>

#include "quintic/exactalg/linalg.hpp"
#include "quintic/lsys/poly.hpp"
#include "quintic/projgeom/config.hpp"

namespace quintic::lsys {

using exactalg::DenseMatrix;
using exactalg::SubspaceBasis;
using projgeom::Config;

inline constexpr int kQuinticDegree = 5;

/// Rows of df/dx, df/dy, df/dz at `a`, in Pi_d coordinates.
DenseMatrix singularity_rows(const ProjPoint& a, int d);

/// Row of f(a).
DenseMatrix vanishing_row(const ProjPoint& a, int d);

/// { g^m h : h in Pi_{d - m deg g} } inside Pi_d.
SubspaceBasis divisibility_subspace(const HomogeneousPoly& g, int m, int d);

/// L(K) as a subspace of Pi_d: forms singular at every point of K and divisible
/// by the square of every line and conic component.
SubspaceBasis linear_system(const Config& k, int d = kQuinticDegree);

/// dim L(K). The whole plane gives 0 without building a matrix.
std::size_t dim_L(const Config& k, int d = kQuinticDegree);

/// Vanishing at four points of a line plus the singularity rows at three
/// non-collinear points off it, in degree 4: a 13 x 15 matrix.
struct TransversalitySystem {
    projgeom::ProjLine line;
    std::vector<ProjPoint> on_line;
    std::vector<ProjPoint> off_line;
    DenseMatrix matrix;
};
TransversalitySystem transversality_system(Field field, std::uint64_t seed);

/// Cubics through six points and singular at a seventh point A: either 3+3
/// points on two lines (A off both) or 6 points of a nondegenerate conic (A
/// off it). 9 x 10.
struct CubicSystem {
    std::vector<ProjPoint> through;
    ProjPoint singular;
    DenseMatrix matrix;
};
enum class CubicSetup { TwoLines, Conic };
CubicSystem cubic_system(CubicSetup setup, Field field, std::uint64_t seed);

}  // namespace quintic::lsys
