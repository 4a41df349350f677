#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

#include "quintic/projgeom/geometry.hpp"

namespace quintic::projgeom {

/// A point of an affine chart, with exact rational coordinates.
using AffinePoint = std::vector<mpq_class>;

/// Chebyshev (L-infinity) distance.
mpq_class chebyshev(const AffinePoint& a, const AffinePoint& b);

/// rho(x, S) = min over s in S of chebyshev(x, s).
mpq_class distance_to_set(const AffinePoint& x, std::span<const AffinePoint> s);

/// max_{x in K} rho(x, L) + max_{y in L} rho(y, K). Note the sum of the two
/// directed distances, not their maximum.
mpq_class hausdorff(std::span<const AffinePoint> k, std::span<const AffinePoint> l);

/// Same metric on rational projective points, read in the chart z != 0 as (x/z, y/z).
Scalar hausdorff(std::span<const ProjPoint> k, std::span<const ProjPoint> l);

AffinePoint to_chart(const ProjPoint& p);

}  // namespace quintic::projgeom
