#pragma once

#include <cstdint>
#include <vector>

#include "quintic/projgeom/config.hpp"
#include "quintic/projgeom/random.hpp"

namespace quintic::projgeom {

inline constexpr int kDefaultMaxAttempts = 1000;

/// Random geometric primitives over one field.
class GeometrySource {
public:
    GeometrySource(Field field, std::uint64_t seed) : rng_(field, seed) {}

    const Field& field() const { return rng_.field(); }
    ScalarRng& rng() { return rng_; }

    ProjPoint point();
    ProjLine line();
    ProjPoint point_on(const ProjLine& l);
    std::vector<ProjPoint> points_on(const ProjLine& l, std::size_t k);
    /// Another point of `c`, found by intersecting it with a random line through `base`.
    ProjPoint point_on(const Conic& c, const ProjPoint& base);
    /// Conic through five random points.
    Conic conic(std::vector<ProjPoint>* five = nullptr);

private:
    ScalarRng rng_;
};

/// Draws a configuration of the given type (1..42) with exactly the incidence
/// pattern of that type and no accidental extra collinearities; degenerate
/// draws are rejected. Deterministic in (type_id, field, seed).
/// Throws FieldTooSmall when `max_attempts` draws all fail.
Config sample_generic(int type_id, Field field, std::uint64_t seed, int max_attempts = kDefaultMaxAttempts);

/// Type 12 in its special form: three of the four points on a line.
Config sample_type12_with_collinear_triple(Field field, std::uint64_t seed, int max_attempts = kDefaultMaxAttempts);

/// k points with no three collinear and no six on a conic.
std::vector<ProjPoint> sample_generic_points(std::size_t k, Field field, std::uint64_t seed,
                                             int max_attempts = kDefaultMaxAttempts);

/// Sizes (descending) of the maximal collinear subsets of >= 3 points that a
/// generic member of the type has among its isolated points.
std::vector<std::size_t> expected_line_profile(int type_id);

std::vector<std::size_t> line_profile(std::span<const ProjPoint> pts);

}  // namespace quintic::projgeom
