#pragma once

#include <optional>
#include <vector>

#include "quintic/projgeom/geometry.hpp"

namespace quintic::projgeom {

inline constexpr int kTypeCount = 42;

/// A configuration K: finitely many points plus optional curve components
/// (lines and conics counted with multiplicity two), or the whole plane.
struct Config {
    Field field = Field::rationals();
    std::vector<ProjPoint> points;
    std::vector<ProjLine> lines;
    std::vector<Conic> conics;
    bool whole_plane = false;
    std::optional<int> type_id;

    bool finite() const { return lines.empty() && conics.empty() && !whole_plane; }

    /// Field tags agree, points pairwise distinct, type_id in 1..42.
    void validate() const;
};

}  // namespace quintic::projgeom
