#include "quintic/projgeom/config.hpp"

#include <set>

#include "quintic/errors.hpp"

namespace quintic::projgeom {

void Config::validate() const
{
    for (const auto& p : points)
        if (p.field() != field)
            throw InputError("configuration point over the wrong field");
    for (const auto& l : lines)
        if (l.field() != field)
            throw InputError("configuration line over the wrong field");
    for (const auto& c : conics)
        if (c.field() != field)
            throw InputError("configuration conic over the wrong field");
    if (std::set<ProjPoint>(points.begin(), points.end()).size() != points.size())
        throw InputError("configuration points are not pairwise distinct");
    if (std::set<ProjLine>(lines.begin(), lines.end()).size() != lines.size())
        throw InputError("configuration lines are not pairwise distinct");
    if (type_id && (*type_id < 1 || *type_id > kTypeCount))
        throw InputError("type_id out of range 1..42: " + std::to_string(*type_id));
}

}  // namespace quintic::projgeom
