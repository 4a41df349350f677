#include "quintic/projgeom/hausdorff.hpp"

#include "quintic/errors.hpp"

namespace quintic::projgeom {

mpq_class chebyshev(const AffinePoint& a, const AffinePoint& b)
{
    if (a.size() != b.size())
        throw InputError("points of different dimensions");
    mpq_class d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpq_class diff = abs(a[i] - b[i]);
        if (diff > d)
            d = diff;
    }
    return d;
}

mpq_class distance_to_set(const AffinePoint& x, std::span<const AffinePoint> s)
{
    if (s.empty())
        throw InputError("distance to an empty set");
    mpq_class best = chebyshev(x, s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) {
        mpq_class d = chebyshev(x, s[i]);
        if (d < best)
            best = d;
    }
    return best;
}

namespace {

mpq_class directed(std::span<const AffinePoint> from, std::span<const AffinePoint> to)
{
    mpq_class worst = 0;
    for (const auto& x : from) {
        mpq_class d = distance_to_set(x, to);
        if (d > worst)
            worst = d;
    }
    return worst;
}

}  // namespace

mpq_class hausdorff(std::span<const AffinePoint> k, std::span<const AffinePoint> l)
{
    if (k.empty() || l.empty())
        throw InputError("hausdorff() needs nonempty sets");
    return directed(k, l) + directed(l, k);
}

AffinePoint to_chart(const ProjPoint& p)
{
    if (!p.field().is_rational())
        throw InputError("hausdorff() needs rational coordinates");
    if (p[2].is_zero())
        throw InputError("point " + p.to_string() + " lies outside the chart z != 0");
    return {p[0].rational() / p[2].rational(), p[1].rational() / p[2].rational()};
}

Scalar hausdorff(std::span<const ProjPoint> k, std::span<const ProjPoint> l)
{
    std::vector<AffinePoint> ka, la;
    for (const auto& p : k)
        ka.push_back(to_chart(p));
    for (const auto& p : l)
        la.push_back(to_chart(p));
    return Scalar(hausdorff(ka, la));
}

}  // namespace quintic::projgeom
