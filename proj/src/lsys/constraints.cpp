#include "quintic/lsys/constraints.hpp"

#include <set>

#include "quintic/errors.hpp"
#include "quintic/projgeom/sampler.hpp"

namespace quintic::lsys {

namespace {

// Row of the linear functional f -> (d^k f / dv^k) evaluated at a, k = 0 or a
// single first derivative.
DenseMatrix evaluation_row(const ProjPoint& a, int d, int var)
{
    const Field f = a.field();
    std::array<std::vector<Scalar>, 3> powers;
    for (int i = 0; i < 3; ++i) {
        powers[i].push_back(Scalar::one(f));
        for (int k = 1; k <= d; ++k)
            powers[i].push_back(powers[i].back() * a[i]);
    }
    DenseMatrix row(f, 1, monomial_count(d));
    auto basis = monomial_basis(d);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Exponent e = basis[j];
        Scalar factor = Scalar::one(f);
        if (var >= 0) {
            if (e[var] == 0)
                continue;
            factor = Scalar(f, static_cast<long>(e[var]));
            --e[var];
        }
        row(0, j) = factor * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
    }
    return row;
}

void require_degree(int d)
{
    if (d < 1)
        throw InputError("degree must be at least 1");
}

}  // namespace

DenseMatrix singularity_rows(const ProjPoint& a, int d)
{
    require_degree(d);
    DenseMatrix m(a.field(), 0, monomial_count(d));
    for (int var = 0; var < 3; ++var)
        m.append_rows(evaluation_row(a, d, var));
    return m;
}

DenseMatrix vanishing_row(const ProjPoint& a, int d)
{
    require_degree(d);
    return evaluation_row(a, d, -1);
}

SubspaceBasis divisibility_subspace(const HomogeneousPoly& g, int m, int d)
{
    if (m < 1)
        throw InputError("multiplicity must be positive");
    const int rest = d - m * g.degree();
    if (rest < 0)
        throw InputError("divisor of degree " + std::to_string(m * g.degree()) + " exceeds degree " + std::to_string(d));
    if (g.is_zero())
        throw InputError("divisor is the zero polynomial");
    HomogeneousPoly gm = g.pow(m);
    DenseMatrix gens(g.field(), 0, monomial_count(d));
    for (const auto& e : monomial_basis(rest)) {
        auto v = (gm * HomogeneousPoly::monomial(g.field(), e, Scalar::one(g.field()))).to_vector();
        gens.append_row(v);
    }
    return SubspaceBasis::span(gens);
}

SubspaceBasis linear_system(const Config& k, int d)
{
    require_degree(d);
    k.validate();
    const Field f = k.field;
    if (k.whole_plane)
        return SubspaceBasis(f, monomial_count(d));
    SubspaceBasis space = SubspaceBasis::whole(f, monomial_count(d));
    for (const auto& l : k.lines)
        space = intersect(space, divisibility_subspace(HomogeneousPoly::linear_form(l), 2, d));
    for (const auto& q : k.conics)
        space = intersect(space, divisibility_subspace(HomogeneousPoly::quadratic_form(q), 2, d));
    if (!k.points.empty()) {
        DenseMatrix rows(f, 0, monomial_count(d));
        for (const auto& p : k.points)
            rows.append_rows(singularity_rows(p, d));
        space = intersect(space, exactalg::kernel(rows));
    }
    return space;
}

std::size_t dim_L(const Config& k, int d)
{
    if (k.whole_plane)
        return 0;
    return linear_system(k, d).dim();
}

TransversalitySystem transversality_system(Field field, std::uint64_t seed)
{
    projgeom::GeometrySource g(field, seed);
    for (int attempt = 0; attempt < projgeom::kDefaultMaxAttempts; ++attempt) {
        auto l = g.line();
        auto xs = g.points_on(l, 4);
        std::vector<ProjPoint> ys{g.point(), g.point(), g.point()};
        if (std::set<ProjPoint>(xs.begin(), xs.end()).size() != 4)
            continue;
        if (std::set<ProjPoint>(ys.begin(), ys.end()).size() != 3)
            continue;
        if (std::any_of(ys.begin(), ys.end(), [&](const ProjPoint& y) { return projgeom::incident(y, l); }))
            continue;
        if (projgeom::collinear(ys[0], ys[1], ys[2]))
            continue;
        DenseMatrix m(field, 0, monomial_count(4));
        for (const auto& x : xs)
            m.append_rows(vanishing_row(x, 4));
        for (const auto& y : ys)
            m.append_rows(singularity_rows(y, 4));
        return {l, xs, ys, m};
    }
    throw FieldTooSmall("could not draw a transversality configuration over " + field.to_string());
}

CubicSystem cubic_system(CubicSetup setup, Field field, std::uint64_t seed)
{
    auto six = projgeom::sample_generic(setup == CubicSetup::TwoLines ? 23 : 24, field, seed).points;
    projgeom::GeometrySource g(field, projgeom::splitmix64(seed));
    auto excluded = [&](const ProjPoint& a) {
        if (setup == CubicSetup::TwoLines) {
            auto l1 = projgeom::line_through(six[0], six[1]);
            auto l2 = projgeom::line_through(six[3], six[4]);
            return projgeom::incident(a, l1) || projgeom::incident(a, l2);
        }
        return projgeom::conic_through(std::span(six).first(5)).evaluate(a).is_zero();
    };
    for (int attempt = 0; attempt < projgeom::kDefaultMaxAttempts; ++attempt) {
        auto a = g.point();
        if (excluded(a))
            continue;
        DenseMatrix m(field, 0, monomial_count(3));
        for (const auto& x : six)
            m.append_rows(vanishing_row(x, 3));
        m.append_rows(singularity_rows(a, 3));
        return {six, a, m};
    }
    throw FieldTooSmall("could not draw a point off the cubic setup over " + field.to_string());
}

}  // namespace quintic::lsys
