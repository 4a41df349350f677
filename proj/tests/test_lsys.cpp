#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "quintic/errors.hpp"
#include "quintic/lsys/constraints.hpp"
#include "quintic/lsys/singular.hpp"
#include "quintic/lsys/sweep.hpp"
#include "quintic/lsys/taxonomy.hpp"
#include "quintic/projgeom/sampler.hpp"

using namespace quintic;
using namespace quintic::lsys;
using exactalg::DenseMatrix;
using projgeom::Conic;
using projgeom::ProjLine;
using projgeom::ScalarRng;

namespace {

const Field QQ = Field::rationals();
const Field F = Field::prime(65521);

ProjPoint pt(long a, long b, long c, Field f = QQ)
{
    return ProjPoint(Scalar(f, a), Scalar(f, b), Scalar(f, c));
}

ProjLine ln(long a, long b, long c, Field f = QQ)
{
    return ProjLine(Scalar(f, a), Scalar(f, b), Scalar(f, c));
}

HomogeneousPoly random_poly(ScalarRng& rng, int d)
{
    HomogeneousPoly f(rng.field(), d);
    for (const auto& e : monomial_basis(d))
        f.set(e, rng.next());
    return f;
}

HomogeneousPoly mono(Field f, Exponent e, long c = 1)
{
    return HomogeneousPoly::monomial(f, e, Scalar(f, c));
}

// Oracle: all points of P^2(F_p) where the three partials, computed by symbolic
// differentiation and evaluated one by one, vanish.
std::set<ProjPoint> naive_singular_points(const HomogeneousPoly& f)
{
    const auto p = static_cast<long>(f.field().modulus());
    std::set<ProjPoint> out;
    std::array<HomogeneousPoly, 3> d{f.derivative(0), f.derivative(1), f.derivative(2)};
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c) {
                if (a == 0 && b == 0 && c == 0)
                    continue;
                ProjPoint q = pt(a, b, c, f.field());
                if (d[0].evaluate(q).is_zero() && d[1].evaluate(q).is_zero() && d[2].evaluate(q).is_zero())
                    out.insert(q);
            }
    return out;
}

projgeom::Config points_config(Field f, std::vector<ProjPoint> pts)
{
    projgeom::Config c;
    c.field = f;
    c.points = std::move(pts);
    return c;
}

}  // namespace

TEST_CASE("monomial basis")
{
    CHECK(monomial_basis(5).size() == 21);
    CHECK(monomial_basis(1).size() == 3);
    CHECK(monomial_basis(3).size() == 10);
    CHECK(monomial_basis(0) == std::vector<Exponent>{{0, 0, 0}});
    CHECK(monomial_basis(2) == std::vector<Exponent>{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
    for (int d = 0; d <= 8; ++d) {
        auto b = monomial_basis(d);
        CHECK(b.size() == monomial_count(d));
        for (std::size_t i = 0; i < b.size(); ++i)
            CHECK(monomial_index(b[i]) == i);
    }
}

TEST_CASE("polynomial arithmetic")
{
    auto x = mono(QQ, {1, 0, 0}), y = mono(QQ, {0, 1, 0}), z = mono(QQ, {0, 0, 1});
    auto sq = (x + y).pow(2);
    CHECK(sq.coeff({1, 1, 0}) == Scalar(QQ, 2L));
    CHECK(sq.terms().size() == 3);
    CHECK((x + y * Scalar(QQ, -1L)) * (x + y) == x.pow(2) + y.pow(2) * Scalar(QQ, -1L));
    auto f = x.pow(2) * y * z.pow(2);
    CHECK(f.derivative(0) == (x * y * z.pow(2)) * Scalar(QQ, 2L));
    CHECK(f.evaluate(pt(1, 3, 2)) == Scalar(QQ, 12L));
    CHECK_THROWS_AS(x + f, InputError);
    CHECK_THROWS_AS(f.set({1, 1, 1}, Scalar(QQ, 1L)), InputError);
    CHECK(HomogeneousPoly::from_vector(QQ, 5, f.to_vector()) == f);
}

TEST_CASE("Euler relation holds identically")
{
    for (Field f : {QQ, F, Field::prime(101)}) {
        ScalarRng rng(f, 3);
        for (int d = 1; d <= 6; ++d)
            for (int trial = 0; trial < 10; ++trial) {
                auto g = random_poly(rng, d);
                auto lhs = mono(f, {1, 0, 0}) * g.derivative(0) + mono(f, {0, 1, 0}) * g.derivative(1) +
                           mono(f, {0, 0, 1}) * g.derivative(2);
                CHECK(lhs == g * Scalar(f, static_cast<long>(d)));
            }
    }
}

TEST_CASE("singularity and vanishing rows")
{
    // a = (0:0:1), d = 2: kills xz, yz, z^2
    auto rows = singularity_rows(pt(0, 0, 1), 2);
    CHECK(rows.rows() == 3);
    auto k = exactalg::kernel(rows);
    CHECK(k.dim() == 3);
    DenseMatrix expected = DenseMatrix::from_ints(QQ, 6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}});
    CHECK(k == exactalg::SubspaceBasis::span(expected));

    for (auto a : {pt(1, 0, 0), pt(3, -1, 7), pt(0, 1, 1)})
        CHECK(exactalg::kernel(singularity_rows(a, 1)).dim() == 0);
    CHECK(exactalg::rank(singularity_rows(pt(1, 0, 0), 5)) == 3);

    auto z5 = vanishing_row(pt(0, 0, 1), 5);
    for (std::size_t j = 0; j < 21; ++j)
        CHECK(z5(0, j) == Scalar(QQ, j == 20 ? 1L : 0L));
    CHECK(vanishing_row(pt(1, 1, 1), 1) == DenseMatrix::from_ints(QQ, 3, {{1, 1, 1}}));
}

TEST_CASE("rows agree with symbolic differentiation")
{
    for (Field f : {QQ, F}) {
        ScalarRng rng(f, 17);
        for (int trial = 0; trial < 20; ++trial) {
            const int d = 1 + trial % 6;
            projgeom::GeometrySource g(f, 100 + trial);
            auto a = g.point();
            auto poly = random_poly(rng, d);
            auto v = poly.to_vector();
            auto applied = singularity_rows(a, d).apply(v);
            for (int var = 0; var < 3; ++var)
                CHECK(applied[var] == poly.derivative(var).evaluate(a));
            CHECK(vanishing_row(a, d).apply(v)[0] == poly.evaluate(a));
            // Euler: f(a) is a combination of the partials at a
            auto both = singularity_rows(a, d);
            both.append_rows(vanishing_row(a, d));
            CHECK(exactalg::rank(both) == exactalg::rank(singularity_rows(a, d)));
        }
    }
}

TEST_CASE("divisibility subspaces")
{
    auto line = HomogeneousPoly::linear_form(ln(1, 2, 3));
    CHECK(divisibility_subspace(line, 2, 5).dim() == 10);
    auto conic = HomogeneousPoly::quadratic_form(Conic({Scalar(QQ, 1L), Scalar(QQ, 1L), Scalar(QQ, -1L), Scalar(QQ, 0L),
                                                        Scalar(QQ, 0L), Scalar(QQ, 0L)}));
    CHECK(divisibility_subspace(conic, 2, 5).dim() == 3);
    auto other = HomogeneousPoly::linear_form(ln(0, 1, -5));
    CHECK(intersect(divisibility_subspace(line, 2, 5), divisibility_subspace(other, 2, 5)).dim() == 3);
    CHECK_THROWS_AS(divisibility_subspace(conic, 3, 5), InputError);
    // every basis vector is divisible: l^2 h vanishes doubly on the line
    auto s = divisibility_subspace(line, 2, 5);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        auto h = HomogeneousPoly::from_vector(QQ, 5, s.basis().row(r));
        for (auto q : {pt(1, 1, -1), pt(3, 0, -1), pt(0, 3, -2)}) {
            CHECK(h.evaluate(q).is_zero());
            for (int var = 0; var < 3; ++var)
                CHECK(h.derivative(var).evaluate(q).is_zero());
        }
    }
}

TEST_CASE("dim_L examples")
{
    CHECK(dim_L(points_config(QQ, {})) == 21);
    for (Field f : {F, QQ})
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            for (std::size_t k = 1; k <= 7; ++k) {
                auto pts = projgeom::sample_generic_points(k, f, seed);
                CHECK(dim_L(points_config(f, pts)) == (k <= 6 ? 21 - 3 * k : 0));
            }
            CHECK(dim_L(projgeom::sample_generic(4, f, seed)) == 11);
            CHECK(dim_L(projgeom::sample_generic(38, f, seed)) == 1);
            CHECK(dim_L(projgeom::sample_generic(42, f, seed)) == 0);
            CHECK(dim_L(projgeom::sample_type12_with_collinear_triple(f, seed)) == 9);
        }
}

TEST_CASE("golden dimension table over F_p, serial and parallel agree")
{
    std::vector<int> all;
    for (const auto& r : taxonomy())
        all.push_back(r.type_id);
    auto serial = dims_sweep(all, F, 2024, 3, Execution::Serial);
    auto parallel = dims_sweep(all, F, 2024, 3, Execution::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        INFO("type " << serial[i].type_id << " seed " << serial[i].seed);
        CHECK(serial[i].ok());
        CHECK(serial[i].dim == parallel[i].dim);
        CHECK(serial[i].seed == parallel[i].seed);
    }
}

TEST_CASE("golden dimension table over Q spot checks")
{
    auto rows = dims_sweep({1, 4, 11, 23, 24, 26, 31, 38, 39, 40}, QQ, 7, 1);
    for (const auto& r : rows) {
        INFO("type " << r.type_id);
        CHECK(r.ok());
    }
}

TEST_CASE("monotonicity and projective invariance")
{
    ScalarRng rng(F, 99);
    for (int t : finite_types()) {
        auto k = projgeom::sample_generic(t, F, 500 + t);
        const auto d = dim_L(k);
        projgeom::GeometrySource g(F, 900 + t);
        auto bigger = k;
        bigger.type_id.reset();
        auto extra = g.point();
        if (std::find(k.points.begin(), k.points.end(), extra) == k.points.end()) {
            bigger.points.push_back(extra);
            CHECK(dim_L(bigger) <= d);
        }
        std::array<Scalar, 9> m;
        for (;;) {
            for (auto& x : m)
                x = rng.next();
            DenseMatrix mm(F, 3, 3);
            for (int i = 0; i < 9; ++i)
                mm(i / 3, i % 3) = m[i];
            if (exactalg::rank(mm) == 3)
                break;
        }
        auto moved = k;
        for (auto& p : moved.points)
            p = projgeom::transform(m, p);
        CHECK(dim_L(moved) == d);
        CHECK(classify(moved) == t);
    }
}

TEST_CASE("transversality and cubic systems")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto t = transversality_system(F, seed);
        CHECK(t.matrix.rows() == 13);
        CHECK(t.matrix.cols() == 15);
        CHECK(exactalg::rank(t.matrix) == 13);
        CHECK(exactalg::kernel(t.matrix).dim() == 2);
        CHECK(exactalg::kernel(cubic_system(CubicSetup::TwoLines, F, seed).matrix).dim() == 1);
        CHECK(exactalg::kernel(cubic_system(CubicSetup::Conic, F, seed).matrix).dim() == 1);
    }
    CHECK(exactalg::kernel(transversality_system(QQ, 1).matrix).dim() == 2);
}

TEST_CASE("classification examples")
{
    CHECK(classify(points_config(QQ, {pt(1, 0, 1), pt(2, 0, 1), pt(3, 0, 1), pt(4, 0, 1), pt(0, 1, 1)})) == 13);
    CHECK(classify(projgeom::sample_generic(26, QQ, 1)) == 26);
    CHECK(classify(points_config(QQ, {pt(1, 0, 1), pt(2, 0, 1), pt(3, 0, 1), pt(0, 1, 1), pt(0, 2, 1), pt(0, 3, 1)})) == 23);
    // seven generic points: no type
    CHECK_FALSE(classify(points_config(F, projgeom::sample_generic_points(7, F, 3))).has_value());
    // a point on a line component is absorbed
    projgeom::Config c;
    c.lines = {ln(1, 0, 0)};
    c.points = {pt(0, 1, 1), pt(1, 1, 1)};
    CHECK(classify(c) == 17);
    for (Field f : {F, QQ})
        for (int t = 1; t <= 42; ++t) {
            INFO("type " << t);
            CHECK(classify(projgeom::sample_generic(t, f, 77)) == t);
        }
    CHECK(classify(projgeom::sample_type12_with_collinear_triple(F, 5)) == 12);
}

TEST_CASE("taxonomy table")
{
    REQUIRE(taxonomy().size() == 42);
    const std::array<int, 42> golden{18, 15, 12, 11, 10, 10, 10, 10, 10, 10, 10, 9, 8, 7, 7, 7, 7, 6, 5, 4, 4,
                                     4,  4,  4,  4,  3,  3,  3,  3,  3,  3,  3, 3, 2, 1, 1, 1, 1, 1, 1, 1, 0};
    for (int t = 1; t <= 42; ++t) {
        CHECK(type_record(t).type_id == t);
        CHECK(type_record(t).expected_dim == golden[t - 1]);
        if (type_record(t).k_points)
            CHECK(projgeom::sample_generic(t, F, 1).points.size() == static_cast<std::size_t>(*type_record(t).k_points));
    }
    CHECK_THROWS_AS(type_record(0), InputError);
}

TEST_CASE("check_conditions")
{
    CHECK(check_conditions({projgeom::sample_generic(2, F, 1)}).passed());
    CHECK(check_conditions({projgeom::sample_generic(4, F, 1)}).passed());
    auto k19 = projgeom::sample_generic(19, F, 1);
    CHECK(check_conditions({k19}).passed());
    std::vector<projgeom::Config> samples;
    for (int t : finite_types())
        for (std::uint64_t seed = 0; seed < 2; ++seed)
            samples.push_back(projgeom::sample_generic(t, F, seed));
    auto report = check_conditions(samples);
    for (const auto& v : report.violations)
        MESSAGE(v);
    CHECK(report.passed());
    CHECK(report.configs == samples.size());

    auto wrong = projgeom::sample_generic(13, F, 1);
    wrong.type_id = 12;
    CHECK_FALSE(check_conditions({wrong}).passed());
}

TEST_CASE("brute-force singular sets")
{
    const Field f11 = Field::prime(11);
    auto fermat = mono(f11, {5, 0, 0}) + mono(f11, {0, 5, 0}) + mono(f11, {0, 0, 5});
    CHECK(singular_set_bruteforce(fermat, 11).empty());

    for (std::uint64_t p : {7, 11, 13}) {
        const Field fp = Field::prime(p);
        auto s = singular_set_bruteforce(mono(fp, {2, 2, 1}), p);
        CHECK(s.isolated_points.empty());
        CHECK(s.line_components.size() == 2);
        CHECK(s.conic_components.empty());
        CHECK(classify(s.to_config()) == 31);
    }

    // x^2 g with g a smooth cubic
    const Field f13 = Field::prime(13);
    ScalarRng rng(f13, 5);
    for (;;) {
        auto g = random_poly(rng, 3);
        if (!naive_singular_points(g).empty())
            continue;
        auto s = singular_set_bruteforce(mono(f13, {2, 0, 0}) * g, 13);
        REQUIRE(s.line_components.size() == 1);
        CHECK(s.line_components[0] == ln(1, 0, 0, f13));
        CHECK(s.isolated_points.empty());
        CHECK(classify(s.to_config()) == 11);
        break;
    }

    // q^2 l with q = xy - z^2
    auto q = mono(f13, {1, 1, 0}) + mono(f13, {0, 0, 2}, -1);
    auto s = singular_set_bruteforce(q.pow(2) * mono(f13, {1, 0, 0}), 13);
    CHECK(s.line_components.empty());
    REQUIRE(s.conic_components.size() == 1);
    CHECK(classify(s.to_config()) == 33);

    CHECK(singular_set_bruteforce(HomogeneousPoly(f13, 5), 13).whole_plane);
    CHECK(classify(singular_set_bruteforce(HomogeneousPoly(f13, 5), 13).to_config()) == 42);

    CHECK_THROWS_AS(singular_set_bruteforce(fermat, 5), InputError);
    CHECK_THROWS_AS(singular_set_bruteforce(mono(Field::prime(5), {5, 0, 0}), 5), InputError);
}

TEST_CASE("brute force matches the naive oracle and the constraint kernels")
{
    const Field f101 = Field::prime(101);
    const Field f13 = Field::prime(13);
    ScalarRng rng(f13, 8);
    for (int trial = 0; trial < 6; ++trial) {
        // planted singularities: a random member of L(K)
        auto k = projgeom::sample_generic(trial % 2 ? 18 : 23, f13, trial);
        auto space = linear_system(k);
        exactalg::Vector v(21, Scalar::zero(f13));
        for (std::size_t r = 0; r < space.dim(); ++r) {
            Scalar c = rng.next();
            for (std::size_t j = 0; j < 21; ++j)
                v[j] += c * space.basis()(r, j);
        }
        auto f = HomogeneousPoly::from_vector(f13, 5, v);
        auto fast = singular_points(f, Execution::Serial);
        CHECK(std::set<ProjPoint>(fast.begin(), fast.end()) == naive_singular_points(f));
        CHECK(fast == singular_points(f, Execution::Parallel));
        for (const auto& a : k.points)
            CHECK(std::find(fast.begin(), fast.end(), a) != fast.end());
    }

    ScalarRng rng101(f101, 1);
    for (int trial = 0; trial < 3; ++trial) {
        auto f = random_poly(rng101, 5);
        auto sing = singular_points(f);
        std::set<ProjPoint> s(sing.begin(), sing.end());
        auto v = f.to_vector();
        for (long a = 0; a < 101; a += 7)
            for (long b = 0; b < 101; ++b) {
                ProjPoint q = pt(1, a, b, f101);
                auto g = singularity_rows(q, 5).apply(v);
                bool in_kernel = g[0].is_zero() && g[1].is_zero() && g[2].is_zero();
                CHECK(in_kernel == s.contains(q));
            }
    }
}
