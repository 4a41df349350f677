// One line per acceptance criterion; exits nonzero if any fails.
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "quintic/cli/commands.hpp"
#include "quintic/errors.hpp"
#include "quintic/ledger/dataset.hpp"
#include "quintic/lsys/constraints.hpp"
#include "quintic/lsys/sweep.hpp"
#include "quintic/lsys/taxonomy.hpp"
#include "quintic/projgeom/hausdorff.hpp"
#include "quintic/projgeom/sampler.hpp"
#include "quintic/twisted/models.hpp"

using namespace quintic;
using exactalg::DenseMatrix;
using exactalg::Field;
using exactalg::Scalar;
using exactalg::SubspaceBasis;
using ledger::PoincarePoly;

namespace {

const Field QQ = Field::rationals();
const Field F = Field::prime(exactalg::kDefaultPrime);

struct Outcome {
    bool pass;
    std::string detail;
};

PoincarePoly P(const char* s) { return PoincarePoly::parse(s); }

std::string fraction(std::size_t good, std::size_t total)
{
    return std::to_string(good) + "/" + std::to_string(total);
}

Outcome c1_dimension_table()
{
    std::vector<int> all;
    for (int t = 1; t <= projgeom::kTypeCount; ++t)
        all.push_back(t);
    auto fp = lsys::dims_sweep(all, F, 0, 20);
    auto qq = lsys::dims_sweep({1, 4, 11, 23, 24, 26, 31, 38, 39, 40}, QQ, 0, 3);
    std::size_t good = 0;
    std::string first_bad;
    for (const auto* v : {&fp, &qq})
        for (const auto& s : *v) {
            good += s.ok();
            if (!s.ok() && first_bad.empty())
                first_bad = "; type " + std::to_string(s.type_id) + " gave " + std::to_string(s.dim);
        }
    const std::size_t total = fp.size() + qq.size();
    return {good == total, fraction(good, total) + " samples (42x20 over fp:65521, 10x3 over qq)" + first_bad};
}

Outcome c2_generic_points()
{
    std::size_t good = 0, total = 0;
    for (std::size_t k = 1; k <= 7; ++k)
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            projgeom::Config c;
            c.field = F;
            c.points = projgeom::sample_generic_points(k, F, projgeom::derive_seed(seed, 0, k));
            const std::size_t expected = k <= 6 ? 21 - 3 * k : 0;
            good += lsys::dim_L(c) == expected;
            ++total;
        }
    return {good == total, fraction(good, total) + " configurations, k = 1..7"};
}

Outcome c3_transversality()
{
    std::size_t good = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto s = lsys::transversality_system(F, seed);
        good += s.matrix.rows() == 13 && s.matrix.cols() == 15 && exactalg::rank(s.matrix) == 13 &&
                exactalg::kernel(s.matrix).dim() == 2;
    }
    return {good == 20, fraction(good, 20) + " instances with rank 13, kernel 2"};
}

Outcome c4_pipeline()
{
    std::ostringstream out, err;
    const int code = cli::run({"ledger", "--dataset", "quintic5", "--emit", "tables"}, out, err);
    auto j = nlohmann::json::parse(out.str());
    const auto d = ledger::named_dataset("quintic5");
    const ledger::E1Table display{{{1, 39}, 1}, {{1, 37}, 1}, {{1, 35}, 1}, {{2, 35}, 1},
                                  {{2, 33}, 1}, {{2, 31}, 1}, {{3, 29}, 1}};
    const bool ok = code == cli::kExitPass && j["result"] == "1 + t + t^3 + t^4 + t^5 + t^6 + t^8 + t^9" &&
                    j["factored"] == "(1+t)(1+t^3)(1+t^5)" && d.table == display && d.differentials.empty() &&
                    ledger::apply_differentials(d.table, d.differentials) == d.table;
    return {ok, "quintic5 -> " + j.value("factored", std::string("?")) + " = " + j.value("result", std::string("?"))};
}

Outcome c5_column_one()
{
    ledger::ColumnSpec c{1, 1, 18, P("1 + t^2 + t^4")};
    const auto got = ledger::column_contribution(c);
    const auto slice = ledger::named_dataset("quintic5").table.column(1);
    return {got == slice && got == P("t^36 + t^38 + t^40"), "column 1 -> " + got.to_string()};
}

Outcome c6_ss7()
{
    const auto b = ledger::dataset_quintic();
    const auto e = ledger::apply_differentials(b.ss7.table, b.ss7.differentials);
    const auto col39 = ledger::column_contribution(*ledger::quintic_column(39));
    return {e.empty() && ledger::totalize(e).is_zero() && col39.is_zero(),
            "E-infinity has " + std::to_string(e.entries().size()) + " entries; column 39 total " + col39.to_string()};
}

PoincarePoly prop_b_borel_moore(int i)
{
    return twisted::poincare_dual(twisted::betti_polynomial(twisted::prop_b_model(i).complex), 2);
}

Outcome c7_twisted()
{
    const auto a1 = prop_b_borel_moore(1), a2 = prop_b_borel_moore(2), a3 = prop_b_borel_moore(3);
    const auto c = twisted::prop_c_model();
    const auto h = twisted::homology(c.complex);
    const auto maps = twisted::induced_map(c.complex, c.complex, *c.self_map);
    const bool c_ok = h.size() == 2 && h[1] == 1 && maps[1].rows() == 1 && maps[1](0, 0) == Scalar(QQ, -1);
    const auto t2 = P("t^2 + t^3");
    return {a1 == t2 && a2.is_zero() && a3 == t2 && c_ok,
            "A1 " + a1.to_string() + ", A2 " + a2.to_string() + ", A3 " + a3.to_string() +
                "; Prop C on H_1: " + (maps.size() > 1 ? maps[1].to_string() : "?")};
}

Outcome c8_ssx()
{
    const auto b = prop_b_borel_moore(1);
    const auto lhs = PoincarePoly::monomial(1) * b * b;
    const auto rhs = ledger::totalize(ledger::dataset_quintic().ssx.table);
    return {lhs == rhs && lhs == P("t^5 + 2t^6 + t^7"), "t (" + b.to_string() + ")^2 = " + lhs.to_string() +
                                                             ", ssx total " + rhs.to_string()};
}

Outcome c9_regular_representation()
{
    const auto v = ledger::dataset_quintic().values;
    const auto pr = twisted::poincare_dual(v.at("Pbar(B~(CP2,3),R)"), 6);
    const auto ps = twisted::poincare_dual(v.at("Pbar(B~(CP2,3),+-R)"), 6);
    const auto pS = v.at("P(B~(CP2,3),S)");
    const auto sum = pr + ps + 2 * pS;
    const auto stored = v.at("P(F~(CP2,3))");
    const bool ok = pS == P("t^2 + t^4") && twisted::poincare_dual(v.at("Pbar(B~(CP2,3),S)"), 6) == pS &&
                    sum == stored.in_square();
    return {ok, "P(R) + P(+-R) + 2P(S) = " + sum.to_string() + " = (" + stored.to_string() + ") at t -> t^2"};
}

std::vector<projgeom::ProjPoint> plane_points(const Field& f)
{
    const long p = static_cast<long>(f.modulus());
    std::vector<projgeom::ProjPoint> pts;
    for (long s = 0; s < p; ++s)
        for (long t = 0; t < p; ++t)
            pts.emplace_back(Scalar(f, 1), Scalar(f, s), Scalar(f, t));
    for (long t = 0; t < p; ++t)
        pts.emplace_back(Scalar(f, 0), Scalar(f, 1), Scalar(f, t));
    pts.emplace_back(Scalar(f, 0), Scalar(f, 0), Scalar(f, 1));
    return pts;
}

Outcome c10_oracles()
{
    const Field f101 = Field::prime(101);
    const auto pts = plane_points(f101);
    std::vector<DenseMatrix> rows;
    rows.reserve(pts.size());
    for (const auto& a : pts)
        rows.push_back(lsys::singularity_rows(a, 5));

    std::mt19937_64 rng(2024);
    std::vector<int> planted_types;
    for (const auto& rec : lsys::taxonomy())
        if (rec.expected_dim > 0)
            planted_types.push_back(rec.type_id);

    std::size_t agree = 0, euler = 0, planted = 0, singular_total = 0;
    const auto monos = lsys::monomial_basis(5);
    for (int i = 0; i < 50; ++i) {
        lsys::HomogeneousPoly f(f101, 5);
        if (i % 2 == 0) {
            const int t = planted_types[rng() % planted_types.size()];
            auto k = projgeom::sample_generic(t, f101, rng());
            auto l = lsys::linear_system(k);
            exactalg::Vector v(monos.size(), Scalar(f101, 0));
            for (std::size_t r = 0; r < l.dim(); ++r) {
                const Scalar c(f101, static_cast<long>(rng() % 101));
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] += c * l.basis()(r, j);
            }
            f = lsys::HomogeneousPoly::from_vector(f101, 5, v);
            ++planted;
        } else {
            const std::size_t terms = 3 + rng() % 6;
            for (std::size_t j = 0; j < terms; ++j)
                f.set(monos[rng() % monos.size()], Scalar(f101, static_cast<long>(rng() % 101)));
        }
        const auto fast = lsys::singular_points(f, lsys::Execution::Parallel);
        const auto serial = lsys::singular_points(f, lsys::Execution::Serial);
        const std::set<projgeom::ProjPoint> fast_set(fast.begin(), fast.end());
        const auto v = f.to_vector();
        std::set<projgeom::ProjPoint> oracle;
        for (std::size_t a = 0; a < pts.size(); ++a) {
            bool zero = true;
            for (const auto& x : rows[a].apply(v))
                zero = zero && x.is_zero();
            if (zero)
                oracle.insert(pts[a]);
        }
        agree += oracle == fast_set && fast == serial;
        singular_total += oracle.size();

        lsys::HomogeneousPoly lhs(f101, 5);
        for (int var = 0; var < 3; ++var) {
            lsys::Exponent e{0, 0, 0};
            e[static_cast<std::size_t>(var)] = 1;
            lhs += lsys::HomogeneousPoly::monomial(f101, e, Scalar(f101, 1)) * f.derivative(var);
        }
        euler += lhs == f * Scalar(f101, 5);
    }
    return {agree == 50 && euler == 50, fraction(agree, 50) + " pointwise agreements (" + std::to_string(planted) +
                                            " planted, " + std::to_string(singular_total) +
                                            " singular points), Euler identity " + fraction(euler, 50)};
}

Outcome c11_conditions()
{
    std::vector<projgeom::Config> samples;
    for (int t : lsys::finite_types())
        for (std::uint64_t i = 0; i < 10; ++i)
            samples.push_back(projgeom::sample_generic(t, F, projgeom::derive_seed(11, t, i)));
    const auto r = lsys::check_conditions(samples);
    return {r.passed(), std::to_string(r.configs) + " configurations, " + std::to_string(r.subsets) + " subsets, " +
                            std::to_string(r.violations.size()) + " violations" +
                            (r.passed() ? "" : "; " + r.violations.front())};
}

DenseMatrix random_matrix(std::mt19937_64& rng, const Field& f, std::size_t rows, std::size_t cols, std::size_t k)
{
    auto small = [&] { return static_cast<long>(rng() % 7) - 3; };
    DenseMatrix a(f, rows, k), b(f, k, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < k; ++j)
            a(i, j) = Scalar(f, small());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            b(i, j) = Scalar(f, small());
    return a * b;
}

Outcome c12_properties()
{
    std::mt19937_64 rng(12);
    std::size_t hausdorff_ok = 0, linalg_ok = 0, complex_ok = 0, dual_ok = 0;

    using projgeom::AffinePoint;
    auto random_set = [&] {
        std::vector<AffinePoint> s;
        const std::size_t n = 1 + rng() % 4;
        for (std::size_t i = 0; i < n; ++i)
            s.push_back({mpq_class(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3),
                         mpq_class(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3)});
        return s;
    };
    for (int i = 0; i < 1000; ++i) {
        auto a = random_set(), b = random_set(), c = random_set();
        bool same = true;
        for (const auto& x : a)
            same = same && projgeom::distance_to_set(x, b) == 0;
        for (const auto& x : b)
            same = same && projgeom::distance_to_set(x, a) == 0;
        hausdorff_ok += projgeom::hausdorff(a, b) == projgeom::hausdorff(b, a) &&
                        projgeom::hausdorff(a, c) <= projgeom::hausdorff(a, b) + projgeom::hausdorff(b, c) &&
                        projgeom::hausdorff(a, a) == 0 && (projgeom::hausdorff(a, b) == 0) == same;
    }

    for (int i = 0; i < 500; ++i) {
        const Field f = i % 2 ? QQ : F;
        const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 8;
        auto m = random_matrix(rng, f, rows, cols, 1 + rng() % 6);
        auto ker = exactalg::kernel(m);
        bool ok = exactalg::rank(m) == exactalg::rank(m.transpose()) && ker.dim() + exactalg::rank(m) == cols;
        for (std::size_t r = 0; r < ker.dim(); ++r)
            for (const auto& x : m.apply(ker.basis().row(r)))
                ok = ok && x.is_zero();
        auto a = SubspaceBasis::span(random_matrix(rng, f, 1 + rng() % 5, cols, 1 + rng() % 5));
        auto b = SubspaceBasis::span(random_matrix(rng, f, 1 + rng() % 5, cols, 1 + rng() % 5));
        auto meet = exactalg::intersect(a, b);
        ok = ok && meet.dim() + exactalg::sum(a, b).dim() == a.dim() + b.dim() && meet == exactalg::intersect(b, a);
        for (std::size_t r = 0; r < meet.dim(); ++r)
            ok = ok && a.contains(meet.basis().row(r)) && b.contains(meet.basis().row(r));
        linalg_ok += ok;
    }

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto [x, rho] = twisted::random_model(seed);
        auto c = twisted::chain_complex(x, rho);
        bool ok = true;
        for (int k = 2; k <= c.top_dim(); ++k)
            ok = ok && (c.boundary(k - 1) * c.boundary(k)).is_zero();
        ok = ok && twisted::euler_characteristic(twisted::homology(c)) == twisted::euler_characteristic(x.cell_counts());
        complex_ok += ok;
    }

    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 6);
        PoincarePoly p;
        for (int j = 0; j < 4; ++j)
            p.add(static_cast<int>(rng() % (2 * n + 1)), static_cast<long>(rng() % 4));
        dual_ok += twisted::poincare_dual(twisted::poincare_dual(p, n), n) == p;
    }
    const bool pass = hausdorff_ok == 1000 && linalg_ok == 500 && complex_ok == 100 && dual_ok == 100;
    return {pass, "hausdorff " + fraction(hausdorff_ok, 1000) + ", linalg " + fraction(linalg_ok, 500) +
                      ", complexes " + fraction(complex_ok, 100) + ", duality " + fraction(dual_ok, 100)};
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"dimension table", c1_dimension_table},
        {"generic-points law", c2_generic_points},
        {"transversality", c3_transversality},
        {"pipeline", c4_pipeline},
        {"column-1 reproduction", c5_column_one},
        {"ss7 cancellation", c6_ss7},
        {"twisted engine", c7_twisted},
        {"ssx consistency", c8_ssx},
        {"regular-representation bookkeeping", c9_regular_representation},
        {"oracle equivalence", c10_oracles},
        {"taxonomy conditions", c11_conditions},
        {"property suites", c12_properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
                  << o.detail << "\n";
    }
    std::cout << (failed ? "FAILED " : "all ") << criteria.size() - static_cast<std::size_t>(failed) << "/"
              << criteria.size() << " criteria\n";
    return failed ? 1 : 0;
}
