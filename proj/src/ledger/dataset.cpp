#include "quintic/ledger/dataset.hpp"

#include "quintic/errors.hpp"
#include "quintic/lsys/taxonomy.hpp"

namespace quintic::ledger {

namespace {

PoincarePoly t(int degree, long coeff = 1) { return PoincarePoly::monomial(degree, coeff); }

std::map<std::string, PoincarePoly> quintic_values()
{
    std::map<std::string, PoincarePoly> v;
    // Borel-Moore polynomials of configuration spaces
    v["Pbar(CP2,R)"] = grassmann_poincare(1, 2);
    v["Pbar(B(CP2,2),+-R)"] = grassmann_poincare(2, 2).shifted(2);
    v["Pbar(B(C^n,k),+-R), k>=2"] = {};
    v["Pbar(B~(CP2,3),R)"] = t(12);
    v["Pbar(B~(CP2,3),+-R)"] = t(6);
    v["Pbar(B~(CP2,3),S)"] = t(8) * PoincarePoly{{0, 1}, {2, 1}};
    // cohomology of the generic ordered triples, and the values it splits into
    v["P(F~(CP2,3))"] = PoincarePoly{{0, 1}, {1, 1}, {2, 1}} * PoincarePoly{{0, 1}, {1, 1}};
    v["P(B~(CP2,3),S)"] = t(2) * PoincarePoly{{0, 1}, {2, 1}};
    // figure-eight bundle over C^*
    v["Pbar(B(C*,2),A1)"] = t(2) * PoincarePoly{{0, 1}, {1, 1}};
    v["Pbar(B(C*,2),A2)"] = {};
    v["Pbar(B(C*,2),A3)"] = t(2) * PoincarePoly{{0, 1}, {1, 1}};
    // four-line complement
    v["P(L,L)"] = t(2);
    // fiber of the column-39 bundle: S^2 minus three points with the sign system
    v["Pbar(Z,+-R)"] = t(1);
    // columns whose E^2 vanishes
    v["Pbar(X38,+-R)"] = {};
    v["Pbar(X39,+-R)"] = {};
    return v;
}

Dataset main_table()
{
    Dataset d;
    d.name = "quintic5";
    d.table = E1Table{{{1, 39}, 1}, {{1, 37}, 1}, {{1, 35}, 1}, {{2, 35}, 1}, {{2, 33}, 1}, {{2, 31}, 1}, {{3, 29}, 1}};
    d.big_d = 21;
    d.expected_factors = {PoincarePoly{{0, 1}, {1, 1}}, PoincarePoly{{0, 1}, {3, 1}}, PoincarePoly{{0, 1}, {5, 1}}};
    d.expected = d.expected_factors[0] * d.expected_factors[1] * d.expected_factors[2];
    for (int i = 1; i <= 42; ++i)
        if (auto c = quintic_column(i))
            d.columns.push_back(*c);
    return d;
}

Dataset ss2_table()
{
    Dataset d;
    d.name = "ss2";
    d.table = E1Table{{{2, 3}, 3}, {{3, 3}, 3}, {{4, 3}, 1}, {{2, 2}, 1}};
    d.expected = PoincarePoly{{4, 1}, {5, 3}, {6, 3}, {7, 1}};
    return d;
}

Dataset ss7_table()
{
    Dataset d;
    d.name = "ss7";
    d.table = E1Table{{{6, 7}, 1}, {{8, 6}, 1}, {{10, 6}, 1}, {{12, 5}, 1}};
    d.differentials = {{{8, 6}, {6, 7}, 2, 1}, {{12, 5}, {10, 6}, 2, 1}};
    return d;
}

Dataset ssx_table()
{
    Dataset d;
    d.name = "ssx";
    d.table = E1Table{{{4, 1}, 1}, {{5, 1}, 2}, {{6, 1}, 1}};
    const PoincarePoly b = t(2) * PoincarePoly{{0, 1}, {1, 1}};
    d.expected_factors = {t(1), b, b};
    d.expected = t(1) * b * b;
    return d;
}

}  // namespace

PipelineResult run_pipeline(const Dataset& d)
{
    PipelineResult r;
    r.e_infinity = apply_differentials(d.table, d.differentials);
    r.total = totalize(r.e_infinity);
    r.result = d.big_d ? alexander_dualize(r.total, *d.big_d) : r.total;
    r.matches = r.result == d.expected;
    return r;
}

std::string factored_string(const std::vector<PoincarePoly>& factors)
{
    std::string out;
    for (const auto& f : factors) {
        std::string s;
        for (char c : f.to_string())
            if (c != ' ')
                s += c;
        out += f.terms().size() > 1 ? "(" + s + ")" : s;
    }
    return out;
}

QuinticBundle dataset_quintic()
{
    return {main_table(), ss2_table(), ss7_table(), ssx_table(), quintic_values()};
}

std::optional<ColumnSpec> quintic_column(int i)
{
    const auto& rec = lsys::type_record(i);
    ColumnSpec c{i, rec.k_points, rec.expected_dim, {}};
    if (!rec.k_points)
        return c;  // nondiscrete: zero base
    static const auto values = quintic_values();
    switch (i) {
    case 1: c.base = values.at("Pbar(CP2,R)"); return c;
    case 2: c.base = values.at("Pbar(B(CP2,2),+-R)"); return c;
    case 3: c.base = values.at("Pbar(B~(CP2,3),+-R)"); return c;
    case 38: c.base = values.at("Pbar(X38,+-R)"); return c;
    case 39: c.base = values.at("Pbar(X39,+-R)"); return c;
    default: return std::nullopt;
    }
}

E1Table assemble_columns(const std::vector<ColumnSpec>& columns)
{
    E1Table t;
    for (const auto& c : columns)
        t.add_column(c.index, column_contribution(c));
    return t;
}

std::vector<std::string> dataset_names() { return {"quintic5", "ss2", "ss7", "ssx"}; }

Dataset named_dataset(const std::string& name)
{
    if (name == "quintic5")
        return main_table();
    if (name == "ss2")
        return ss2_table();
    if (name == "ss7")
        return ss7_table();
    if (name == "ssx")
        return ssx_table();
    throw InputError("unknown dataset '" + name + "'");
}

}  // namespace quintic::ledger
