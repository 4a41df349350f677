#include "quintic/io/json_io.hpp"

#include <fstream>
#include <map>

#include "quintic/errors.hpp"

namespace quintic::io {

using exactalg::DenseMatrix;
using exactalg::Field;
using exactalg::Scalar;

namespace {

// nlohmann reports schema mistakes as json::exception; surface them as bad input.
template <class F>
auto guarded(const char* what, F&& f)
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

Field field_of(const Json& j) { return Field::parse(j.at("field").get<std::string>()); }

template <std::size_t N>
std::array<Scalar, N> scalars(const Field& f, const Json& j)
{
    if (!j.is_array() || j.size() != N)
        throw InputError("expected an array of " + std::to_string(N) + " scalars");
    std::array<Scalar, N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = scalar_from_json(f, j[i]);
    return out;
}

Json triple_json(const projgeom::Triple& t)
{
    Json a = Json::array();
    for (const auto& c : t.coords())
        a.push_back(scalar_to_json(c));
    return a;
}

DenseMatrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols)
{
    if (!j.is_array() || j.size() != rows)
        throw InputError("matrix should have " + std::to_string(rows) + " rows");
    DenseMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw InputError("matrix row should have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = scalar_from_json(f, j[r][c]);
    }
    return m;
}

twisted::ChainMap chain_map_from_json(const twisted::TwistedChainComplex& c, const Json& j)
{
    if (!j.is_array() || j.size() != c.ranks().size())
        throw InputError("chain map needs one matrix per degree");
    twisted::ChainMap f;
    for (int k = 0; k <= c.top_dim(); ++k)
        f.maps.push_back(matrix_from_json(c.field(), j[static_cast<std::size_t>(k)], c.rank(k), c.rank(k)));
    return f;
}

twisted::TwistedChainComplex cw_from_json(const Field& f, const Json& j)
{
    twisted::CwComplex x;
    for (const auto& v : j.at("vertices"))
        x.add_vertex(v.get<std::string>());
    twisted::LocalSystem rho;
    for (const auto& e : j.at("edges")) {
        x.add_edge(e.at("name").get<std::string>(), x.vertex_index(e.at("tail").get<std::string>()),
                   x.vertex_index(e.at("head").get<std::string>()));
        rho.monodromy.push_back(e.contains("monodromy") ? scalar_from_json(f, e.at("monodromy")) : Scalar::one(f));
    }
    if (j.contains("faces"))
        for (const auto& face : j.at("faces")) {
            std::vector<twisted::Letter> word;
            for (const auto& l : face.at("word")) {
                auto s = l.get<std::string>();
                const int dir = !s.empty() && s[0] == '-' ? -1 : 1;
                word.push_back({x.edge_index(dir < 0 ? s.substr(1) : s), dir});
            }
            x.add_face(face.at("name").get<std::string>(), std::move(word));
        }
    return twisted::chain_complex(x, rho);
}

twisted::TwistedChainComplex chain_from_json(const Field& f, const Json& j)
{
    auto ranks = j.at("ranks").get<std::vector<std::size_t>>();
    const auto& bs = j.at("boundaries");
    if (ranks.empty() || bs.size() + 1 != ranks.size())
        throw InputError("a chain complex with n+1 ranks needs n boundary matrices");
    std::vector<DenseMatrix> d;
    for (std::size_t k = 1; k < ranks.size(); ++k)
        d.push_back(matrix_from_json(f, bs[k - 1], ranks[k - 1], ranks[k]));
    return twisted::TwistedChainComplex(f, std::move(ranks), std::move(d));
}

Json pq_json(std::pair<int, int> pq) { return Json::array({pq.first, pq.second}); }

std::pair<int, int> pq_from(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw InputError("expected [p, q]");
    return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

Scalar scalar_from_json(const Field& field, const Json& j)
{
    if (j.is_number_integer())
        return Scalar(field, j.get<long>());
    if (j.is_string())
        return Scalar::parse(field, j.get<std::string>());
    throw InputError("scalar must be an integer or a string");
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

lsys::HomogeneousPoly poly_from_json(const Json& j)
{
    return guarded("polynomial", [&] {
        const Field f = field_of(j);
        lsys::HomogeneousPoly p(f, j.at("degree").get<int>());
        for (const auto& t : j.at("terms")) {
            auto e = t.at("exp").get<std::array<int, 3>>();
            p.set(e, p.coeff(e) + scalar_from_json(f, t.at("coeff")));
        }
        return p;
    });
}

Json poly_to_json(const lsys::HomogeneousPoly& f)
{
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(Json{{"exp", Json::array({e[0], e[1], e[2]})}, {"coeff", scalar_to_json(c)}});
    return Json{{"field", f.field().to_string()}, {"degree", f.degree()}, {"terms", terms}};
}

projgeom::Config config_from_json(const Json& j)
{
    return guarded("configuration", [&] {
        projgeom::Config k;
        k.field = field_of(j);
        auto each = [&](const char* key, auto fn) {
            if (j.contains(key))
                for (const auto& x : j.at(key))
                    fn(x);
        };
        each("points", [&](const Json& x) {
            auto c = scalars<3>(k.field, x);
            k.points.emplace_back(c[0], c[1], c[2]);
        });
        each("lines", [&](const Json& x) {
            auto c = scalars<3>(k.field, x);
            k.lines.emplace_back(c[0], c[1], c[2]);
        });
        each("conics", [&](const Json& x) { k.conics.emplace_back(scalars<6>(k.field, x)); });
        k.whole_plane = j.value("whole_plane", false);
        if (j.contains("type_id") && !j.at("type_id").is_null())
            k.type_id = j.at("type_id").get<int>();
        k.validate();
        return k;
    });
}

Json config_to_json(const projgeom::Config& k)
{
    Json pts = Json::array(), lines = Json::array(), conics = Json::array();
    for (const auto& p : k.points)
        pts.push_back(triple_json(p));
    for (const auto& l : k.lines)
        lines.push_back(triple_json(l));
    for (const auto& q : k.conics) {
        Json c = Json::array();
        for (const auto& s : q.coeffs())
            c.push_back(scalar_to_json(s));
        conics.push_back(c);
    }
    return Json{{"field", k.field.to_string()},
                {"points", pts},
                {"lines", lines},
                {"conics", conics},
                {"whole_plane", k.whole_plane},
                {"type_id", k.type_id ? Json(*k.type_id) : Json(nullptr)}};
}

Json singular_set_to_json(const lsys::SingularSet& s)
{
    auto k = s.to_config();
    Json j = config_to_json(k);
    j.erase("type_id");
    return j;
}

twisted::Model model_from_json(const Json& j)
{
    return guarded("model", [&] {
        const Field f = field_of(j);
        std::optional<twisted::TwistedChainComplex> c;
        if (j.contains("chain") == j.contains("cw"))
            throw InputError("model needs exactly one of \"chain\" or \"cw\"");
        c = j.contains("chain") ? chain_from_json(f, j.at("chain")) : cw_from_json(f, j.at("cw"));
        std::optional<twisted::ChainMap> self_map;
        if (j.contains("mapping_torus")) {
            const auto& mt = j.at("mapping_torus");
            auto map = chain_map_from_json(*c, mt.at("map"));
            c = twisted::mapping_torus(*c, map, scalar_from_json(f, mt.at("twist")));
        }
        if (j.contains("self_map")) {
            self_map = chain_map_from_json(*c, j.at("self_map"));
            twisted::check_chain_map(*c, *c, *self_map);
        }
        return twisted::Model{j.value("name", std::string("model")), std::move(*c), std::move(self_map),
                              j.value("complex_dim", -1)};
    });
}

Json dataset_to_json(const ledger::Dataset& d)
{
    Json entries = Json::array();
    for (const auto& [pq, dim] : d.table.entries())
        entries.push_back(Json::array({pq.first, pq.second, dim}));
    Json columns = Json::array();
    for (const auto& c : d.columns)
        columns.push_back(Json{{"index", c.index},
                               {"k", c.k_points ? Json(*c.k_points) : Json("nondiscrete")},
                               {"d", c.fiber_dim},
                               {"base", c.base.to_string()}});
    Json diffs = Json::array();
    for (const auto& x : d.differentials)
        diffs.push_back(
            Json{{"source", pq_json(x.source)}, {"target", pq_json(x.target)}, {"page", x.page}, {"rank", x.rank}});
    Json factors = Json::array();
    for (const auto& f : d.expected_factors)
        factors.push_back(f.to_string());
    return Json{{"name", d.name},
                {"entries", entries},
                {"columns", columns},
                {"differentials", diffs},
                {"big_d", d.big_d ? Json(*d.big_d) : Json(nullptr)},
                {"expected", d.expected.to_string()},
                {"expected_factors", factors}};
}

ledger::Dataset dataset_from_json(const Json& j)
{
    return guarded("dataset", [&] {
        ledger::Dataset d;
        d.name = j.value("name", std::string("dataset"));
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 3)
                throw InputError("table entries are [p, q, dim]");
            d.table.add(e[0].get<int>(), e[1].get<int>(), e[2].get<long>());
        }
        if (j.contains("columns"))
            for (const auto& c : j.at("columns")) {
                ledger::ColumnSpec s{c.at("index").get<int>(), std::nullopt, c.at("d").get<int>(),
                                     ledger::PoincarePoly::parse(c.value("base", std::string("0")))};
                if (c.at("k").is_number_integer())
                    s.k_points = c.at("k").get<int>();
                else if (c.at("k") != "nondiscrete")
                    throw InputError("column k must be a count or \"nondiscrete\"");
                d.columns.push_back(std::move(s));
            }
        if (j.contains("differentials"))
            for (const auto& x : j.at("differentials")) {
                ledger::DifferentialDecl decl{pq_from(x.at("source")), pq_from(x.at("target")), x.at("page").get<int>(),
                                              x.at("rank").get<long>()};
                decl.validate();
                d.differentials.push_back(decl);
            }
        if (j.contains("big_d") && !j.at("big_d").is_null())
            d.big_d = j.at("big_d").get<int>();
        d.expected = ledger::PoincarePoly::parse(j.value("expected", std::string("0")));
        if (j.contains("expected_factors"))
            for (const auto& f : j.at("expected_factors"))
                d.expected_factors.push_back(ledger::PoincarePoly::parse(f.get<std::string>()));
        return d;
    });
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace quintic::io
