#include "quintic/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "quintic/errors.hpp"
#include "quintic/io/json_io.hpp"
#include "quintic/lsys/constraints.hpp"
#include "quintic/lsys/sweep.hpp"
#include "quintic/lsys/taxonomy.hpp"

namespace quintic::cli {

using io::Json;
using twisted::PoincarePoly;

namespace {

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::array();
    Json extra = Json::object();
    std::size_t failed = 0;

    void check(const std::string& name, const Json& expected, const Json& computed)
    {
        const bool pass = expected == computed;
        failed += pass ? 0 : 1;
        results.push_back(Json{{"check", name}, {"expected", expected}, {"computed", computed}, {"pass", pass}});
    }

    int exit_code() const { return failed == 0 ? kExitPass : kExitMismatch; }

    Json to_json() const
    {
        Json j{{"command", command}, {"inputs", inputs}};
        for (const auto& [k, v] : extra.items())
            j[k] = v;
        j["results"] = results;
        j["exit_code"] = exit_code();
        return j;
    }
};

struct Options {
    std::string type = "all";
    std::string field = "fp:65521";
    std::uint64_t seeds = 20;
    std::uint64_t seed = 0;
    std::string dataset = "quintic5";
    std::string emit = "poincare";
    std::string model;
    std::string poly;
    std::string out;
};

Report cmd_dims(const Options& o, std::ostream& err)
{
    Report r{"dims"};
    const auto field = exactalg::Field::parse(o.field);
    std::vector<int> types;
    if (o.type == "all") {
        for (int t = 1; t <= projgeom::kTypeCount; ++t)
            types.push_back(t);
    } else {
        int t = 0;
        try {
            t = std::stoi(o.type);
        } catch (const std::exception&) {
            throw InputError("--type must be 1..42 or all");
        }
        lsys::type_record(t);
        types.push_back(t);
    }
    r.inputs = Json{{"type", o.type}, {"field", field.to_string()}, {"seeds", o.seeds}, {"seed", o.seed}};
    for (const auto& s : lsys::dims_sweep(types, field, o.seed, o.seeds)) {
        const auto name = "type " + std::to_string(s.type_id) + " sample " + std::to_string(s.index);
        r.check(name, s.expected, s.dim);
        r.results.back()["sampler_seed"] = s.seed;
    }
    err << "dims: " << r.results.size() - r.failed << "/" << r.results.size() << " samples match\n";
    return r;
}

Report cmd_classify(const Options& o, std::ostream& err)
{
    Report r{"classify"};
    if (o.poly.empty())
        throw InputError("classify needs --poly <file>");
    const Json pj = io::read_json_file(o.poly);
    const auto f = io::poly_from_json(pj);
    if (!f.field().is_prime())
        throw InputError("classify needs a polynomial over F_p");
    r.inputs = Json{{"poly", o.poly}, {"field", f.field().to_string()}, {"degree", f.degree()}};

    const auto s = lsys::singular_set_bruteforce(f, f.field().modulus());
    const auto k = s.to_config();
    std::string label;
    std::optional<int> type;
    if (s.empty()) {
        label = "nonsingular";
    } else {
        type = lsys::classify(k);
        label = type ? "type " + std::to_string(*type) : "none";
    }
    r.extra["singular_set"] = io::singular_set_to_json(s);
    r.extra["classification"] = label;
    if (type) {
        const auto& rec = lsys::type_record(*type);
        r.extra["description"] = rec.description;
    }
    if (!s.empty() && f.degree() == lsys::kQuinticDegree) {
        // f must lie in L(K); its codimension in the space of quintics
        const auto l = lsys::linear_system(k);
        r.extra["codimension"] = lsys::monomial_count(lsys::kQuinticDegree) - l.dim();
        r.check("f in L(K)", true, l.contains(f.to_vector()));
        if (type)
            r.check("dim L(K)", lsys::type_record(*type).expected_dim, l.dim());
    }
    if (pj.contains("expected_classification"))
        r.check("classification", pj.at("expected_classification"), label);
    err << "classify: " << label << " (" << s.isolated_points.size() << " isolated points, "
        << s.line_components.size() << " lines, " << s.conic_components.size() << " conics"
        << (s.whole_plane ? ", whole plane" : "") << ")\n";
    return r;
}

Json table_json(const ledger::E1Table& t)
{
    Json a = Json::object();
    for (const auto& [pq, d] : t.entries())
        a[std::to_string(pq.first) + "," + std::to_string(pq.second)] = d;
    return a;
}

Report cmd_ledger(const Options& o, std::ostream& err)
{
    Report r{"ledger"};
    if (o.emit != "poincare" && o.emit != "tables")
        throw InputError("--emit must be poincare or tables");
    const auto names = ledger::dataset_names();
    const bool builtin = std::find(names.begin(), names.end(), o.dataset) != names.end();
    if (!builtin && !std::filesystem::is_regular_file(o.dataset))
        throw InputError("unknown dataset '" + o.dataset + "'");
    const auto d = builtin ? ledger::named_dataset(o.dataset) : io::dataset_from_json(io::read_json_file(o.dataset));
    r.inputs = Json{{"dataset", o.dataset}, {"emit", o.emit}};

    const auto res = ledger::run_pipeline(d);
    const auto factored = ledger::factored_string(d.expected_factors);
    if (o.emit == "tables") {
        r.extra["e1"] = table_json(d.table);
        r.extra["e_infinity"] = table_json(res.e_infinity);
        Json cols = Json::array();
        std::set<int> ps;
        for (const auto& [pq, dim] : d.table.entries())
            ps.insert(pq.first);
        for (int p : ps)
            cols.push_back(Json{{"p", p},
                                {"e1", d.table.column(p).to_string()},
                                {"e_infinity", res.e_infinity.column(p).to_string()}});
        r.extra["columns"] = cols;
        r.extra["total"] = res.total.to_string();
    }
    r.extra["result"] = res.result.to_string();
    if (res.matches && !factored.empty())
        r.extra["factored"] = factored;
    r.check("result", d.expected.to_string(), res.result.to_string());
    if (!d.columns.empty())
        r.check("columns reproduce E1 by the shift formula", table_json(d.table),
                table_json(ledger::assemble_columns(d.columns)));

    err << "ledger " << d.name << ": ";
    if (res.matches && !factored.empty())
        err << factored << " = ";
    err << res.result.to_string() << (res.matches ? "" : "  (expected " + d.expected.to_string() + ")") << "\n";
    if (d.name == "ss7")
        err << "column 39 contributes " << res.total.to_string() << "\n";
    return r;
}

Json matrix_json(const exactalg::DenseMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(io::scalar_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

struct ModelExpectation {
    std::optional<std::string> borel_moore;
    std::map<int, Json> induced;
};

ModelExpectation builtin_expectation(const std::string& name)
{
    ModelExpectation e;
    if (name == "prop-b-a1" || name == "prop-b-a3") {
        e.borel_moore = "t^2 + t^3";
        // identity on H_1, -1 on H_2; Borel-Moore degrees 3 and 2 respectively
        e.induced[1] = Json::array({Json::array({"1"})});
        e.induced[2] = Json::array({Json::array({"-1"})});
    } else if (name == "prop-b-a2") {
        e.borel_moore = "0";
    } else if (name == "prop-c") {
        e.borel_moore = "t";
        e.induced[1] = Json::array({Json::array({"-1"})});
    }
    return e;
}

Report cmd_homology(const Options& o, std::ostream& err)
{
    Report r{"homology"};
    if (o.model.empty())
        throw InputError("homology needs --model <name|file>");
    const auto names = twisted::builtin_model_names();
    const bool builtin = std::find(names.begin(), names.end(), o.model) != names.end();
    ModelExpectation expect;
    std::optional<twisted::Model> model;
    if (builtin) {
        model = twisted::builtin_model(o.model);
        expect = builtin_expectation(o.model);
    } else {
        const Json j = io::read_json_file(o.model);
        model = io::model_from_json(j);
        if (j.contains("expected_borel_moore"))
            expect.borel_moore = j.at("expected_borel_moore").get<std::string>();
    }
    r.inputs = Json{{"model", o.model}};
    const auto& c = model->complex;
    const auto betti = twisted::homology(c);
    const auto p = twisted::betti_polynomial(c);
    r.extra["name"] = model->name;
    r.extra["field"] = c.field().to_string();
    r.extra["ranks"] = c.ranks();
    r.extra["betti"] = betti;
    r.extra["poincare"] = p.to_string();
    if (model->complex_dim >= 0) {
        const auto bm = twisted::poincare_dual(p, model->complex_dim);
        r.extra["borel_moore"] = bm.to_string();
        if (expect.borel_moore)
            r.check("Borel-Moore polynomial", *expect.borel_moore, bm.to_string());
    }
    if (model->self_map) {
        const auto maps = twisted::induced_map(c, c, *model->self_map);
        Json induced = Json::array();
        for (std::size_t k = 0; k < maps.size(); ++k)
            induced.push_back(Json{{"degree", k}, {"matrix", matrix_json(maps[k])}});
        r.extra["induced"] = induced;
        for (const auto& [k, m] : expect.induced)
            r.check("induced map on H_" + std::to_string(k), m, matrix_json(maps[static_cast<std::size_t>(k)]));
    }
    err << "homology " << model->name << ": P = " << p.to_string();
    if (r.extra.contains("borel_moore"))
        err << ", Borel-Moore P = " << r.extra["borel_moore"].get<std::string>();
    err << "\n";
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact checks for the discriminant of plane quintics", "quintic"};
    app.require_subcommand(1);
    Options o;
    auto* dims = app.add_subcommand("dims", "dim L(K) over sampled configurations of each type");
    dims->add_option("--type", o.type, "1..42 or all");
    dims->add_option("--field", o.field, "qq or fp:<p>");
    dims->add_option("--seeds", o.seeds, "samples per type");
    dims->add_option("--seed", o.seed, "sweep seed");
    auto* classify = app.add_subcommand("classify", "brute-force singular set of a polynomial over F_p");
    classify->add_option("--poly", o.poly, "polynomial JSON file")->required();
    auto* led = app.add_subcommand("ledger", "spectral-sequence pipeline");
    led->add_option("--dataset", o.dataset, "quintic5, ss2, ss7, ssx or a JSON file");
    led->add_option("--emit", o.emit, "poincare or tables");
    auto* hom = app.add_subcommand("homology", "twisted homology of a model");
    hom->add_option("--model", o.model, "prop-b-a1..3, prop-c or a JSON file")->required();
    for (auto* s : {dims, classify, led, hom})
        s->add_option("--out", o.out, "write the report here instead of stdout");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    Report r;
    try {
        if (dims->parsed())
            r = cmd_dims(o, err);
        else if (classify->parsed())
            r = cmd_classify(o, err);
        else if (led->parsed())
            r = cmd_ledger(o, err);
        else
            r = cmd_homology(o, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Unsupported& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    const std::string text = r.to_json().dump(2) + "\n";
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            err << "error: cannot write " << o.out << "\n";
            return kExitBadInput;
        }
        f << text;
    }
    err << (r.failed == 0 ? "PASS" : "FAIL") << ": " << r.results.size() - r.failed << "/" << r.results.size()
        << " checks\n";
    return r.exit_code();
}

}  // namespace quintic::cli
