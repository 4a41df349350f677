#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "quintic/cli/commands.hpp"
#include "quintic/errors.hpp"
#include "quintic/io/json_io.hpp"
#include "quintic/projgeom/sampler.hpp"

using namespace quintic;
using io::Json;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json report() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(QUINTIC_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("polynomial and configuration JSON round trips")
{
    const auto f = exactalg::Field::prime(13);
    lsys::HomogeneousPoly p(f, 5);
    p.set({2, 2, 1}, exactalg::Scalar(f, 3));
    p.set({0, 0, 5}, exactalg::Scalar(f, 12));
    CHECK(io::poly_from_json(io::poly_to_json(p)) == p);
    CHECK_THROWS_AS(io::poly_from_json(Json{{"field", "fp:13"}, {"degree", 5}, {"terms", {{{"exp", {1, 1, 1}}, {"coeff", "1"}}}}}),
                    InputError);
    CHECK_THROWS_AS(io::poly_from_json(Json{{"degree", 5}}), InputError);

    for (int t : {1, 11, 23, 31, 33, 39, 42}) {
        auto k = projgeom::sample_generic(t, exactalg::Field::rationals(), 7);
        auto back = io::config_from_json(io::config_to_json(k));
        CHECK(back.points == k.points);
        CHECK(back.lines == k.lines);
        CHECK(back.conics == k.conics);
        CHECK(back.whole_plane == k.whole_plane);
        CHECK(back.type_id == k.type_id);
    }
    CHECK_THROWS_AS(io::config_from_json(Json{{"field", "qq"}, {"points", {{1, 0}}}}), InputError);
}

TEST_CASE("model and dataset JSON")
{
    auto m = io::model_from_json(io::read_json_file(data("prop_b_a3.json")));
    CHECK(twisted::homology(m.complex) == twisted::homology(twisted::prop_b_model(3).complex));
    CHECK_THROWS_AS(io::model_from_json(io::read_json_file(data("bad_boundary.json"))), InputError);
    CHECK_THROWS_AS(io::read_json_file(data("missing.json")), InputError);

    auto q = ledger::named_dataset("quintic5");
    auto back = io::dataset_from_json(io::dataset_to_json(q));
    CHECK(back.table == q.table);
    CHECK(back.expected == q.expected);
    CHECK(back.columns.size() == q.columns.size());
    CHECK(back.big_d == q.big_d);
    auto file = io::dataset_from_json(io::read_json_file(data("quintic5.json")));
    CHECK(file.table == q.table);
    CHECK(ledger::assemble_columns(file.columns) == q.table);
}

TEST_CASE("dims")
{
    auto r = run({"dims", "--type", "4", "--field", "qq", "--seeds", "1"});
    CHECK(r.code == cli::kExitPass);
    auto j = r.report();
    CHECK(j["results"][0]["expected"] == 11);
    CHECK(j["results"][0]["computed"] == 11);
    CHECK(run({"dims", "--type", "42", "--seeds", "1"}).report()["results"][0]["computed"] == 0);
    auto all = run({"dims", "--type", "all", "--seeds", "2"});
    CHECK(all.code == cli::kExitPass);
    CHECK(all.report()["results"].size() == 84);
    CHECK(run({"dims", "--type", "0"}).code == cli::kExitBadInput);
    CHECK(run({"dims", "--field", "fp:12"}).code == cli::kExitBadInput);
    CHECK(run({"dims", "--unknown"}).code == cli::kExitBadInput);
    CHECK(run({}).code == cli::kExitBadInput);
}

TEST_CASE("reports are byte-identical for identical inputs")
{
    for (std::vector<std::string> args : {std::vector<std::string>{"dims", "--type", "all", "--seeds", "3", "--seed", "9"},
                                          {"ledger", "--dataset", "quintic5", "--emit", "tables"},
                                          {"homology", "--model", "prop-b-a1"}}) {
        auto a = run(args), b = run(args);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
    CHECK(run({"dims", "--seeds", "2", "--seed", "1"}).out != run({"dims", "--seeds", "2", "--seed", "2"}).out);
}

TEST_CASE("classify")
{
    auto fermat = run({"classify", "--poly", data("fermat_f11.json")});
    CHECK(fermat.code == cli::kExitPass);
    CHECK(fermat.report()["classification"] == "nonsingular");
    auto lines = run({"classify", "--poly", data("two_lines_f13.json")});
    CHECK(lines.code == cli::kExitPass);
    CHECK(lines.report()["classification"] == "type 31");
    CHECK(lines.report()["codimension"] == 18);
    auto node = run({"classify", "--poly", data("line_plus_node_f13.json")});
    CHECK(node.code == cli::kExitPass);
    CHECK(node.report()["classification"] == "type 17");
    CHECK(node.report()["singular_set"]["points"].size() == 1);
    CHECK(node.report()["singular_set"]["lines"].size() == 1);

    // p divides the degree
    const char* path = "classify_f5.json";
    std::ofstream(path) << R"({"field": "fp:5", "degree": 5, "terms": [{"exp": [5, 0, 0], "coeff": 1}]})";
    CHECK(run({"classify", "--poly", path}).code == cli::kExitBadInput);
    // a wrong expectation is a mismatch, not bad input
    std::ofstream(path) << R"({"field": "fp:11", "degree": 5, "terms": [{"exp": [5, 0, 0], "coeff": 1},
        {"exp": [0, 5, 0], "coeff": 1}, {"exp": [0, 0, 5], "coeff": 1}], "expected_classification": "type 1"})";
    auto wrong = run({"classify", "--poly", path});
    CHECK(wrong.code == cli::kExitMismatch);
    CHECK(wrong.report()["results"][0]["expected"] == "type 1");
    CHECK(wrong.report()["results"][0]["computed"] == "nonsingular");
}

TEST_CASE("ledger")
{
    auto r = run({"ledger", "--dataset", "quintic5", "--emit", "poincare"});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.report()["factored"] == "(1+t)(1+t^3)(1+t^5)");
    CHECK(r.report()["result"] == "1 + t + t^3 + t^4 + t^5 + t^6 + t^8 + t^9");
    auto t = run({"ledger", "--dataset", "quintic5", "--emit", "tables"}).report();
    CHECK(t["e1"].size() == 7);
    CHECK(t["total"] == "t^32 + t^33 + t^35 + t^36 + t^37 + t^38 + t^40");
    auto s = run({"ledger", "--dataset", "ss7", "--emit", "tables"});
    CHECK(s.code == cli::kExitPass);
    CHECK(s.report()["e_infinity"].empty());
    CHECK(s.err.find("column 39 contributes 0") != std::string::npos);
    CHECK(run({"ledger", "--dataset", data("ss7.json")}).code == cli::kExitPass);
    CHECK(run({"ledger", "--dataset", "quintic6"}).code == cli::kExitBadInput);
    CHECK(run({"ledger", "--emit", "latex"}).code == cli::kExitBadInput);

    const char* path = "wrong_ledger.json";
    std::ofstream(path) << R"({"entries": [[1, 39, 1]], "big_d": 21, "expected": "1 + t^2"})";
    auto wrong = run({"ledger", "--dataset", path});
    CHECK(wrong.code == cli::kExitMismatch);
    CHECK(wrong.report()["results"][0]["computed"] == "1 + t");
}

TEST_CASE("homology")
{
    auto a1 = run({"homology", "--model", "prop-b-a1"});
    CHECK(a1.code == cli::kExitPass);
    CHECK(a1.report()["borel_moore"] == "t^2 + t^3");
    auto a2 = run({"homology", "--model", "prop-b-a2"});
    CHECK(a2.report()["borel_moore"] == "0");
    auto c = run({"homology", "--model", "prop-c"});
    CHECK(c.code == cli::kExitPass);
    CHECK(c.report()["betti"] == Json::array({0, 1}));
    CHECK(c.report()["induced"][1]["matrix"] == Json::array({Json::array({"-1"})}));
    CHECK(run({"homology", "--model", data("twisted_torus.json")}).code == cli::kExitPass);
    CHECK(run({"homology", "--model", data("prop_b_a3.json")}).code == cli::kExitPass);
    CHECK(run({"homology", "--model", data("bad_boundary.json")}).code == cli::kExitBadInput);
    CHECK(run({"homology", "--model", "prop-d"}).code == cli::kExitBadInput);
}

TEST_CASE("--out writes the report to a file")
{
    auto r = run({"ledger", "--dataset", "ssx", "--out", "ssx_report.json"});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out.empty());
    std::ifstream in("ssx_report.json");
    auto j = Json::parse(in);
    CHECK(j["result"] == "t^5 + 2t^6 + t^7");
}
