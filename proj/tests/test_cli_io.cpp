#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qflie/verify.hpp"

using namespace qflie;

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(QFLIE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("algebra JSON round trip") {
    LieAlgebra alg = make_algebra(family_id(Family::G1N1, 5));
    Json j = algebra_to_json(alg);
    CHECK(j["brackets"].size() == 3);
    CHECK(j["dim"] == 5);
    LieAlgebra back = algebra_from_json(j);
    CHECK(back == alg);
    CHECK_FALSE(back.jacobi_warning());

    LieAlgebra g311 = make_algebra(family_id(Family::G3_11));
    CHECK(algebra_from_json(algebra_to_json(g311)) == g311);
}

TEST_CASE("algebra JSON schema violations carry a path") {
    Json good = algebra_to_json(make_algebra(family_id(Family::G1N1, 5)));

    Json bad = good;
    bad["brackets"][0]["i"] = 3;
    bad["brackets"][0]["j"] = 3;  // i == j rejected
    CHECK_THROWS_WITH_AS(algebra_from_json(bad), "brackets[0]: must satisfy i < j", SchemaError);

    bad = good;
    bad["brackets"][1]["j"] = 9;  // out of range
    CHECK_THROWS_AS(algebra_from_json(bad), SchemaError);

    bad = good;
    bad["brackets"][2]["value"][0]["c"] = "1/0";
    try {
        algebra_from_json(bad);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("brackets[2].value[0].c") != std::string::npos);
    }

    bad = good;
    bad.erase("dim");
    CHECK_THROWS_AS(algebra_from_json(bad), SchemaError);

    bad = good;
    bad["brackets"].push_back(bad["brackets"][0]);  // duplicate pair
    CHECK_THROWS_AS(algebra_from_json(bad), SchemaError);
}

TEST_CASE("imported non-Jacobi table is accepted but flagged") {
    Json j;
    j["name"] = "notlie";
    j["dim"] = 3;
    j["brackets"] = Json::array({
        Json{{"i", 1}, {"j", 2}, {"value", Json::array({Json{{"k", 2}, {"c", "1"}}})}},
        Json{{"i", 1}, {"j", 3}, {"value", Json::array({Json{{"k", 3}, {"c", "1"}}})}},
        Json{{"i", 2}, {"j", 3}, {"value", Json::array({Json{{"k", 1}, {"c", "1"}}})}},
    });
    LieAlgebra alg = algebra_from_json(j);
    CHECK(alg.jacobi_warning());
    CHECK(algebra_to_json(alg)["jacobi_warning"] == true);
}

TEST_CASE("product JSON round trip") {
    TPVariant v = make_variant(family_id(Family::G1N1, 7), "TP2");
    ParameterAssignment a = sample_parameters(v, 3, 5);
    CommutativeProduct p = instantiate(v, a);
    CommutativeProduct back = product_from_json(product_to_json(p));
    CHECK(back == p);

    Json bad = product_to_json(p);
    bad["products"][0]["i"] = 5;
    bad["products"][0]["j"] = 1;  // i > j rejected
    CHECK_THROWS_AS(product_from_json(bad), SchemaError);
}

TEST_CASE("derivation space JSON shape") {
    DerivationSpace s =
        solve_derivation_space({make_algebra(family_id(Family::G1N1, 5)), Rat(1, 2)});
    Json j = derivation_space_to_json(s);
    CHECK(j["dim"] == 10);
    CHECK(j["basis"].size() == 10);
    CHECK(j["basis"][0].size() == 5);
    CHECK(j["basis"][0][0].size() == 5);
    CHECK(j["basis"][0][0][0].is_string());
}

TEST_CASE("import_json dispatches on document shape") {
    LieAlgebra alg = make_algebra(family_id(Family::G2N1, 5));
    auto a = import_json(export_json(algebra_to_json(alg)));
    CHECK(std::holds_alternative<LieAlgebra>(a));
    CHECK(std::get<LieAlgebra>(a) == alg);

    TPVariant v = make_variant(family_id(Family::G2N1, 5), "TP2");
    CommutativeProduct p = instantiate(v, sample_parameters(v, 1, 5));
    auto q = import_json(export_json(product_to_json(p)));
    CHECK(std::holds_alternative<CommutativeProduct>(q));
    CHECK(std::get<CommutativeProduct>(q) == p);

    CHECK_THROWS_AS(import_json("{\"foo\": 1}"), SchemaError);
    CHECK_THROWS_AS(import_json("not json"), SchemaError);
}

TEST_CASE("verify-all report is deterministic modulo timing") {
    SweepOptions opt;
    opt.n_grid = {5};
    opt.samples = 3;
    opt.seed = 9;
    VerifyAllResult r1 = cmd_verify_all(opt);
    VerifyAllResult r2 = cmd_verify_all(opt);
    r1.report.erase("timing_ms");
    r2.report.erase("timing_ms");
    CHECK(r1.report.dump() == r2.report.dump());
    CHECK(r1.failures == r2.failures);
}

TEST_CASE("verify-all with an empty grid covers only the fixed families") {
    SweepOptions opt;
    opt.n_grid = {};
    opt.samples = 2;
    VerifyAllResult r = cmd_verify_all(opt);
    const Json& lie = r.report["sections"]["lie_axioms"];
    REQUIRE(lie.size() == 3);
    CHECK(lie[0]["family"] == "g1_7");
    CHECK(lie[1]["family"] == "g2_9");
    CHECK(lie[2]["family"] == "g3_11");
    CHECK(r.failures == 0);  // the fixed-family tables verify cleanly
}

TEST_CASE("CLI exit codes: 0 pass, 2 verification failure, 3 usage error") {
    CHECK(run_cli("algebra check --family g2n1 --n 9") == 0);
    CHECK(run_cli("derivations verify --family g1_7") == 0);
    CHECK(run_cli("tpa verify --family g1n1 --n 7 --variant TP2 --samples 5") == 0);
    CHECK(run_cli("tpa verify --family g2n1 --n 5 --variant TP1 --samples 5") == 2);
    CHECK(run_cli("algebra show --family g1n1 --n 6") == 3);
    CHECK(run_cli("algebra show --family unknown --n 5") == 3);
    CHECK(run_cli("algebra show") == 3);
    CHECK(run_cli("derivations solve --family g1n1 --n 5 --delta nonsense") == 3);
}

TEST_CASE("CLI JSON output round-trips through the loader") {
    std::string path = "cli_algebra_out.json";
    CHECK(run_cli("algebra show --family g2_9 --json --out " + path) == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    auto loaded = import_json(ss.str());
    REQUIRE(std::holds_alternative<LieAlgebra>(loaded));
    CHECK(std::get<LieAlgebra>(loaded) == make_algebra(family_id(Family::G2_9)));
    std::remove(path.c_str());
}
