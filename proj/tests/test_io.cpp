#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "gcoalg/io.hpp"

#include "support/fixtures.hpp"

using namespace gcoalg;
namespace fx = gcoalg::fixtures;

namespace {

const std::string kFixtures = GCOALG_FIXTURE_DIR;
const std::string kCli = GCOALG_CLI_PATH;

struct CliResult {
    int exit_code;
    json output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    json parsed = text.empty() ? json{} : json::parse(text, nullptr, false);
    return {code, parsed};
}

std::string temp_json(const json& j, const std::string& name) {
    std::string path = std::string("/tmp/gcoalg_test_") + name + ".json";
    save_json_file(path, j);
    return path;
}

}  // namespace

TEST_CASE("shipped fixtures equal their programmatic builders") {
    CHECK(group_coalgebra_from_json(load_json_file(kFixtures + "/kg2.json")) == fx::kg2());
    CHECK(group_coalgebra_from_json(load_json_file(kFixtures + "/ks3.json")) == fx::ks3());
    CHECK(group_coalgebra_from_json(load_json_file(kFixtures + "/c2gl_z2.json")) == fx::c2gl_z2());
    CHECK(group_coalgebra_from_json(load_json_file(kFixtures + "/trunc.json")) == fx::trunc());
    CHECK(group_coalgebra_from_json(load_json_file(kFixtures + "/crossed1.json")) == fx::crossed1());
    CHECK(group_coalgebra_from_json(load_json_file(kFixtures + "/neg.json")) == fx::neg());
    CHECK(group_coalgebra_from_json(load_json_file(kFixtures + "/smash_c2gl_z2.json")) ==
          build_smash(fx::c2gl_z2()));
    CHECK(group_from_json(load_json_file(kFixtures + "/s3.json")) == fx::s3());
    CHECK(coalgebra_from_json(load_json_file(kFixtures + "/c2gl.json")) == fx::c2gl());
}

TEST_CASE("json round trips") {
    for (const auto& [name, c] : fx::all()) {
        CAPTURE(name);
        CHECK(group_coalgebra_from_json(group_coalgebra_to_json(c)) == c);
    }
    Coalgebra mat2 = Coalgebra::comatrix(Field::rationals(), 2);
    CHECK(coalgebra_from_json(coalgebra_to_json(mat2)) == mat2);

    GroupCoalgebra base = fx::c2gl_z2();
    GComodule m = suspension(base, 1);
    CHECK(g_comodule_from_json(base, g_comodule_to_json(base, m)) == m);
    SmashComodule sm = to_smash_comodule(base, m);
    CHECK(smash_comodule_from_json(base, smash_comodule_to_json(base, sm)) == sm);
}

TEST_CASE("rational scalars round trip in lowest terms") {
    Coalgebra kq = Coalgebra::ground(Field::rationals());
    Matrix counit = kq.counit;
    json j = matrix_to_flat(counit.scaled(Scalar::parse(Field::rationals(), "-6/4")));
    CHECK(j[0] == "-3/2");
    Matrix back = matrix_from_flat(Field::rationals(), 1, 1, j);
    CHECK(back.at(0, 0) == Scalar::parse(Field::rationals(), "-3/2"));
}

TEST_CASE("malformed and invalid inputs are distinguished") {
    json bad_dims = load_json_file(kFixtures + "/kg2.json");
    bad_dims["dims"].erase("1");
    CHECK_THROWS_AS(group_coalgebra_from_json(bad_dims), ParseError);

    // valid shape, broken coassociativity: witness embedded in the report
    json broken = group_coalgebra_to_json([] {
        GroupCoalgebra c = fx::c2gl_z2();
        c.delta(1, 1).at(0, 0) = Scalar::zero(c.field);
        c.delta(1, 1).at(1, 0) = Scalar::one(c.field);
        return c;
    }());
    try {
        group_coalgebra_from_json(broken);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        REQUIRE_FALSE(e.report.ok());
        CHECK(e.report.issues[0].check == "coassociativity");
    }
}

TEST_CASE("workspace rejects mixed fields") {
    Workspace ws;
    GroupCoalgebra kg2 = ws.group_coalgebra(kFixtures + "/kg2.json");
    CHECK(kg2 == fx::kg2());
    CHECK_THROWS_AS(ws.group_coalgebra(kFixtures + "/ks3.json"), ValidationError);
}

TEST_CASE("cli: verify and strong with exit codes") {
    CliResult ok = run_cli("verify " + kFixtures + "/kg2.json");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.at("ok") == true);

    CliResult strong = run_cli("strong " + kFixtures + "/kg2.json");
    CHECK(strong.exit_code == 0);
    CHECK(strong.output.at("strong") == true);

    CliResult weak = run_cli("strong " + kFixtures + "/trunc.json");
    CHECK(weak.exit_code == 1);
    CHECK(weak.output.at("witnesses") == json::array({1}));

    CliResult usage = run_cli("strong /nonexistent.json");
    CHECK(usage.exit_code == 2);
}

TEST_CASE("cli: dual emits a loadable graded algebra summary") {
    CliResult dual = run_cli("dual " + kFixtures + "/trunc.json");
    CHECK(dual.exit_code == 0);
    CHECK(dual.output.at("algebra").at("strongly_graded") == false);

    CliResult dual2 = run_cli("dual " + kFixtures + "/c2gl_z2.json");
    CHECK(dual2.output.at("algebra").at("strongly_graded") == true);
}

TEST_CASE("cli: suspension output loads back as a comodule") {
    CliResult sus = run_cli("suspend " + kFixtures + "/c2gl_z2.json --element 1");
    REQUIRE(sus.exit_code == 0);
    GroupCoalgebra base = fx::c2gl_z2();
    GComodule m = g_comodule_from_json(base, sus.output.at("comodule"));
    CHECK(m == suspension(base, 1));
}

TEST_CASE("cli: smash build/to/from round trip") {
    CliResult built = run_cli("smash build " + kFixtures + "/c2gl_z2.json");
    REQUIRE(built.exit_code == 0);
    CHECK(group_coalgebra_from_json(built.output.at("coalgebra")) == build_smash(fx::c2gl_z2()));

    GroupCoalgebra base = fx::c2gl_z2();
    std::string comodule_path =
        temp_json(g_comodule_to_json(base, suspension(base, 1)), "suspension");
    CliResult to = run_cli("smash to --base " + kFixtures + "/c2gl_z2.json --comodule " +
                           comodule_path);
    REQUIRE(to.exit_code == 0);
    std::string smash_path = temp_json(to.output.at("comodule"), "smash_comodule");
    CliResult from = run_cli("smash from --base " + kFixtures + "/c2gl_z2.json --comodule " +
                             smash_path);
    REQUIRE(from.exit_code == 0);
    CHECK(g_comodule_from_json(base, from.output.at("comodule")) == suspension(base, 1));
}

TEST_CASE("cli: crossed build matches the shipped fixture") {
    CliResult r = run_cli("crossed build --coalgebra " + kFixtures + "/c2gl.json --action " +
                          kFixtures + "/crossed1_action.json --factorset " + kFixtures +
                          "/crossed1_factorset.json --group " + kFixtures + "/z2.json");
    REQUIRE(r.exit_code == 0);
    CHECK(group_coalgebra_from_json(r.output.at("coalgebra")) == fx::crossed1());
}

TEST_CASE("cli: crossed normalize produces the trivial factor set from a constant one") {
    CliResult r = run_cli("crossed normalize --coalgebra " + kFixtures + "/k_f3.json --action " +
                          kFixtures + "/neg_action.json --factorset " + kFixtures +
                          "/const2_factorset.json --group " + kFixtures + "/z2.json");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.at("factorset").at("f").at("1,1") == json::array({"1 mod 3"}));
    CHECK(r.output.at("iso").at("0") == json::array({"2 mod 3"}));
}

TEST_CASE("cli: cocleft decide and extract") {
    CliResult yes = run_cli("cocleft decide --input " + kFixtures + "/crossed1.json --seed 7");
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.at("cocleft") == true);
    REQUIRE(yes.output.contains("witness"));
    GroupCoalgebra c1 = fx::crossed1();
    CocleftData witness = cocleft_data_from_json(c1, yes.output.at("witness"));
    CHECK(verify_cocleft_data(c1, witness).ok());

    CliResult no = run_cli("cocleft decide --input " + kFixtures + "/trunc.json");
    CHECK(no.exit_code == 1);
    CHECK(no.output.at("cocleft") == false);

    CliResult ext = run_cli("cocleft extract --input " + kFixtures + "/neg.json --data " +
                            kFixtures + "/neg_cocleft.json");
    REQUIRE(ext.exit_code == 0);
    CHECK(ext.output.at("factorset").at("f").at("1,1") == json::array({"2 mod 3"}));
}

TEST_CASE("cli: cohomology classify matches the hand count") {
    CliResult r = run_cli("cohomology classify --field F3 --group Z2 --coalgebra k");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.at("z2_count") == 4);
    CHECK(r.output.at("b2_count") == 2);
    CHECK(r.output.at("h2_count") == 2);
    CHECK(r.output.at("z1_count") == 2);
    CHECK(r.output.at("b1_count") == 1);
}

TEST_CASE("cli: cohomology z2-check and cohomologous") {
    CliResult ok = run_cli("cohomology z2-check --coalgebra k --field F3 --group Z2 --cochain " +
                           kFixtures + "/neg_cochain.json");
    CHECK(ok.exit_code == 0);

    CliResult no = run_cli("cohomology cohomologous --coalgebra k --field F3 --group Z2 --left " +
                           kFixtures + "/neg_cochain.json --right " + kFixtures +
                           "/trivial_cochain.json");
    CHECK(no.exit_code == 1);
    CHECK(no.output.at("equal_class") == false);

    CliResult yes = run_cli("cohomology cohomologous --coalgebra k --field F3 --group Z2 --left " +
                            kFixtures + "/neg_cochain.json --right " + kFixtures +
                            "/neg_cochain.json");
    CHECK(yes.exit_code == 0);
}

TEST_CASE("cli: cohomology omega enumerates and separates the KG2 families") {
    CliResult all = run_cli("cohomology omega --input " + kFixtures + "/kg2.json --basepoint " +
                            kFixtures + "/kg2_u0.json");
    REQUIRE(all.exit_code == 0);
    CHECK(all.output.at("omega_count") == 2);
    CHECK(all.output.at("classes").size() == 2);

    CliResult pair = run_cli("cohomology omega --input " + kFixtures + "/kg2.json --basepoint " +
                             kFixtures + "/kg2_u0.json --other " + kFixtures + "/kg2_u1.json");
    CHECK(pair.exit_code == 1);
    CHECK(pair.output.at("equivalent") == false);
}

TEST_CASE("every shipped fixture reproduces its documented classification") {
    struct Row {
        const char* file;
        bool strong, cocleft, smash_type;
    };
    // the table in the README
    const Row table[] = {
        {"kg2.json", true, true, true},        {"ks3.json", true, true, true},
        {"c2gl_z2.json", true, true, true},    {"smash_c2gl_z2.json", true, true, true},
        {"crossed1.json", true, true, true},   {"neg.json", true, true, false},
        {"trunc.json", false, false, false},
    };
    for (const Row& row : table) {
        CAPTURE(row.file);
        GroupCoalgebra c = group_coalgebra_from_json(load_json_file(kFixtures + "/" + row.file));
        CHECK(is_strong(c).strong == row.strong);
        CHECK((is_cocleft(c).verdict == Verdict::yes) == row.cocleft);
        if (c.field.is_prime_field())  // morphism enumeration needs a prime field
            CHECK(!enumerate_kg_morphisms(c, 100000).empty() == row.smash_type);
    }
}

TEST_CASE("cli: broken axioms are reported with a witness and exit 1") {
    GroupCoalgebra c = fx::c2gl_z2();
    c.delta(1, 1).at(0, 0) = Scalar::zero(c.field);
    c.delta(1, 1).at(1, 0) = Scalar::one(c.field);
    std::string path = temp_json(group_coalgebra_to_json(c), "broken");
    CliResult r = run_cli("verify " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.at("ok") == false);
    CHECK(r.output.at("report").at("issues")[0].at("check") == "coassociativity");
}
