#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <string>

#ifndef GENRED_BIN
#define GENRED_BIN "genred"
#endif

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(GENRED_BIN) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("exit codes") {
    SUBCASE("success") {
        CHECK(run_cli("order --type A1 --sc --q 2^1") == 0);
        CHECK(run_cli("cartan classify --type G2") == 0);
        CHECK(run_cli("order --table-check --type 3D4") == 0);
    }
    SUBCASE("validation failure is 1") {
        CHECK(run_cli("order --type A1 --sc --q 6") == 1);  // 6 not a prime power
        std::ofstream("/tmp/genred_bad_isog.json")
            << R"({"p": 2, "P": [[6]], "Pcirc": [[6]], "source": {"type": "A1", "form": "ad"}, "target": {"type": "A1", "form": "ad"}})";
        CHECK(run_cli("isogeny check /tmp/genred_bad_isog.json") == 1);
    }
    SUBCASE("parse failure is 2") {
        CHECK(run_cli("order /tmp/genred_definitely_missing.json") == 2);
        std::ofstream("/tmp/genred_broken.json") << "{ not json";
        CHECK(run_cli("isogeny check /tmp/genred_broken.json") == 2);
        CHECK(run_cli("order --type A1 --sc --q 2^1/3") == 2);
    }
    SUBCASE("cap exceeded is 3") {
        CHECK(run_cli("order --type 2E6 --cap 100") == 3);
    }
}

TEST_CASE("json round trips through the CLI") {
    CHECK(run_cli("isogeny catalog --type F4 --m 2 -o /tmp/genred_f4m2.json") == 0);
    CHECK(run_cli("isogeny check /tmp/genred_f4m2.json") == 0);
    CHECK(run_cli("datum build --catalog SO --param 8 -o /tmp/genred_so8.json") == 0);
    CHECK(run_cli("datum dual /tmp/genred_so8.json -o /tmp/genred_so8d.json") == 0);
    CHECK(run_cli("datum iso /tmp/genred_so8.json /tmp/genred_so8d.json") == 0);
    CHECK(run_cli("cartan classify /tmp/genred_so8.json") == 0);
    CHECK(run_cli("datum product /tmp/genred_so8.json /tmp/genred_so8.json -o /tmp/genred_so8x2.json") == 0);
    CHECK(run_cli("datum center /tmp/genred_so8x2.json --p 2") == 0);
}

TEST_CASE("complete-datum pipeline through the CLI") {
    // build a complete file by hand from a datum file
    std::ofstream("/tmp/genred_c2_complete.json") << R"({
        "datum": { "type": "C2", "form": "sc" },
        "phi0_num": [[1, 0], [0, 1]], "phi0_rad": 0, "phi0_den": 1
    })";
    CHECK(run_cli("order /tmp/genred_c2_complete.json --both --factored") == 0);
    CHECK(run_cli("ennola /tmp/genred_c2_complete.json -o /tmp/genred_c2_ennola.json") == 0);
    CHECK(run_cli("order /tmp/genred_c2_ennola.json") == 0);
    CHECK(run_cli("dualc /tmp/genred_c2_complete.json -o /tmp/genred_c2_dual.json") == 0);
    CHECK(run_cli("order /tmp/genred_c2_dual.json --q 3^1") == 0);
    CHECK(run_cli("toric /tmp/genred_c2_complete.json --w 121") == 0);
    CHECK(run_cli("toric /tmp/genred_c2_complete.json --w 7") == 2);  // bad generator index
}
