#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("tableaux command") {
    auto r = run_cli("tableaux --group trivial --n 2");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["scalar_kind"] == "exact");
    REQUIRE(j["diagrams"].size() == 2);
    int tabs = 0;
    for (const auto& d : j["diagrams"]) tabs += int(d["tableaux"].size());
    CHECK(tabs == 2);

    auto r2 = run_cli("tableaux --group cyclic:2 --n 2");
    REQUIRE(r2.exit_code == 0);
    json j2 = json::parse(r2.out);
    REQUIRE(j2["diagrams"].size() == 5);
    int tabs2 = 0;
    for (const auto& d : j2["diagrams"]) tabs2 += int(d["tableaux"].size());
    CHECK(tabs2 == 6);

    // single diagram selection
    auto r3 = run_cli("tableaux --group cyclic:2 --n 2 --mu [[1],[1]]");
    REQUIRE(r3.exit_code == 0);
    json j3 = json::parse(r3.out);
    REQUIRE(j3["diagrams"].size() == 1);
    CHECK(j3["diagrams"][0]["tableaux"].size() == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("tableaux --group trivial --n 0").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("rep --group trivial --n 2").exit_code == 2);  // missing --mu
    CHECK(run_cli("rep --group trivial --n 2 --mu [[2]] --form sideways").exit_code == 2);
    CHECK(run_cli("tableaux --group cyclic:2 --n 2 --mu [[1]_oops]").exit_code == 2);
    CHECK(run_cli("tableaux --group nosuch:group --n 1").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("rep export") {
    auto r = run_cli("rep --group cyclic:2 --n 2 --mu [[1],[1]] --form seminormal");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["scalar_kind"] == "exact");
    CHECK(j["dim"] == 2);
    CHECK(j["form"] == "seminormal");
    REQUIRE(j["matrices"]["coxeter"].size() == 1);
    json s1 = j["matrices"]["coxeter"][0];
    CHECK(s1[0][0] == "0");
    CHECK(s1[0][1] == "1");
    CHECK(s1[1][0] == "1");
    CHECK(s1[1][1] == "0");
    // slot 1 action of the nontrivial element is diag(1, -1)
    json f = j["matrices"]["factor_action"][0][1];
    CHECK(f[0][0] == "1");
    CHECK(f[1][1] == "-1");
}

TEST_CASE("verify command") {
    for (const char* suite : {"relations", "commutant", "yjm", "characters", "johnson", "all"}) {
        auto r = run_cli(std::string("verify --group cyclic:2 --n 2 --suite ") + suite);
        INFO("suite " << suite << ": " << r.out);
        REQUIRE(r.exit_code == 0);
        CHECK(json::parse(r.out)["pass"] == true);
    }
    auto r = run_cli("verify --group trivial --n 3");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["pass"] == true);
    CHECK(run_cli("verify --group trivial --n 2 --suite nosuch").exit_code == 2);
}

TEST_CASE("branch command") {
    auto r = run_cli("branch --group trivial --mu [[2,1]]");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["multiplicity"] == 1);
}

TEST_CASE("sjb command") {
    auto r = run_cli("sjb --n 3");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["chains"].size() == 3);
    CHECK(j["chains"][0]["start_rank"] == 0);
    CHECK(j["chains"][1]["start_rank"] == 1);
    // last vector of the full chain is 6*{1,2,3}
    json last = j["chains"][0]["vectors"][3];
    REQUIRE(last.size() == 1);
    CHECK(last[0]["coef"] == "6");
    CHECK(last[0]["subset"] == json::array({1, 2, 3}));
}

TEST_CASE("johnson command") {
    auto r = run_cli("johnson --group cyclic:2 --n 2");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["pass"] == true);
    auto rt = run_cli("johnson --group trivial --n 3");
    REQUIRE(rt.exit_code == 0);
    json j = json::parse(rt.out);
    REQUIRE(j["layers"].size() == 4);
    CHECK(j["layers"][1].size() == 2);
    CHECK(j["layers"][1][1]["dim"] == "2");
    CHECK(run_cli("johnson --group sym:3 --n 2").exit_code == 2);
}

TEST_CASE("deterministic output") {
    auto a = run_cli("verify --group cyclic:2 --n 2 --suite reps");
    auto b = run_cli("verify --group cyclic:2 --n 2 --suite reps");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto c = run_cli("sjb --n 4");
    auto d = run_cli("sjb --n 4");
    CHECK(c.out == d.out);
}

TEST_CASE("output file") {
    std::string path = "cli_out_test.json";
    auto r = run_cli("sjb --n 2 --out " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    char buf[65536];
    size_t got = fread(buf, 1, sizeof buf, f);
    fclose(f);
    remove(path.c_str());
    json j = json::parse(std::string(buf, got));
    CHECK(j["chains"].size() == 2);
}
