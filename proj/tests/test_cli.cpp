#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

// Process-level tests of the command-line tool. The binary path is injected
// by the build.

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_raw(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

RunResult run(const std::string& args) {
    return run_raw(std::string(WEYLCAT_CLI_PATH) + " " + args);
}

json run_json(const std::string& args) {
    RunResult res = run(args);
    REQUIRE(res.exit_code == 0);
    return json::parse(res.out);
}

}  // namespace

TEST_CASE("info emits root system data") {
    json a2 = run_json("info A2");
    CHECK(a2["coxeter_number"] == 3);
    CHECK(a2["num_roots"] == 6);
    CHECK(a2["weyl_order"] == 6);
    CHECK(a2["index_of_connection"] == 3);
    CHECK(a2["highest_root"] == json::array({1, 1}));

    CHECK(run_json("info A1")["coxeter_number"] == 2);
    json g2 = run_json("info G2");
    CHECK(g2["coxeter_number"] == 6);
    CHECK(g2["num_roots"] == 12);

    CHECK(run("info Q9").exit_code == 2);
    CHECK(run("info A0").exit_code == 2);
    CHECK(run("info").exit_code == 2);
}

TEST_CASE("enumerate counts stable elements") {
    CHECK(run_json("enumerate --type A2 -p 7")["count"] == 49);
    CHECK(run_json("enumerate --type A2 -m 1")["count"] == 16);
    CHECK(run_json("enumerate --type G2 -p 1")["count"] == 1);
    CHECK(run_json("enumerate --type B2 -p 3")["count"] == 9);
    CHECK(run("enumerate --type A2").exit_code == 2);            // neither -p nor -m
    CHECK(run("enumerate --type A2 -p 3 -m 1").exit_code == 2);  // both
    CHECK(run("enumerate --type A2 -p 3").exit_code == 1);       // p not coprime to h

    // the environment variable caps the enumeration
    CHECK(run_raw(std::string("env WEYL_CATALAN_MAX_ENUM=10 ") + WEYLCAT_CLI_PATH +
                  " enumerate --type A2 -p 7")
              .exit_code == 1);
    CHECK(run_raw(std::string("env WEYL_CATALAN_MAX_ENUM=1000 ") + WEYLCAT_CLI_PATH +
                  " enumerate --type A2 -p 7")
              .exit_code == 0);
}

TEST_CASE("map subcommands") {
    json gmv = run_json("map gmv --window \"[-3,10,4,-1]\" -p 9");
    CHECK(gmv["pf"] == "(4,0,1,0)");
    CHECK(gmv["labels"] == json::array({2, 4, 3, 1}));

    json torus = run_json("map anderson --type A3 --window \"[-3,10,4,-1]\" -p 9");
    CHECK(torus["coords"] == json::array({5, 6, 8}));

    // identity at p=1 goes to the zero torus class
    json zero = run_json("map anderson --type A2 --window \"[1,2,3]\" -p 1");
    CHECK(zero["coords"] == json::array({0, 0}));
    CHECK(zero["p"] == 1);

    // chi on the image of the example gives the same parking function
    CHECK(run_json("map chi --type A3 --torus '{\"p\":9,\"coords\":[5,6,8]}'")["pf"] ==
          "(4,0,1,0)");

    // zeta and theta round-trip through their serialized forms
    json park = run_json("map zeta --type A2 -m 1 --torus '{\"p\":4,\"coords\":[1,2]}'");
    std::string park_arg = park.dump();
    json elem = run_json("map theta --type A2 --park '" + park_arg + "'");
    json image = run_json("map anderson --type A2 -p 4 --element '" + elem.dump() + "'");
    CHECK(image["coords"] == json::array({1, 2}));

    // rejected inputs
    CHECK(run("map gmv --window \"[-3,10,4,-1]\"").exit_code == 2);  // missing -p
    CHECK(run("map gmv --window \"[-3,10,4,-1]\" -p 5").exit_code == 1);  // not 5-stable
    CHECK(run("map zeta-hl --pf \"(6,0,1,0,3)\"").exit_code == 1);        // needs p = n+1
    CHECK(run("map zeta-hl --pf \"(6,0,1,0,3)\" -p 8").exit_code == 1);
    CHECK(run("map zeta-hl --pf \"(not,a,pf)\"").exit_code == 2);
    CHECK(run("map nosuch --type A2").exit_code == 2);

    json hl = run_json("map zeta-hl --pf \"(1,0,0,2,1)\"");
    CHECK(hl.contains("valleys"));
}

TEST_CASE("verify subcommand") {
    RunResult counts = run("verify counts --type B2 -m 2");
    CHECK(counts.exit_code == 0);
    json rep = json::parse(counts.out);
    CHECK(rep[0]["params"]["count"] == 81);
    CHECK(rep[0]["pass"] == true);

    RunResult gmv = run("verify gmv -n 3 -p 4");
    CHECK(gmv.exit_code == 0);
    CHECK(json::parse(gmv.out)[0]["total"] == 16);

    RunResult zeta = run("verify zeta -n 3");
    CHECK(zeta.exit_code == 0);
    CHECK(json::parse(zeta.out)[0]["total"] == 16);

    CHECK(run("verify nosuch").exit_code == 2);
    CHECK(run("verify gmv -n 3").exit_code == 2);
}

TEST_CASE("render produces deterministic SVG") {
    RunResult direct = run("render --type A2 -p 7 -o -");
    CHECK(direct.exit_code == 0);
    RunResult again = run("render --type A2 -p 7 -o -");
    CHECK(direct.out == again.out);

    // 49 shaded alcoves in the Sommers region picture
    std::size_t polys = 0, pos = 0;
    while ((pos = direct.out.find("<polygon", pos)) != std::string::npos) {
        ++polys;
        pos += 8;
    }
    CHECK(polys == 49);

    RunResult shi = run("render --type A2 -m 1 -o -");
    CHECK(shi.exit_code == 0);
    std::size_t lines = 0;
    pos = 0;
    while ((pos = shi.out.find("<line", pos)) != std::string::npos) {
        ++lines;
        pos += 5;
    }
    CHECK(lines == 6);  // three positive roots, two levels each

    CHECK(run("render --type A1 -m 1").exit_code == 2);
    CHECK(run("render --type A3 -m 1").exit_code == 2);
    CHECK(run("render --type A2").exit_code == 2);
}

TEST_CASE("outputs are byte-deterministic") {
    for (const char* cmd : {"info F4", "enumerate --type A3 -p 5",
                            "map gmv --window \"[0,7,-2,6,4]\" -p 8"}) {
        RunResult a = run(cmd);
        RunResult b = run(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}
