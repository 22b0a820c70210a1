#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CLI_BIN_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const char* kRect = "'{\"start\":[0,2],\"word\":\"RRDD\"}'";
const char* kCellPath = "'{\"start\":[0,1],\"word\":\"RD\"}'";
const char* kFsParams = "'{\"x\":[\"3/4\"],\"y\":[\"2/3\"]}'";
const char* kHsParams = "'{\"x\":[\"1/2\",\"1/3\"],\"c\":\"1/4\"}'";

} // namespace

TEST_CASE("cli rsk and rsk-inverse round trip") {
    RunResult fwd = run_cli("rsk --filling '{\"shape\":[2,2],\"values\":[1,0,2,1]}' "
                            "--path " +
                            std::string(kRect));
    REQUIRE(fwd.status == 0);
    CHECK(json::parse(fwd.out) == json::parse("[[],[3],[4],[1],[]]"));

    RunResult bwd = run_cli("rsk-inverse --sequence '[[],[3],[4],[1],[]]' --path " +
                            std::string(kRect));
    REQUIRE(bwd.status == 0);
    json f = json::parse(bwd.out);
    CHECK(f["shape"] == json::parse("[2,2]"));
    CHECK(f["values"] == json::parse("[1,0,2,1]"));
}

TEST_CASE("cli observe reports growth observables and passage times") {
    RunResult r = run_cli("observe --matrix '{\"cols\":2,\"rows\":2,\"data\":[1,3,2,4]}' "
                          "--path " +
                          std::string(kRect));
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["lambdas"] == json::parse("[[],[3],[8,2],[4],[]]"));
    CHECK(j["g_times"][2] == json::parse("[8,10,10]"));
}

TEST_CASE("cli measure covers both sides") {
    RunResult full = run_cli("measure --path " + std::string(kCellPath) + " --params " +
                             kFsParams + " --sequence '[[],[2],[]]'");
    REQUIRE(full.status == 0);
    CHECK(json::parse(full.out)["probability"] == "1/8");

    RunResult half = run_cli("measure --path '{\"start\":[1,1],\"word\":\"D\"}' "
                             "--params '{\"x\":[\"1/2\"],\"c\":\"1/4\"}' "
                             "--sequence '[[2],[]]'");
    REQUIRE(half.status == 0);
    CHECK(json::parse(half.out)["probability"] == "7/512");
}

TEST_CASE("cli enumerate lists the truncated support") {
    RunResult r = run_cli("enumerate --path " + std::string(kCellPath) + " --cap 3");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out) ==
          json::parse("[[[],[],[]],[[],[1],[]],[[],[2],[]],[[],[3],[]]]"));
}

TEST_CASE("cli verify exact reports a passing comparison") {
    RunResult r = run_cli("verify --path " + std::string(kCellPath) + " --params " +
                          kFsParams + " --mode exact --trunc 4");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["mode"] == "exact");
    CHECK(j["side"] == "full");
    CHECK(j["pass"] == true);
    CHECK(j["tv"] == "0");
    CHECK(j["assignments"] == 5);
    CHECK(j["greene_checked"] == true);
}

TEST_CASE("cli verify mc runs both sides deterministically") {
    std::string full_cmd = "verify --path " + std::string(kCellPath) + " --params " +
                           kFsParams + " --mode mc --samples 2000 --cap 8 --seed 5 "
                           "--workers 2";
    RunResult a = run_cli(full_cmd);
    REQUIRE(a.status == 0);
    json ja = json::parse(a.out);
    CHECK(ja["mode"] == "mc");
    CHECK(ja["pass"] == true);
    RunResult b = run_cli(full_cmd);
    CHECK(b.out == a.out);

    RunResult h = run_cli("verify --path '{\"start\":[2,2],\"word\":\"DD\"}' --params " +
                          std::string(kHsParams) +
                          " --mode mc --samples 2000 --cap 4 --seed 5 --workers 2");
    REQUIRE(h.status == 0);
    json jh = json::parse(h.out);
    CHECK(jh["side"] == "half");
    CHECK(jh["pass"] == true);
}

TEST_CASE("cli verify writes reports to a file") {
    const char* out_path = "/tmp/schurlpp_cli_report.json";
    std::remove(out_path);
    RunResult r = run_cli("verify --path " + std::string(kCellPath) + " --params " +
                          kFsParams + " --mode exact --trunc 3 --out " + out_path);
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(out_path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(json::parse(ss.str())["pass"] == true);
    std::remove(out_path);
}

TEST_CASE("cli greene-check cross-checks all optima") {
    RunResult r = run_cli("greene-check --matrix "
                          "'{\"cols\":3,\"rows\":3,\"data\":[4,0,1,0,3,0,2,0,5]}' "
                          "--k 2 --witness");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["g"] == j["h"]);
    CHECK(j["witness_weight"] == j["h"]);
    CHECK(j["straightened_weight"] == j["g"]);
    CHECK(j["witness"].size() == 2);
    CHECK(j["straightened"].size() == 2);

    RunResult plain = run_cli("greene-check --matrix "
                              "'{\"cols\":2,\"rows\":2,\"data\":[1,3,2,4]}' --k 1");
    REQUIRE(plain.status == 0);
    json p = json::parse(plain.out);
    CHECK(p["g"] == 8);
    CHECK(p["h"] == 8);
    CHECK_FALSE(p.contains("witness"));
}

TEST_CASE("cli layers reproduces the nested decomposition") {
    RunResult r = run_cli(
        "layers --chains "
        "'[[[1,3],[4,3],[5,1]],[[1,2],[3,2],[4,2],[4,1]],[[2,4],[2,2],[2,1]]]' "
        "--lambda '[5,4,4,3,2]'");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out) == json::parse("[[2],[3,3,1],[5,4,4,2]]"));
}

TEST_CASE("cli sampling is reproducible and symmetric") {
    std::string cmd = "sample-full --params '{\"x\":[\"1/2\",\"1/3\"],\"y\":[\"1/4\"]}' "
                      "--cols 2 --rows 1 --seed 12";
    RunResult a = run_cli(cmd);
    REQUIRE(a.status == 0);
    RunResult b = run_cli(cmd);
    CHECK(a.out == b.out);
    json m = json::parse(a.out);
    CHECK(m["cols"] == 2);
    CHECK(m["rows"] == 1);
    CHECK(m["data"].size() == 2);

    RunResult h = run_cli("sample-half --params " + std::string(kHsParams) +
                          " --size 2 --seed 3");
    REQUIRE(h.status == 0);
    json hm = json::parse(h.out);
    REQUIRE(hm["data"].size() == 4);
    CHECK(hm["data"][1] == hm["data"][2]);
}

TEST_CASE("cli fuzz passes and reports every property") {
    RunResult r = run_cli("fuzz --seed 3 --budget 45");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    REQUIRE(j.size() == 9);
    for (const auto& entry : j) CHECK(entry["pass"] == true);
}

TEST_CASE("cli rejects bad input with exit code 2") {
    RunResult mismatch = run_cli("rsk --filling '{\"shape\":[2,2],\"values\":[1]}' "
                                 "--path " +
                                 std::string(kRect));
    CHECK(mismatch.status == 2);

    RunResult malformed = run_cli("observe --matrix '{\"cols\":' --path " +
                                  std::string(kRect));
    CHECK(malformed.status == 2);

    RunResult missing = run_cli("rsk");
    CHECK(missing.status == 2);

    RunResult unknown = run_cli("no-such-command");
    CHECK(unknown.status == 2);

    RunResult badfile = run_cli("observe --matrix /no/such/file.json --path " +
                                std::string(kRect));
    CHECK(badfile.status == 2);
}
