#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "diffnev/composition.hpp"
#include "diffnev/parser.hpp"

using namespace diffnev;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary() {
    const char* env = std::getenv("DIFFNEV_BIN");
    REQUIRE_MESSAGE(env != nullptr, "DIFFNEV_BIN must point at the diffnev binary");
    return env;
}

RunResult run(const std::string& args) {
    RunResult res;
    std::string cmd = binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("compose --k 0 yields the identity") {
    RunResult r = run("compose --map \"w^2+z\" --k 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"value\": \"w\"") != std::string::npos);
}

TEST_CASE("spread csv carries the exact ratio column") {
    RunResult r = run("spread --map \"(w^2+z)/w\" --kmax 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "k,ek,e0,degree,ratio_exact\n1,1,1,2,1/2\n2,1,1,4,1/4\n");
}

TEST_CASE("classify emits the inverse-power normal form as JSON") {
    RunResult r = run("classify --map \"z/(w-1)^2 + 1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"tag\": \"InversePower\"") != std::string::npos);
    CHECK(r.out.find("\"a\": \"z\"") != std::string::npos);
    CHECK(r.out.find("\"b\": \"1\"") != std::string::npos);
    CHECK(r.out.find("\"d\": 2") != std::string::npos);
}

TEST_CASE("symbolic output round-trips through the grammar") {
    RunResult r = run("compose --map \"(w^2+z)/w\" --k 2 --format csv");
    CHECK(r.exit_code == 0);
    std::string body = r.out.substr(r.out.find('\n') + 1);
    std::string value = body.substr(body.find(',') + 1);
    value = value.substr(0, value.find('\n'));
    CHECK(parse_wrat(value) == compose_chain(parse_wrat("(w^2+z)/w"), 2).value);
}

TEST_CASE("exit codes: 0 success, 1 verdict fail, 2 input error") {
    CHECK(run("bezout --p \"w^2\" --q \"w-1\"").exit_code == 0);
    CHECK(run("bezout --p \"(w-z)*w\" --q \"w-z\"").exit_code == 1);
    CHECK(run("compose --map \"w^^2\"").exit_code == 2);
    CHECK(run("compose").exit_code != 0);
    CHECK(run("localcheck --p \"w^2\" --q \"w-1\" --f \"1/z\" --beta 0").exit_code == 0);
}

TEST_CASE("determinism: identical manifests give byte-identical output") {
    const char* cmds[] = {
        "spread --map \"(w^2+z)/w\" --kmax 3 --format csv --seed 5",
        "nevanlinna --solution exp --r-grid 1:5:2 --tolerance 1e-5 --format csv",
        "defect --solution cos2 --c 2 --target 0 --tolerance 1e-4 --format json",
    };
    for (const char* cmd : cmds) {
        RunResult a = run(cmd);
        RunResult b = run(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("manifest echoes command, inputs, seed, version") {
    RunResult r = run("classify --map \"w^2+z\" --seed 9");
    CHECK(r.out.find("\"command\": \"classify\"") != std::string::npos);
    CHECK(r.out.find("\"map\": \"w^2+z\"") != std::string::npos);
    CHECK(r.out.find("\"seed\": 9") != std::string::npos);
    CHECK(r.out.find("\"version\"") != std::string::npos);
}
