#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(AEF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("cli_tmp_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("entropy emits the full vector") {
    const auto path = write_temp("corr.dist", "n 2\n0 0 0.5\n1 1 0.5\n");
    const RunResult r = run_cli("entropy " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n 2\n1 1\n2 1\n3 1\n");

    const auto single = write_temp("single.dist", "n 2\n0 0 1.0\n");
    const RunResult rs = run_cli("entropy " + single);
    CHECK(rs.exit_code == 0);
    CHECK(rs.out == "n 2\n1 0\n2 0\n3 0\n");
}

TEST_CASE("entropy rejects malformed files with exit 2") {
    const auto path = write_temp("bad.dist", "n 2\n0 0 zzz\n");
    CHECK(run_cli("entropy " + path).exit_code == 2);
    CHECK(run_cli("entropy /nonexistent/file").exit_code == 2);
}

TEST_CASE("pipeline identity: entropy | check exits 0") {
    const auto dist = write_temp("pipe.dist", "n 3\n0 0 0 0.25\n0 1 1 0.25\n1 0 1 0.25\n1 1 0 0.25\n");
    const RunResult ent = run_cli("entropy " + dist);
    REQUIRE(ent.exit_code == 0);
    const auto vec = write_temp("pipe.vec", ent.out);
    CHECK(run_cli("check " + vec).exit_code == 0);
}

TEST_CASE("check flags violations with exit 1") {
    const auto vec = write_temp("bad.vec", "n 2\n1 1\n2 1\n3 3\n");
    const RunResult r = run_cli("check " + vec);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("submodular") != std::string::npos);

    const auto incomplete = write_temp("short.vec", "n 2\n1 1\n2 1\n");
    CHECK(run_cli("check " + incomplete).exit_code == 2);
}

TEST_CASE("average of an entropy-vector file") {
    const auto vec = write_temp("avg.vec", "n 2\n1 1\n2 1\n3 1\n");
    const RunResult r = run_cli("average " + vec);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 1\n");
}

TEST_CASE("diff / invdiff / member mirror the transforms") {
    CHECK(run_cli("diff 1 2 2 2").out == "0 -1 0 0\n");
    CHECK(run_cli("invdiff 0 0 -2").out == "2 4 6\n");

    const RunResult member = run_cli("member 1 2 3");
    CHECK(member.exit_code == 0);
    CHECK(member.out.find("MEMBER") == 0);

    const RunResult non = run_cli("member 1 3 4");
    CHECK(non.exit_code == 1);
    CHECK(non.out.find("NOT-MEMBER") == 0);
    CHECK(non.out.find("lambda -1 ") != std::string::npos);
}

TEST_CASE("ray and verify-ray") {
    CHECK(run_cli("ray 4 2").out == "1 2 2 2\n");
    const RunResult r = run_cli("verify-ray 4 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("average 3 6 6 6") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("achieve") {
    const RunResult r = run_cli("achieve 3 1 1 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("average 4 6 6") != std::string::npos);
    CHECK(r.out.find("support 64") != std::string::npos);

    CHECK(run_cli("achieve 3 0 0 0").exit_code == 2);
    CHECK(run_cli("--guard 10 achieve 3 1 1 0").exit_code == 2);
}

TEST_CASE("verify-theorem") {
    const RunResult r = run_cli("--seed 7 verify-theorem 2 20");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("stage iii") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("tsv mode and determinism") {
    CHECK(run_cli("--tsv diff 1 2 2 2").out == "0\t-1\t0\t0\n");
    const RunResult a = run_cli("--seed 3 verify-theorem 2 10");
    const RunResult b = run_cli("--seed 3 verify-theorem 2 10");
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("diff").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}
