// End-to-end checks of the command-line tool: exit codes, output
// formats and the shipped scenario files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ARPIDS_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[512];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe))
        output.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string scenario(const std::string& name) {
    return std::string(ARPIDS_SCENARIO_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/arpids_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("simulate: worked example file passes its expectations") {
    auto r = run_cli("simulate " + scenario("worked_example.scn"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "GENUINE"));
    CHECK(contains(r.output, "SPOOFED"));
    CHECK(contains(r.output, "Expectations met: 2/2"));
}

TEST_CASE("simulate: lines format is machine readable") {
    auto r = run_cli("simulate " + scenario("worked_example.scn") +
                     " --format lines");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "VERDICT 60 GENUINE 10.0.0.2 02:00:00:00:00:0b PROBE"));
    CHECK(contains(r.output, "VERDICT 250 SPOOFED 10.0.0.3 02:00:00:00:00:0d PROBE"));
    CHECK(contains(r.output, "SNAPSHOT AUTHT 10.0.0.2 02:00:00:00:00:0b"));
    CHECK(contains(r.output, "COUNT PROBES_SENT 2"));
    CHECK(contains(r.output, "EXPECT_RESULT PASS"));
}

TEST_CASE("simulate: unmet expectation exits 1") {
    std::string path = write_temp(
        "unmet.scn",
        "HOST 10.0.0.1 02:00:00:00:00:0a up genuine\n"
        "EXPECT 100 DOS 10.0.0.9 02:00:00:00:00:0d\n");
    auto r = run_cli("simulate " + path);
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "UNMET"));
}

TEST_CASE("simulate: garbage input exits 2 with a line number") {
    std::string path = write_temp("garbage.scn", "HOST ok\nwhat is this\n");
    auto r = run_cli("simulate " + path);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "line 1"));
}

TEST_CASE("simulate: missing file exits 2") {
    auto r = run_cli("simulate /nonexistent/file.scn");
    CHECK(r.exit_code == 2);
}

TEST_CASE("simulate: detection classes from the shipped suite") {
    CHECK(run_cli("simulate " + scenario("spoof_reply.scn")).exit_code == 0);
    CHECK(run_cli("simulate " + scenario("dos_flood.scn")).exit_code == 0);
    CHECK(run_cli("simulate " + scenario("malformed.scn")).exit_code == 0);
}

TEST_CASE("example: golden tables match and print") {
    auto r = run_cli("example");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "Request-sent table"));
    CHECK(contains(r.output, "Golden tables: match"));

    auto lines = run_cli("example --format lines");
    CHECK(lines.exit_code == 0);
    CHECK(contains(lines.output, "SNAPSHOT RST 10.0.0.3 02:00:00:00:00:0c"));
    CHECK(contains(lines.output, "GOLDEN MATCH"));
}

TEST_CASE("example: zero probe window cannot reproduce the tables") {
    auto r = run_cli("example --t-req-ms 0");
    CHECK(r.exit_code != 0);
    CHECK(contains(r.output, "MISMATCH"));
}

TEST_CASE("matrix: all cases pass by default, in both scan modes") {
    auto window = run_cli("matrix");
    CHECK(window.exit_code == 0);
    CHECK(contains(window.output, "all cases pass"));
    CHECK(contains(window.output, "known miss"));

    auto whole = run_cli("matrix --mode whole-table");
    CHECK(whole.exit_code == 0);
}

TEST_CASE("matrix: a window below the reply latency breaks detection") {
    auto r = run_cli("matrix --t-req-ms 2");
    CHECK(r.exit_code != 0);
    CHECK(contains(r.output, "FAIL"));
}

TEST_CASE("replay: flood trace prints one DOS line") {
    auto r = run_cli("replay " + scenario("flood.trace"));
    CHECK(r.exit_code == 0);
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = r.output.find("DOS", pos)) != std::string::npos) {
        ++count;
        pos += 3;
    }
    CHECK(count == 1);
}

TEST_CASE("replay: malformed frame and empty trace") {
    std::string mal = write_temp(
        "mal.trace",
        "INJECT 5 IN REQ 02:00:00:00:00:0e ff:ff:ff:ff:ff:ff "
        "02:00:00:00:00:0b 10.0.0.2 00:00:00:00:00:00 10.0.0.1\n");
    auto r = run_cli("replay " + mal);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "MALFORMED"));

    std::string empty = write_temp("empty.trace", "");
    auto e = run_cli("replay " + empty);
    CHECK(e.exit_code == 0);
    CHECK(e.output.empty());

    std::string bad = write_temp("bad.trace", "EXPECT 1 DOS 1.2.3.4 aa\n");
    CHECK(run_cli("replay " + bad).exit_code == 2);
}

TEST_CASE("exit codes are reproducible") {
    for (int i = 0; i < 3; ++i) {
        CHECK(run_cli("simulate " + scenario("worked_example.scn") +
                      " --format lines")
                  .exit_code == 0);
    }
}

TEST_CASE("config validation failures are reported") {
    auto r = run_cli("simulate " + scenario("worked_example.scn") +
                     " --dos-th 0");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "bad config"));
}
