#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(WRIDEAL_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int rc = pclose(pipe);
    r.status = WEXITSTATUS(rc);
    return r;
}

}  // namespace

TEST_CASE("solve emits exact csv rows") {
    const auto r = run_cli("solve --D 21");
    CHECK(r.status == 0);
    CHECK(r.out == "21,1,2,5\n");
}

TEST_CASE("solve rejects non-squarefree D with status 1") {
    const auto r = run_cli("solve --D 12");
    CHECK(r.status == 1);
    CHECK(r.out.empty());
}

TEST_CASE("unknown flag is a usage error") {
    CHECK(run_cli("solve --D 21 --bogus").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
}

TEST_CASE("table1 rows") {
    const auto r = run_cli("table1");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "21,3,1,7,3,2,5,1\n"
          "77,7,3,11,5,2,9,1\n"
          "133,7,3,19,9,6,13,1\n"
          "209,11,5,19,9,4,15,1\n");
}

TEST_CASE("formats carry identical logical content") {
    const auto csv = run_cli("solve --D 105 --format csv");
    const auto tsv = run_cli("solve --D 105 --format tsv");
    const auto jsonl = run_cli("solve --D 105 --format jsonl");
    CHECK(csv.out == "105,1,4,11\n");
    CHECK(tsv.out == "105\t1\t4\t11\n");
    CHECK(jsonl.out == "{\"D\":105,\"r\":1,\"p\":4,\"q\":11}\n");
}

TEST_CASE("nearsquare and construct") {
    CHECK(run_cli("nearsquare --D 21").out == "21,3/1,1,3\n");
    CHECK(run_cli("nearsquare --D 5").out == "5,3/1,0,0\n");
    CHECK(run_cli("construct --D 21 --p 2 --q 5 --sign real").out == "21,2,5,real,7,3,1\n");
    CHECK(run_cli("construct --D 21 --p 2 --q 5 --sign imaginary").out ==
          "21,2,5,imaginary,14,7,1\n");
}

TEST_CASE("reduce and classnumber") {
    CHECK(run_cli("reduce --A 18 --B 18 --C 15").status == 0);
    const auto red = run_cli("reduce --A 18 --B 18 --C 15");
    CHECK(red.out.substr(0, 18) == "18,18,15,15,12,15,");

    CHECK(run_cli("classnumber --D 21").out == "21,-84,4,1\n");
    CHECK(run_cli("classnumber --D 5").out == "5,-20,2,0\n");
}

TEST_CASE("scan has a sentinel summary row") {
    const auto r = run_cli("scan --max 30");
    CHECK(r.status == 0);
    const auto last_line_start = r.out.rfind("summary");
    REQUIRE(last_line_start != std::string::npos);
    CHECK(r.out.find("rec,21,1,1,1,2,1,2,4,1\n") != std::string::npos);
}

TEST_CASE("identical argv gives byte-identical output") {
    const auto a = run_cli("scan --max 200 --format jsonl");
    const auto b = run_cli("scan --max 200 --format jsonl");
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}
