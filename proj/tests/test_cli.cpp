#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "giftcount/formats.hpp"
#include "giftcount/sequences.hpp"

using namespace giftcount;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI under the shell; stderr is dropped so stdout stays byte-exact.
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("GIFTCOUNT_CLI_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("g command formats") {
    auto plain = run_cli("g --sigma 1 --nmax 4 --format plain");
    CHECK(plain.exit_code == 0);
    CHECK(plain.out == "1\n2\n7\n37\n266\n");

    auto bfile = run_cli("g --sigma 2 --nmax 2 --format bfile");
    CHECK(bfile.exit_code == 0);
    CHECK(bfile.out == "0 1\n1 3\n2 31\n");

    auto csv = run_cli("g --sigma 1 --nmax 2 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "n,value\n0,1\n1,2\n2,7\n");

    auto zeros = run_cli("g --sigma 0 --nmax 5");
    CHECK(zeros.exit_code == 0);
    CHECK(zeros.out == "1\n1\n1\n1\n1\n1\n");

    auto offset = run_cli("g --sigma 1 --nmax 2 --format bfile --offset 1");
    CHECK(offset.out == "1 1\n2 2\n3 7\n");
}

TEST_CASE("b-file output round-trips") {
    auto bfile = run_cli("g --sigma 2 --nmax 10 --format bfile");
    REQUIRE(bfile.exit_code == 0);
    std::istringstream is(bfile.out);
    BFile parsed = parse_bfile(is);
    CHECK(parsed.offset == 0);
    CHECK(parsed.values == g_by_sum(2, 10).values);
    CHECK(bfile.out.back() == '\n');
    CHECK(bfile.out.find("\n\n") == std::string::npos);
}

TEST_CASE("g methods agree through the CLI") {
    for (std::string method : {"sum", "moments", "typec", "typed"}) {
        auto r = run_cli("g --sigma 2 --nmax 12 --method " + method);
        INFO(method);
        CHECK(r.exit_code == 0);
        CHECK(r.out == run_cli("g --sigma 2 --nmax 12").out);
    }
    auto multi = run_cli("g --sigma 2 --nmax 6 --method multinomial");
    CHECK(multi.exit_code == 0);
    CHECK(multi.out == run_cli("g --sigma 2 --nmax 6").out);
}

TEST_CASE("e command") {
    auto row = run_cli("e --sigma 1 --n 2");
    CHECK(row.exit_code == 0);
    CHECK(row.out == "1 3 3\n");

    auto one = run_cli("e --sigma 2 --n 3 --k 9");
    CHECK(one.exit_code == 0);
    CHECK(one.out == "280\n");

    auto zero = run_cli("e --sigma 2 --n 3 --k 2");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == "0\n");

    auto bfile = run_cli("e --sigma 2 --n 3 --format bfile");
    CHECK(bfile.out == "3 1\n4 6\n5 25\n6 75\n7 175\n8 280\n9 280\n");
}

TEST_CASE("oracle command") {
    auto h = run_cli("oracle --sigma 1 --gifts 3");
    CHECK(h.exit_code == 0);
    CHECK(h.out == "42\n");

    auto zero = run_cli("oracle --sigma 0 --gifts 4");
    CHECK(zero.out == "24\n");

    auto two = run_cli("oracle --sigma 2 --gifts 2");
    CHECK(two.out == "6\n");

    auto list = run_cli("oracle --sigma 1 --gifts 3 --list");
    CHECK(list.out == "42\n123\n1213\n12123\n1223\n12213\n1123\n11223\n");

    auto guarded = run_cli("oracle --sigma 1 --gifts 9");
    CHECK(guarded.exit_code == 2);
}

TEST_CASE("verify command exit codes") {
    auto v1 = run_cli("verify --sigma 1 --nmax 12");
    CHECK(v1.exit_code == 0);
    CHECK(v1.out.find("FAIL") == std::string::npos);
    CHECK(v1.out.find("PASS") != std::string::npos);

    auto v0 = run_cli("verify --sigma 0 --nmax 5");
    CHECK(v0.exit_code == 0);

    auto v2 = run_cli("verify --sigma 2 --nmax 5 --deep");
    CHECK(v2.exit_code == 0);
    CHECK(v2.out.find("18252") != std::string::npos);
    CHECK(v2.out.find("842") != std::string::npos);
    CHECK(v2.out.find("oracle-gamma-vs-sum") != std::string::npos);
}

TEST_CASE("verify output is sorted by check name") {
    auto v = run_cli("verify --sigma 1 --nmax 8");
    std::istringstream is(v.out);
    std::string line, prev;
    bool sorted = true;
    while (std::getline(is, line)) {
        if (line.rfind("PASS ", 0) != 0 && line.rfind("FAIL ", 0) != 0) continue;
        std::string name = line.substr(5);
        if (!prev.empty() && name < prev) sorted = false;
        prev = name;
    }
    CHECK(sorted);
}

TEST_CASE("guess command") {
    auto g1 = run_cli("guess --sigma 1 --terms 15 --max-order 2 --max-degree 1");
    CHECK(g1.exit_code == 0);
    CHECK(g1.out.find("NONE") == std::string::npos);
    {
        std::istringstream is(g1.out);
        std::string line;
        int lines = 0;
        while (std::getline(is, line)) ++lines;
        CHECK(lines == 3);  // lhs plus one polynomial per lag
    }

    auto none = run_cli("guess --sigma 1 --terms 15 --max-order 1 --max-degree 0");
    CHECK(none.exit_code == 0);
    CHECK(none.out == "NONE\n");

    auto demo = run_cli("guess --sigma 1 --terms 10 --demo-constant");
    CHECK(demo.exit_code == 0);
    CHECK(demo.out == "a(n) - a(n-1) = 0\n");

    auto short_run = run_cli("guess --sigma 1 --terms 3 --max-order 3 --max-degree 3");
    CHECK(short_run.exit_code == 2);
}

TEST_CASE("bench command") {
    auto ok = run_cli("bench --sigma 2 --nmax 60 --methods sum,typec,typed");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.empty());  // timings go to stderr only

    auto unsupported = run_cli("bench --sigma 0 --nmax 10 --methods typec");
    CHECK(unsupported.exit_code == 2);

    auto unknown = run_cli("bench --sigma 1 --nmax 10 --methods nosuch");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("g --sigma 1").exit_code == 2);             // missing --nmax
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("g --sigma 1 --nmax 3 --format weird").exit_code == 2);
    CHECK(run_cli("g --sigma 1 --nmax 20 --method multinomial").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
