#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "roman/cli.hpp"

using namespace roman;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() / ("roman_cli_test_" + std::to_string(++counter) + ".txt");
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
    std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("solve command") {
    TempFile iso("1 1\n0 0\n");
    auto r = run({"solve", iso.str()});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out == "rdn 2\n");

    TempFile edge("1 1\n1 1\n");
    CHECK(run({"solve", edge.str()}).out == "rdn 2\n");

    TempFile p4("2 2\n1 2\n2 2\n");
    auto rp = run({"solve", p4.str(), "--emit-assignment", "--emit-table"});
    CHECK(rp.exit_code == kExitOk);
    CHECK(rp.out.substr(0, 6) == "rdn 3\n");
    CHECK(rp.out.find("X:") != std::string::npos);
    // table: 3 rows of 3 values
    CHECK(rp.out.find("2 3 4\n") != std::string::npos);

    // the assignment is reported in the original (pre-normalization) Y order
    TempFile twisted("2 2\n2 2\n1 2\n");
    auto rt = run({"solve", twisted.str(), "--emit-assignment"});
    CHECK(rt.out.substr(0, 6) == "rdn 3\n");

    CHECK(run({"solve", "/nonexistent/file.cbg"}).exit_code == kExitUsage);
    TempFile bad("2 1\n3 3\n");
    CHECK(run({"solve", bad.str()}).exit_code == kExitUsage);
}

TEST_CASE("oracle command") {
    TempFile edge("1 1\n1 1\n");
    auto r = run({"oracle", edge.str()});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out.substr(0, 6) == "rdn 2\n");

    TempFile star("3 1\n1 3\n");
    CHECK(run({"oracle", star.str()}).out.substr(0, 6) == "rdn 2\n");

    auto ra = run({"oracle", edge.str(), "--all-optima"});
    CHECK(ra.out.find("optima 3\n") != std::string::npos);

    // 23 vertices exceeds the subset cap
    std::ostringstream big;
    big << "11 12\n";
    for (int j = 0; j < 12; ++j) big << "1 1\n";
    TempFile too_big(big.str());
    CHECK(run({"oracle", too_big.str()}).exit_code == kExitTooLarge);
}

TEST_CASE("gen command") {
    auto a = run({"gen", "--m", "6", "--n", "5", "--seed", "11", "--p-isolated", "0.2", "--span-bias", "0.5"});
    auto b = run({"gen", "--m", "6", "--n", "5", "--seed", "11", "--p-isolated", "0.2", "--span-bias", "0.5"});
    CHECK(a.exit_code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out.substr(0, 4) == "6 5\n");

    auto iso = run({"gen", "--m", "3", "--n", "4", "--seed", "1", "--p-isolated", "1"});
    CHECK(iso.out == "3 4\n0 0\n0 0\n0 0\n0 0\n");

    CHECK(run({"gen", "--m", "0", "--n", "1"}).exit_code == kExitUsage);
    CHECK(run({"gen", "--m", "2", "--n", "1", "--span-bias", "0"}).exit_code == kExitUsage);
}

TEST_CASE("check command on graphs") {
    TempFile norm("2 2\n1 1\n1 2\n");
    auto r = run({"check", norm.str()});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out.find("normalized: yes") != std::string::npos);

    TempFile unnorm("3 2\n1 3\n1 1\n");
    auto ru = run({"check", unnorm.str()});
    CHECK(ru.exit_code == kExitOk);
    CHECK(ru.out.find("normalized: no") != std::string::npos);
    CHECK(ru.out.find("permutation: 2 1") != std::string::npos);
    CHECK(ru.out.find("1 1\n1 3\n") != std::string::npos);

    // edge list form: convex and non-convex
    TempFile elist("3 1 3\n1 1\n2 1\n3 1\n");
    CHECK(run({"check", elist.str()}).out.find("convex: yes") != std::string::npos);
    TempFile holed("3 1 2\n1 1\n3 1\n");
    auto rh = run({"check", holed.str()});
    CHECK(rh.exit_code == kExitVerification);
    CHECK(rh.err.find("hole at x2") != std::string::npos);
}

TEST_CASE("check command on labelings") {
    TempFile graph("1 1\n1 1\n");
    TempFile good("X: 2\nY: 0\n");
    auto r = run({"check", graph.str(), good.str()});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out.find("valid weight=2") != std::string::npos);

    TempFile iso_graph("1 2\n0 0\n1 1\n");
    TempFile bad("X: 2\nY: 0 0\n");
    auto rb = run({"check", iso_graph.str(), bad.str()});
    CHECK(rb.exit_code == kExitVerification);
    CHECK(rb.out.find("invalid: y1 labeled 0 with no 2-neighbor") != std::string::npos);
}

TEST_CASE("compare command") {
    auto r = run({"compare", "--max-m", "4", "--max-n", "4", "--trials", "60", "--seed", "7", "--dump-dir", ""});
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out.find("trials=60 mismatches=0") != std::string::npos);

    auto zero = run({"compare", "--trials", "0", "--dump-dir", ""});
    CHECK(zero.exit_code == kExitOk);
    CHECK(zero.out.find("trials=0 mismatches=0") != std::string::npos);

    auto too_big = run({"compare", "--max-m", "12", "--max-n", "12", "--trials", "1", "--dump-dir", ""});
    CHECK(too_big.exit_code == kExitTooLarge);
}

TEST_CASE("usage errors") {
    CHECK(run({}).exit_code == kExitUsage);
    CHECK(run({"frobnicate"}).exit_code == kExitUsage);
    CHECK(run({"solve"}).exit_code == kExitUsage);
    CHECK(run({"--help"}).exit_code == kExitOk);
}
