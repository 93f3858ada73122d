// End-to-end tests driving the installed binary through popen.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using json = nlohmann::ordered_json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(FLOORSUMS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json parse_out(const CliResult& r) {
    json doc = json::parse(r.out, nullptr, false);
    REQUIRE(!doc.is_discarded());
    return doc;
}

struct FileGuard {
    std::string path;
    explicit FileGuard(std::string p) : path(std::move(p)) {
        std::remove(path.c_str());
    }
    ~FileGuard() { std::remove(path.c_str()); }
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("claim subcommand reports a catalogued gap") {
    CliResult r = run_cli("claim rmk1.3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("20142") != std::string::npos);
    json doc = parse_out(r);
    CHECK(doc["claim"] == "rmk1.3");
    CHECK(doc["verdict"] == "Confirmed");
    CHECK(doc["findings"] == json::array({20142}));
}

TEST_CASE("claim subcommand honors --max") {
    CliResult r = run_cli("claim thm1.1.iv.m5 --max 10000 --jobs 4");
    CHECK(r.exit_code == 0);
    json doc = parse_out(r);
    CHECK(doc["finding_total"] == 0);
    CHECK(doc["range"]["hi"] == 10000);
}

TEST_CASE("unknown claim ids exit with a usage error") {
    CHECK(run_cli("claim no.such.id").exit_code == 2);
}

TEST_CASE("scan finds the first uncovered number of a sparse family") {
    CliResult r = run_cli("scan \"x^2 + 3y^2 + floor(z^2/10)\" --max 25000");
    CHECK(r.exit_code == 1);
    json doc = parse_out(r);
    CHECK(doc["first_gap"] == 20142);
    CHECK(doc["gaps"][0] == 20142);
    CHECK(doc["gap_total"] == 1);
}

TEST_CASE("scan of a covering family exits zero") {
    CliResult r =
        run_cli("scan \"floor(x^2/5)+floor(y^2/5)+floor(z^2/5)\" --max 10000");
    CHECK(r.exit_code == 0);
    json doc = parse_out(r);
    CHECK(doc["gap_total"] == 0);
    CHECK(doc["first_gap"].is_null());
}

TEST_CASE("ceil variant leaves gaps") {
    CliResult r =
        run_cli("scan \"ceil(x^2/1)+ceil(y^2/1)+ceil(z^2/5)\" --max 10000");
    CHECK(r.exit_code == 1);
    json doc = parse_out(r);
    CHECK(doc["gap_total"].get<int>() > 0);
}

TEST_CASE("malformed family text exits with a usage error") {
    CHECK(run_cli("scan \"x^2 + x^2 + z^2\" --max 100").exit_code == 2);
    CHECK(run_cli("scan \"x^5 + y^2\" --max 100").exit_code == 2);
}

TEST_CASE("exceptional divisors match the catalogued tables") {
    CliResult r = run_cli(
        "exceptional \"x^2 + 2y^2 + floor(z^2/c)\" --c-range 1:10 --max 10000 "
        "--jobs 4");
    CHECK(r.exit_code == 0);
    json doc = parse_out(r);
    CHECK(doc["exceptional_c"] == json::array({1}));
    CHECK(doc["catalog"]["match"] == true);

    CliResult s = run_cli(
        "exceptional \"2x^2 + 3y^2 + floor(z^2/c)\" --c-range 1:12 --max 10000 "
        "--jobs 4");
    CHECK(s.exit_code == 0);
    json sdoc = parse_out(s);
    CHECK(sdoc["exceptional_c"] == json::array({1, 2, 8}));
    CHECK(sdoc["catalog"]["claim"] == "tab5.sminus");
}

TEST_CASE("count checks the closed sphere formulas") {
    CliResult a = run_cli("count 1 1 1 --square-radius 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("= 30") != std::string::npos);
    CHECK(a.out.find("(match)") != std::string::npos);

    CliResult b = run_cli("count 1 1 2 --square-radius 2");
    CHECK(b.exit_code == 0);
    CHECK(b.out.find("= 12") != std::string::npos);

    CliResult c = run_cli("count 1 1 5 --square-radius 1");
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("= 4") != std::string::npos);
}

TEST_CASE("identities suite passes") {
    CliResult r = run_cli("identities --jobs 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all identity suites hold") != std::string::npos);
}

TEST_CASE("list prints the catalog") {
    CliResult r = run_cli("list");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("rmk1.3") != std::string::npos);
    CHECK(r.out.find("conj5.13") != std::string::npos);
}

TEST_CASE("report files round-trip through a JSON parser byte for byte") {
    FileGuard report("cli_test_report.json");
    CliResult r = run_cli("claim rmk1.4 --report " + report.path);
    CHECK(r.exit_code == 0);
    std::ifstream in(report.path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string raw = ss.str();
    CHECK(raw == r.out);
    json doc = json::parse(raw);
    CHECK(doc.dump(2) + "\n" == raw);
}

TEST_CASE("csv dump lists one finding per row") {
    FileGuard csv("cli_test_gaps.csv");
    run_cli("claim rmk1.4 --csv " + csv.path);
    std::ifstream in(csv.path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n");
    std::getline(in, line);
    CHECK(line == "111");
}

TEST_CASE("reports are identical across thread counts") {
    CliResult a = run_cli("claim thm1.2.i --max 4000 --jobs 1");
    CliResult b = run_cli("claim thm1.2.i --max 4000 --jobs 4");
    json da = parse_out(a), db = parse_out(b);
    da.erase("elapsed_seconds");
    db.erase("elapsed_seconds");
    CHECK(da == db);
}

TEST_CASE("claim checkpoints resume across invocations") {
    FileGuard cp("cli_test_cp.json");
    CliResult first = run_cli("claim rmk1.3 --max 12000 --checkpoint " + cp.path);
    CHECK(first.exit_code == 0);
    CliResult second = run_cli("claim rmk1.3 --checkpoint " + cp.path);
    CHECK(second.exit_code == 0);
    json doc = parse_out(second);
    CHECK(doc["findings"] == json::array({20142}));
    CHECK(doc["checkpoint_cursor"] == 25000);

    std::ofstream(cp.path) << "not json at all";
    CHECK(run_cli("claim rmk1.3 --checkpoint " + cp.path).exit_code == 2);
}

TEST_CASE("scan checkpoints resume across invocations") {
    FileGuard cp("cli_test_scan_cp.json");
    run_cli("scan \"x^2 + 3y^2 + floor(z^2/10)\" --max 21000 --checkpoint " +
            cp.path);
    CliResult r = run_cli(
        "scan \"x^2 + 3y^2 + floor(z^2/10)\" --max 25000 --checkpoint " + cp.path);
    CHECK(r.exit_code == 1);
    json doc = parse_out(r);
    CHECK(doc["gaps"] == json::array({20142}));
}

} // TEST_SUITE
