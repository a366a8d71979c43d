#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "kochanski/approximants.hpp"

using json = nlohmann::json;
using namespace kochanski;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string base = "/tmp/kochanski_cli_" + std::to_string(counter++);
    const std::string out_path = base + ".out";
    const std::string err_path = base + ".err";
    const std::string cmd =
        std::string(KOCHANSKI_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("approximants table reproduces the historical fractions") {
    const RunResult r = run_cli("approximants --alpha pi --seed 22/7 --count 5");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "333/106"));
    CHECK(contains(r.out, "355/113"));
    CHECK(contains(r.out, "1667438/530762"));
    CHECK(contains(r.out, "9254583360/2945825376"));
    CHECK(contains(r.out, "136736469144003/43524569930401"));
}

TEST_CASE("approximants genitor column for sqrt2") {
    const RunResult r = run_cli("approximants --alpha sqrt:2 --seed 3/2 --count 8 --format csv");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,P,Q,R,S,x");
    std::string xs;
    while (std::getline(lines, line)) {
        xs += line.substr(line.rfind(',') + 1) + " ";
    }
    CHECK(xs == "2 4 4 15 17 77 101 119  ");  // final state has no genitor
}

TEST_CASE("seed below alpha exits 3") {
    const RunResult r = run_cli("approximants --alpha pi --seed 7/3 --count 1");
    CHECK(r.code == 3);
    CHECK(contains(r.err, "SeedNotAbove"));
    CHECK(r.out.empty());
}

TEST_CASE("convergents end with the eleventh fraction") {
    const RunResult r = run_cli("convergents --alpha pi --count 11");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "4272943/1360120"));
}

TEST_CASE("phi convergents are Fibonacci ratios") {
    const RunResult r = run_cli("convergents --alpha phi --count 6 --format csv");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "5,1,13,8"));
}

TEST_CASE("rational expansion terminates with a note and exit 0") {
    const RunResult r = run_cli("convergents --alpha rat:22/7 --count 10");
    CHECK(r.code == 0);
    CHECK(contains(r.err, "expansion terminates"));
    CHECK(contains(r.out, "22/7"));
}

TEST_CASE("verify passes for the pi run") {
    const RunResult r = run_cli("verify --alpha pi --seed 22/7 --count 8");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "all properties verified"));
}

TEST_CASE("verify notes the repeated sqrt2 genitor") {
    const RunResult r = run_cli("verify --alpha sqrt:2 --seed 3/2 --count 8");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "all properties verified"));
    CHECK(contains(r.out, "repeated genitor: x_1 = x_2 = 4"));
}

TEST_CASE("verify rejects a dead seed with exit 3") {
    const RunResult r = run_cli("verify --alpha pi --seed 4/1 --count 1");
    CHECK(r.code == 3);
    CHECK(contains(r.err, "GenitorNotPositive"));
}

TEST_CASE("seed search lists the 22/7 multiples") {
    const RunResult r = run_cli("seeds --alpha pi --max-denominator 105 --format csv");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "R0,S0,genitor");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 15);
    CHECK(contains(r.out, "22,7,15"));
    CHECK(contains(r.out, "330,105,1"));
}

TEST_CASE("empty seed search still exits 0") {
    const RunResult r = run_cli("seeds --alpha pi --max-denominator 6 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "R0,S0,genitor\n");
}

TEST_CASE("sqrt2 seed search finds 3/2") {
    const RunResult r = run_cli("seeds --alpha sqrt:2 --max-denominator 2 --format csv");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "3,2,2"));
}

TEST_CASE("paper bundle in json carries the genitor sequence") {
    const RunResult r = run_cli("paper --format json");
    CHECK(r.code == 0);
    const json bundle = json::parse(r.out);
    const std::vector<std::string> expected = {"15",     "4697",   "5548",   "14774",
                                               "33696",  "61072",  "111231", "115985",
                                               "173819", "563316", "606004"};
    CHECK(bundle["genitores"].get<std::vector<std::string>>() == expected);
    CHECK(bundle["binary_sum"]["num"] == "3217");
    CHECK(bundle["binary_sum"]["den"] == "1024");
    CHECK(bundle["binary_sum"]["decimal"] == "3.1416015625");
    CHECK(bundle["missed_convergent"]["identity_holds"] == true);
}

TEST_CASE("paper bundle as a table shows the unreduced fractions") {
    const RunResult r = run_cli("paper");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "1667438/530762"));
    CHECK(contains(r.out, "833719/265381"));
    CHECK(contains(r.out, "25/8*"));
    CHECK(contains(r.out, "3/1*"));
}

TEST_CASE("paper bundle csv has the early ledger rows under 20 digits") {
    const RunResult r = run_cli("paper --format csv");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    bool in_ledger = false;
    int checked = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("# ", 0) == 0) {
            in_ledger = line == "# precision_ledger";
            continue;
        }
        if (!in_ledger || line.rfind("n,", 0) == 0) continue;
        const int n = line[0] - '0';
        const int digits = std::stoi(line.substr(2));
        if (n <= 3) {
            CHECK(digits <= 20);
            ++checked;
        }
    }
    CHECK(checked == 4);
}

TEST_CASE("precision subcommand honors the rounding flag") {
    const RunResult trunc = run_cli("precision --count 2 --format csv");
    CHECK(trunc.code == 0);
    CHECK(contains(trunc.out, "0,7,15,truncate"));
    CHECK(contains(trunc.out, "1,12,4697,truncate"));

    const RunResult round = run_cli("precision --count 2 --rounding --format csv");
    CHECK(round.code == 0);
    CHECK(contains(round.out, "1,11,4697,round"));
}

TEST_CASE("genitores alias prints only the x column") {
    const RunResult r = run_cli("genitores --alpha pi --seed 22/7 --count 4 --format json");
    CHECK(r.code == 0);
    const json out = json::parse(r.out);
    CHECK(out["genitores"].get<std::vector<std::string>>() ==
          std::vector<std::string>{"15", "4697", "5548", "14774"});
}

TEST_CASE("json round-trips the exact integers") {
    const RunResult r = run_cli("approximants --alpha pi --seed 22/7 --count 5 --format json");
    CHECK(r.code == 0);
    const json out = json::parse(r.out);
    const auto states = generate_sequence(22, 7, RealConstant::pi(), 5);
    REQUIRE(out["states"].size() == states.size());
    for (std::size_t n = 0; n < states.size(); ++n) {
        const json& row = out["states"][n];
        CHECK(Integer(row["R"].get<std::string>()) == states[n].R);
        CHECK(Integer(row["S"].get<std::string>()) == states[n].S);
        if (states[n].P) {
            CHECK(Integer(row["P"].get<std::string>()) == *states[n].P);
            CHECK(Integer(row["Q"].get<std::string>()) == *states[n].Q);
        } else {
            CHECK(row["P"].is_null());
        }
        if (states[n].x) {
            CHECK(Integer(row["x"].get<std::string>()) == *states[n].x);
        } else {
            CHECK(row["x"].is_null());
        }
    }
}

TEST_CASE("identical invocations are byte-identical") {
    const RunResult a = run_cli("paper --format json");
    const RunResult b = run_cli("paper --format json");
    CHECK(a.out == b.out);
    const RunResult c = run_cli("approximants --alpha pi --seed 22/7 --count 5");
    const RunResult d = run_cli("approximants --alpha pi --seed 22/7 --count 5");
    CHECK(c.out == d.out);
}

TEST_CASE("parse failures exit 2") {
    CHECK(run_cli("approximants --alpha tau --seed 22/7 --count 1").code == 2);
    CHECK(run_cli("approximants --alpha sqrt:4 --seed 3/1 --count 1").code == 2);
    CHECK(run_cli("approximants --alpha pi --seed 22x7 --count 1").code == 2);
    CHECK(run_cli("approximants --alpha pi --seed 22/7").code == 2);  // missing --count
    CHECK(run_cli("nonsense").code == 2);
}

TEST_CASE("precision cap flag is honored") {
    CHECK(run_cli("approximants --alpha pi --seed 22/7 --count 3 --max-digits 64").code == 0);
    // a 4-digit cap cannot certify the deeper genitores of sqrt(2)
    const RunResult r = run_cli("approximants --alpha sqrt:2 --seed 3/2 --count 8 --max-digits 4");
    CHECK(r.code == 1);
    CHECK(contains(r.err, "error"));
}

TEST_CASE("reduced flag swaps in lowest terms") {
    const RunResult r = run_cli("approximants --alpha pi --seed 22/7 --count 2 --reduced");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "833719/265381"));
    CHECK_FALSE(contains(r.out, "1667438/530762"));
}

TEST_CASE("rational alpha prints an advisory note") {
    const RunResult r = run_cli("convergents --alpha rat:22/7 --count 2");
    CHECK(r.code == 0);
    CHECK(contains(r.err, "exactly rational"));
}
