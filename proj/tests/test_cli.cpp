#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

// Drives the installed CLI binary end to end: output schemas, golden
// values, exit codes, determinism and the output-directory environment
// variable.

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const std::string out_path = "cli_stdout_" + std::to_string(counter) + ".tmp";
    const std::string err_path = "cli_stderr_" + std::to_string(counter) + ".tmp";
    ++counter;
    const std::string cmd = env + " \"" + std::string(EPIGAME_CLI_PATH) + "\" " + args +
                            " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

const std::string kData = EPIGAME_TEST_DATA;

}  // namespace

TEST_CASE("complete: published values and schema") {
    auto r = run_cli("complete --n 15 --c 0.4 --h 0.5 --tau 0.6666666666666666");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == "complete");
    CHECK(doc["params"]["n"] == 15);
    CHECK(doc["result"]["n_star"] == 8);
    CHECK(doc["result"]["n_opt"] == 3);
    CHECK(doc["result"]["poa_upper_bound"].get<double>() == doctest::Approx(1.2));
    CHECK(doc["result"]["equilibria_bruteforce"] == json::array({8}));
    CHECK(doc["result"]["mixed"]["p_hat_star"].get<double>() ==
          doctest::Approx(0.464285714286));

    SUBCASE("round-trip: parse, dump, reparse identical") {
        const json again = json::parse(doc.dump());
        CHECK(again == doc);
    }
}

TEST_CASE("complete: C >= H branch") {
    auto r = run_cli("complete --n 15 --c 0.6 --h 0.5 --tau 0.6667");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["result"]["n_star"] == 15);
}

TEST_CASE("validation failures exit 2 with machine-readable error") {
    auto r = run_cli("complete --n 15 --c -1 --h 0.5 --tau 0.6667");
    CHECK(r.exit_code == 2);
    const json err = json::parse(r.err);
    CHECK(err.contains("error"));
    CHECK(err["status"] == "invalid_argument");

    auto r2 = run_cli("complete --n 15");
    CHECK(r2.exit_code == 2);
    CHECK(json::parse(r2.err).contains("error"));

    auto r3 = run_cli("sweep --param n --from 5 --to 4 --step 1 --c 0.4 --h 0.5 --tau 0.6667");
    CHECK(r3.exit_code == 2);
}

TEST_CASE("bipartite: high cost ratio keeps the bound above C/H") {
    auto r = run_cli("bipartite --m 20 --n 20 --c 2.5 --h 0.5 --tau 0.6667");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["result"]["equilibria"].size() >= 1);
    CHECK(doc["result"]["poa_upper_bound"].get<double>() > 5.0);
}

TEST_CASE("nimfa: edge-list oracle graph") {
    auto r = run_cli("nimfa --edges " + kData + "/k8.txt --tau 0.6667");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["result"]["nodes"] == 8);
    CHECK(doc["result"]["above_threshold"] == true);
    for (const auto& v : doc["result"]["v"])
        CHECK(v.get<double>() == doctest::Approx(0.785714).epsilon(1e-3));

    auto bad = run_cli("nimfa --edges missing_file.txt --tau 0.5");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("rla: fixed seed reproduces the trace file") {
    const std::string t1 = "rla_trace_1.tmp", t2 = "rla_trace_2.tmp";
    auto r1 = run_cli("rla --n 15 --c 0.4 --h 0.5 --tau 0.6667 --seed 1 --max-steps 3000 --trace " + t1);
    auto r2 = run_cli("rla --n 15 --c 0.4 --h 0.5 --tau 0.6667 --seed 1 --max-steps 3000 --trace " + t2);
    const json d1 = json::parse(r1.out), d2 = json::parse(r2.out);
    CHECK(d1["result"]["steps"] == d2["result"]["steps"]);
    CHECK(d1["result"]["final_p"] == d2["result"]["final_p"]);
    const std::string c1 = slurp(t1), c2 = slurp(t2);
    REQUIRE(!c1.empty());
    CHECK(c1 == c2);
    CHECK(c1.substr(0, 22) == "step,node,p,sigma,cost");
    std::remove(t1.c_str());
    std::remove(t2.c_str());
}

TEST_CASE("multicomm: convergence, trace and exit codes") {
    const std::string trace = "mc_trace.tmp";
    auto r = run_cli(
        "multicomm --sizes 10,15 --taus 0.5,1.5 --q 0.8 --u0 0.5 --eps 1e-7 --trace " +
        trace);
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["result"]["converged"] == true);
    CHECK(doc["result"]["iterations"].get<int>() <= 20);
    CHECK(doc["result"]["final_n_star"].size() == 2);
    const std::string csv = slurp(trace);
    CHECK(csv.rfind("k,u,u_next,f,g,bounds_defined,argmin_interior,n_star_1,n_star_2",
                    0) == 0);
    std::remove(trace.c_str());

    SUBCASE("known oscillating ratio reports non-convergence with exit 3") {
        auto osc = run_cli("multicomm --sizes 10,15 --taus 0.5,1.5 --q 0.25 --u0 0.5");
        CHECK(osc.exit_code == 3);
        const json od = json::parse(osc.out);
        CHECK(od["result"]["converged"] == false);
        CHECK(od["result"]["cycle_period"] == 2);
    }
    SUBCASE("seven communities") {
        auto big = run_cli(
            "multicomm --sizes 10,15,12,8,9,4,15 --taus 0.5,1.5,1,1.2,1.4,0.8,0.1 "
            "--q 0.8 --u0 0.5 --eps 1e-7 --max-iter 1000");
        REQUIRE(big.exit_code == 0);
        CHECK(json::parse(big.out)["result"]["converged"] == true);
    }
}

TEST_CASE("multicomm: q sweep reports target reproduction") {
    auto r = run_cli("multicomm --sizes 10,15 --taus 0.5,1.5 --u0 0.5 --sweep-q");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["command"] == "multicomm-sweep");
    CHECK(doc["sweep"].size() == 19);
    CHECK(doc["any_q_reproduces_target"].is_boolean());
    for (const auto& row : doc["sweep"]) {
        CHECK(row.contains("q"));
        CHECK(row.contains("converged"));
        CHECK(row.contains("reproduces_target"));
    }
}

TEST_CASE("sweep: N grid keeps the bound above the pure PoA") {
    auto r = run_cli("sweep --param n --from 2 --to 30 --step 1 --c 0.4 --h 0.5 --tau 0.6666666666666666");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header.rfind("param,value", 0) == 0);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) cols.push_back(c);
        REQUIRE(cols.size() == 19);
        if (cols[11] == "null") continue;  // unbounded below threshold
        CHECK(std::stod(cols[11]) >= std::stod(cols[10]) - 1e-9);
    }
    CHECK(rows == 29);
}

TEST_CASE("sweep: n_star non-increasing in tau") {
    auto r = run_cli("sweep --param tau --from 0.2 --to 2.0 --step 0.05 --n 15 --c 0.4 --h 0.5");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    int prev = 1 << 30;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string c;
        std::vector<std::string> cols;
        while (std::getline(ss, c, ',')) cols.push_back(c);
        const int n_star = std::stoi(cols[6]);
        CHECK(n_star <= prev);
        prev = n_star;
    }
}

TEST_CASE("sweep: balanced bipartite PoA dominates the complete graph") {
    auto r = run_cli("sweep --param mn --from 3 --to 12 --step 1 --c 0.4 --h 0.5 --tau 0.6666666666666666");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        std::stringstream ss(line);
        std::string c;
        std::vector<std::string> cols;
        while (std::getline(ss, c, ',')) cols.push_back(c);
        REQUIRE(cols.size() == 13);
        CHECK(std::stod(cols[7]) >= std::stod(cols[11]) - 1e-9);
    }
    CHECK(rows == 10);
}

TEST_CASE("EPIGAME_OUT_DIR resolves relative output paths") {
    REQUIRE(std::system("rm -rf cli_outdir.tmp && mkdir -p cli_outdir.tmp") == 0);
    auto r = run_cli("complete --n 15 --c 0.4 --h 0.5 --tau 0.6667 --out report.json",
                     "EPIGAME_OUT_DIR=cli_outdir.tmp");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(slurp("cli_outdir.tmp/report.json"));
    CHECK(doc["result"]["n_star"] == 8);
    CHECK(std::system("rm -rf cli_outdir.tmp") == 0);
}
