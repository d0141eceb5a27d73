#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "mzv/real.hpp"
#include "oracles.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const char* path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("MZV_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = env + " \"" + bin + "\" " + args + " >cli_out.tmp 2>cli_err.tmp";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp("cli_out.tmp");
    r.err = slurp("cli_err.tmp");
    std::remove("cli_out.tmp");
    std::remove("cli_err.tmp");
    return r;
}

size_t line_count(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("dual subcommand") {
    CHECK(run_cli("dual 1,2").out == "3\n");
    CHECK(run_cli("dual 2").out == "2\n");
    CHECK(run_cli("dual 1,1,3").out == "1,4\n");
    RunResult bad = run_cli("dual 2,1");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("not admissible") != std::string::npos);
    CHECK(run_cli("dual abc").code == 2);
    CHECK(run_cli("dual").code == 2);
}

TEST_CASE("zeta subcommand") {
    RunResult tiny = run_cli("zeta 1,2 --terms 2");
    REQUIRE(tiny.code == 0);
    auto doc = nlohmann::json::parse(tiny.out);
    mzv::Real v = mzv::Real::parse(doc["result"]["re"].get<std::string>(), 128);
    mzv::Real quarter(1, 128);
    quarter /= 4;
    CHECK(v == quarter);
    CHECK(doc["inputs"]["index"] == "1,2");
    CHECK(doc["inputs"]["dual"] == "3");
    CHECK(doc["terms_used"] == 2);

    CHECK(run_cli("zeta 2,1 --terms 100").code == 1);
    CHECK(run_cli("zeta 2 --eps 1e-8 --terms 100").code == 2);

    RunResult adaptive = run_cli("zeta 2 --eps 1e-10");
    REQUIRE(adaptive.code == 0);
    auto adoc = nlohmann::json::parse(adaptive.out);
    mzv::Real av = mzv::Real::parse(adoc["result"]["re"].get<std::string>(), 128);
    mzv::Real pi = mzv::Real::pi(192);
    mzv::Real anchor = pi * pi;
    anchor /= 6;
    CHECK(abs(av - anchor).leq_d(1e-10));
    mzv::Real est = mzv::Real::parse(adoc["error_estimate"].get<std::string>(), 128);
    CHECK(est.leq_d(1e-10));
}

TEST_CASE("interp subcommand") {
    RunResult r = run_cli("interp 1,2 --s 0 --terms 256");
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    mzv::Real v = mzv::Real::parse(doc["result"]["re"].get<std::string>(), 128);
    mzv::Real est = mzv::Real::parse(doc["error_estimate"].get<std::string>(), 128);
    mzv::Real ref = oracles::zeta_ref_ui(3, 128);
    CHECK(abs(v - ref) <= est);

    CHECK(run_cli("interp 1,2 --s -1.5 --terms 64").code == 1);
    CHECK(run_cli("interp 2,1 --s 0 --terms 64").code == 1);
    CHECK(run_cli("interp 1,2 --terms 64").code == 2); // --s required
}

TEST_CASE("ohno-sum subcommand") {
    RunResult r = run_cli("ohno-sum 1,2 --m 1 --eps 1e-8");
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    mzv::Real v = mzv::Real::parse(doc["result"]["re"].get<std::string>(), 128);
    mzv::Real est = mzv::Real::parse(doc["error_estimate"].get<std::string>(), 128);
    mzv::Real ref = oracles::zeta_ref_ui(4, 128);
    CHECK(abs(v - ref) <= est + mzv::Real::pow2(-50, 128));
}

TEST_CASE("verify subcommand modes and determinism") {
    RunResult gen = run_cli("verify --weight-max 4 --m-max 1 --eps 1e-8");
    CHECK(gen.code == 0);
    CHECK(line_count(gen.out) == 7 * 2);
    RunResult again = run_cli("verify --weight-max 4 --m-max 1 --eps 1e-8");
    CHECK(again.out == gen.out); // byte-identical reports

    // every line is a JSON report with a pass verdict
    std::istringstream lines(gen.out);
    std::string line;
    while (std::getline(lines, line)) {
        auto doc = nlohmann::json::parse(line);
        CHECK(doc["verdict"] == "pass");
        CHECK(doc["kind"] == "ohno-integer");
    }

    RunResult grid = run_cli("verify --index 1,2 --s-grid re=-0.5:1:0.5,im=0:3:1 --terms 200");
    CHECK(grid.code == 0);
    CHECK(line_count(grid.out) == 16);

    CHECK(run_cli("verify").code == 2);
    CHECK(run_cli("verify --suite definitely-missing.json").code == 2);
    CHECK(run_cli("verify --weight-max 4 --suite x.json").code == 2);
}

TEST_CASE("sweep subcommand") {
    RunResult empty = run_cli("sweep 3 --s-grid re=0:-1:1 --out sweep_tmp.csv");
    CHECK(empty.code == 0);
    CHECK(slurp("sweep_tmp.csv") == "re_s,im_s,re_val,im_val,err,N\n");
    std::remove("sweep_tmp.csv");

    RunResult r1 = run_cli("sweep 3 --s-grid re=0:1:0.5 --terms 400 --out sweep_tmp.csv");
    REQUIRE(r1.code == 0);
    std::ifstream in("sweep_tmp.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "re_s,im_s,re_val,im_val,err,N");
    // r=1 sweep: each value is the shifted single zeta within its estimate
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cols;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) cols.push_back(tok);
        REQUIRE(cols.size() == 6);
        mzv::Real re_s = mzv::Real::parse(cols[0], 128);
        mzv::Real val = mzv::Real::parse(cols[2], 128);
        mzv::Real err = mzv::Real::parse(cols[4], 128);
        mzv::Real arg = re_s + mzv::Real(3, 128);
        mzv::Real ref = oracles::zeta_ref(arg);
        CHECK(abs(val - ref) <= err + mzv::Real::pow2(-60, 128));
        ++rows;
    }
    CHECK(rows == 3);
    std::remove("sweep_tmp.csv");

    RunResult js = run_cli("sweep 3 --s-grid re=0:0:1 --terms 200 --out sweep_tmp.json --format json");
    REQUIRE(js.code == 0);
    auto doc = nlohmann::json::parse(slurp("sweep_tmp.json"));
    CHECK(doc["rows"].size() == 1);
    std::remove("sweep_tmp.json");

    CHECK(run_cli("sweep 3 --s-grid re=0:1:1 --out f.x --format xml").code == 2);
}

TEST_CASE("sweeping an index and its dual stays within summed estimates") {
    const std::string grid = "--s-grid re=-0.25:1:0.5,im=0:1:1 --terms 256";
    REQUIRE(run_cli("sweep 1,2 " + grid + " --out sweep_a.csv").code == 0);
    REQUIRE(run_cli("sweep 3 " + grid + " --out sweep_b.csv").code == 0);
    std::ifstream a("sweep_a.csv"), b("sweep_b.csv");
    std::string la, lb;
    std::getline(a, la);
    std::getline(b, lb);
    int rows = 0;
    while (std::getline(a, la) && std::getline(b, lb)) {
        auto split = [](const std::string& s) {
            std::vector<std::string> cols;
            std::istringstream ls(s);
            std::string tok;
            while (std::getline(ls, tok, ',')) cols.push_back(tok);
            return cols;
        };
        auto ca = split(la), cb = split(lb);
        REQUIRE(ca.size() == 6);
        REQUIRE(cb.size() == 6);
        CHECK(ca[0] == cb[0]); // same grid point
        CHECK(ca[1] == cb[1]);
        mzv::Real dre = mzv::Real::parse(ca[2], 128) - mzv::Real::parse(cb[2], 128);
        mzv::Real dim = mzv::Real::parse(ca[3], 128) - mzv::Real::parse(cb[3], 128);
        mzv::Real diff = hypot(dre, dim);
        mzv::Real budget = mzv::Real::parse(ca[4], 128) + mzv::Real::parse(cb[4], 128);
        CHECK(diff <= budget);
        ++rows;
    }
    CHECK(rows == 3 * 2);
    std::remove("sweep_a.csv");
    std::remove("sweep_b.csv");
}

TEST_CASE("environment override and timing flag") {
    RunResult r = run_cli("zeta 2 --terms 64", "MZV_BITS=192");
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["precision_bits"] == 192);

    RunResult bad = run_cli("zeta 2 --terms 64", "MZV_BITS=banana");
    CHECK(bad.code == 2);

    RunResult timed = run_cli("zeta 2 --terms 64 --timing");
    REQUIRE(timed.code == 0);
    auto tdoc = nlohmann::json::parse(timed.out);
    CHECK(tdoc.contains("elapsed_ms"));
    CHECK(timed.err.find("elapsed_ms") != std::string::npos);

    // default output carries no timing and is byte-deterministic
    RunResult a = run_cli("zeta 2 --terms 64");
    RunResult b = run_cli("zeta 2 --terms 64");
    CHECK(a.out == b.out);
}
