// Golden tests for the command-line surface: byte-stable outputs for fixed
// (config, seed), and the documented exit-code contract. The CLI binary path
// arrives as the last command-line argument.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include <sys/wait.h>

namespace {

std::string g_cli_path;

struct RunResult {
    std::string out;
    int code;
};

RunResult run(const std::string& args) {
    std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return RunResult{out, code};
}

}  // namespace

TEST_CASE("measure of the identity ball in the d=3 group") {
    RunResult r = run("measure --ball I --n 1 --d 3 --p 3");
    CHECK(r.code == 0);
    CHECK(r.out == "1/72 (0.013888888888)\n");
}

TEST_CASE("orders CSV is byte-stable") {
    const std::string want =
        "d,kappa,p,n,formula_order,enumerated_order,brute_order,match\n"
        "2,p,3,1,6,6,6,yes\n"
        "2,p,3,2,18,18,18,yes\n";
    RunResult r1 = run("orders --d 2 --kappa p --p 3 --n-max 2 --format csv");
    CHECK(r1.code == 0);
    CHECK(r1.out == want);
    RunResult r2 = run("orders --d 2 --kappa p --p 3 --n-max 2 --format csv");
    CHECK(r2.out == r1.out);
}

TEST_CASE("sampling is reproducible for a fixed seed") {
    const std::string want = "10000010\n10020110\n22010222\n";
    CHECK(run("sample --d 2 --kappa=-v --p 3 --level 2 --count 3 --seed 42").out == want);
    CHECK(run("sample --d 2 --kappa=-v --p 3 --level 2 --count 3 --seed 42").out == want);
    CHECK(run("sample --d 2 --kappa=-v --p 3 --level 2 --count 3 --seed 43").out != want);
}

TEST_CASE("enumerate with both oracles agrees and dumps the table") {
    RunResult r = run("enumerate --d 2 --kappa=-v --p 3 --n 1 --oracle both --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"oracle_match\": true") != std::string::npos);
    CHECK(r.out.find("\"order\": 4") != std::string::npos);
    CHECK(r.out.find("\"0120\"") != std::string::npos);
    CHECK(r.out.find("\"2002\"") != std::string::npos);
}

TEST_CASE("set expressions over named balls") {
    RunResult r = run("measure --d 2 --kappa p --p 3 --def A=ball:I@1 --def B=ball:I@2 "
                      "--expr \"(A \\\\ B) | B\"");
    CHECK(r.code == 0);
    CHECK(r.out == "1/6 (0.166666666666)\n");
}

TEST_CASE("lift tower of the identity under the zero policy") {
    RunResult r = run("lift --d 2 --kappa=-v --p 3 --n 1 --matrix I --to-level 3 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"1001\"") != std::string::npos);
    CHECK(r.out.find("\"10000010\"") != std::string::npos);
    CHECK(r.out.find("\"100000000100\"") != std::string::npos);
}

TEST_CASE("cardano reports exactly two decompositions") {
    RunResult r = run("cardano --p 3 --n 1 --element I");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"exactly_two\": true") != std::string::npos);
    CHECK(r.out.find("\"partner_consistent\": true") != std::string::npos);
}

TEST_CASE("compare-integral table") {
    RunResult r = run("compare-integral --p 3 --n-max 2 --format csv");
    CHECK(r.code == 0);
    const std::string want =
        "kappa,p,n,integral_value,counting_value,equal\n"
        "-v,3,1,1/4,1/4,yes\n"
        "-v,3,2,1/12,1/12,yes\n"
        "p,3,1,1/6,1/6,yes\n"
        "p,3,2,1/18,1/18,yes\n"
        "up,3,1,1/6,1/6,yes\n"
        "up,3,2,1/18,1/18,yes\n";
    CHECK(r.out == want);
}

TEST_CASE("exit codes: usage, check failure, budget") {
    CHECK(run("orders --d 2 --p 4 --n-max 1").code == 2);  // not prime
    CHECK(run("nonsense-subcommand").code == 2);
    CHECK(run("verify --only orders --p 3 --selftest-tamper").code == 1);
    // 5^18 candidates blow any default budget
    CHECK(run("enumerate --d 3 --p 5 --n 2 --oracle brute").code == 3);
    // budget exhaustion in the orders table is reported as skipped, not failed
    RunResult skipped = run("orders --d 3 --p 5 --n-max 2 --max-table 10 --format csv");
    CHECK(skipped.code == 0);
    CHECK(skipped.out.find("skipped") != std::string::npos);
}

TEST_CASE("verify emits a versioned JSON report") {
    RunResult r = run("verify --only sampler --draws 20000 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"schema\": \"padicrot/verify-v1\"") != std::string::npos);
    CHECK(r.out.find("\"claim\"") != std::string::npos);
    CHECK(r.out.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(r.out.find("\"fail\"") == std::string::npos);
}

TEST_CASE("environment variables override the default budgets") {
    RunResult r = run("enumerate --d 2 --kappa p --p 3 --n 1 --oracle brute");
    CHECK(r.code == 0);
    std::string saved = g_cli_path;
    g_cli_path = "PADICROT_MAX_CANDIDATES=50 " + saved;
    CHECK(run("enumerate --d 2 --kappa p --p 3 --n 1 --oracle brute").code == 3);
    // explicit flags win over the environment
    CHECK(run("enumerate --d 2 --kappa p --p 3 --n 1 --oracle brute --max-candidates 100").code == 0);
    g_cli_path = saved;
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests [doctest options] <path-to-cli>\n";
        return 1;
    }
    g_cli_path = argv[argc - 1];
    doctest::Context context;
    context.applyCommandLine(argc - 1, argv);
    return context.run();
}
