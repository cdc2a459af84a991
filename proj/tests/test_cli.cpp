#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("bound subcommand") {
    const RunResult g2 = run("bound --genus 2");
    CHECK(g2.exit_code == 0);
    CHECK(g2.output.find("10.576483044234514") != std::string::npos);
    CHECK(g2.output.find("1.76274717403908") != std::string::npos);

    const RunResult g1 = run("bound --genus 1");
    CHECK(g1.exit_code == 0);
    CHECK(g1.output.find("3.5254943480781717") != std::string::npos);

    CHECK(run("bound --genus 0").exit_code == 2);
    CHECK(run("bound").exit_code == 2);
}

TEST_CASE("cusp subcommand") {
    const RunResult r = run("cusp --p 4 --A 6.283185307179586476");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"theta\": 1.570796326794896") != std::string::npos);

    CHECK(run("cusp --p 4").exit_code == 2);
    CHECK(run("cusp --p 4 --L 1 --A 1").exit_code == 2);
    CHECK(run("cusp --p 2 --L 1").exit_code == 2);
}

TEST_CASE("triangle subcommand") {
    const RunResult r = run("triangle --a 1 --b 4 --x 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("1.8545904360032246") != std::string::npos);

    const RunResult s = run("triangle --c 1 --l 3 --x 1.5");
    CHECK(s.exit_code == 0);
    CHECK(s.output.find("angle_sum_derivative") != std::string::npos);

    CHECK(run("triangle --c 1 --l 3").exit_code == 2);
    CHECK(run("triangle --c 1 --l 3 --x 99").exit_code == 2);
}

TEST_CASE("verify subcommand exit codes and determinism") {
    const RunResult fl = run("verify --suite final_lemma");
    CHECK(fl.exit_code == 0);
    CHECK(fl.output.find("\"pass\": true") != std::string::npos);

    const RunResult a = run("verify --suite all --seed 7");
    const RunResult b = run("verify --suite all --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    const RunResult t12 = run("verify --suite theorem12 --p 4 --L auto --restarts 6");
    CHECK(t12.exit_code == 0);
    CHECK(t12.output.find("6.28318530717958") != std::string::npos);  // reference area 2*pi
    CHECK(t12.output.find("\"seed\": 1729") != std::string::npos);    // documented default

    CHECK(run("verify --suite nonsense").exit_code == 2);
    CHECK(run("verify").exit_code == 2);

    const RunResult csv = run("verify --suite lemma26 --output csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("suite,item,metric,value,reference,pass", 0) == 0);
}

TEST_CASE("seed can come from the environment") {
    const RunResult flagged = run("verify --suite lemma24 --seed 99");
    setenv("CUSP_ISO_SEED", "99", 1);
    const RunResult env = run("verify --suite lemma24");
    unsetenv("CUSP_ISO_SEED");
    CHECK(flagged.exit_code == 0);
    CHECK(env.output == flagged.output);
}

TEST_CASE("fillpair subcommand full pipeline") {
    const RunResult s21 = run("fillpair " + fixture("s21_minimal.json"));
    CHECK(s21.exit_code == 0);
    CHECK(s21.output.find("\"glued_sides\": 12") != std::string::npos);
    CHECK(s21.output.find("10.576483044234514") != std::string::npos);

    const RunResult s11 = run("fillpair " + fixture("s11_minimal.json"));
    CHECK(s11.exit_code == 0);
    CHECK(s11.output.find("\"glued_sides\": 4") != std::string::npos);

    const RunResult corrupt = run("fillpair " + fixture("corrupt_involution.json"));
    CHECK(corrupt.exit_code == 2);
    CHECK(corrupt.output.find("dart 1") != std::string::npos);

    const RunResult sphere = run("fillpair " + fixture("sphere_nonfilling.json"));
    CHECK(sphere.exit_code == 1);

    CHECK(run("fillpair /nonexistent.json").exit_code == 2);
}
