// End-to-end checks of the polyfp binary: exit codes, byte-stable output,
// and JSON round trips between subcommands. The binary path comes from the
// POLYFP_CLI environment variable (set by CTest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("POLYFP_CLI");
    return env ? env : "";
}

RunResult run_cli(const std::string& args) {
    RunResult res;
    std::string cmd = "\"" + cli_path() + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe)) res.out += buf;
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.code = WEXITSTATUS(status);
    return res;
}

const char* kGolden = R"({"coeffs":[[0,0],[0,0],[3,0],[-2,0]]})";

} // namespace

TEST_CASE("binary is reachable") {
    REQUIRE(!cli_path().empty());
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("exemplar emits the documented bytes") {
    RunResult r = run_cli("exemplar --n 2");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"coeffs\":[[0,0],[1.5,0],[0,0],[-0.5,0]]}\n");
}

TEST_CASE("emitted polynomials feed back into analyze") {
    RunResult fam = run_cli("exemplar --n 4");
    REQUIRE(fam.code == 0);
    std::string inline_arg = fam.out;
    inline_arg.pop_back(); // strip newline
    RunResult an = run_cli("analyze --coeffs '" + inline_arg + "'");
    CHECK(an.code == 0);
    CHECK(an.out.find("\"satisfied\":true") != std::string::npos);
    CHECK(an.out.find("\"max_collinear_attractive\":2") != std::string::npos);
    CHECK(an.out.find("\"bound\":3") != std::string::npos);
    CHECK(an.out.find("\"conjecture_margin\":1.25") != std::string::npos);
}

TEST_CASE("synthesize golden prescription and re-analyze the output") {
    RunResult synth = run_cli(
        R"(synthesize --nodes '{"nodes":[{"z":[0,0],"alpha":[0,0]},{"z":[1,0],"alpha":[0,0]}]}')");
    CHECK(synth.code == 0);
    CHECK(synth.out.find("\"coeffs\":[[0,0],[0,0],[3,0],[-2,0]]") != std::string::npos);
    CHECK(synth.out.find("\"achieved_degree\":3") != std::string::npos);
    CHECK(synth.out.find("\"leading_coefficient\":[-2,0]") != std::string::npos);

    std::string inline_arg = synth.out;
    inline_arg.pop_back();
    RunResult an = run_cli("analyze --coeffs '" + inline_arg + "'");
    CHECK(an.code == 0);
    CHECK(an.out.find("\"conjecture_margin\":1.5") != std::string::npos);
    CHECK(an.out.find("\"max_collinear_attractive\":2") != std::string::npos);
}

TEST_CASE("iterate approximates sqrt(2)") {
    RunResult r = run_cli(
        R"(iterate --coeffs '{"coeffs":[[0.5,0],[1,0],[-0.25,0]]}' --x0 "[1,0]")");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"status\":\"converged\"") != std::string::npos);
    CHECK(r.out.find("\"limit\":[1.4142135623") != std::string::npos);
}

TEST_CASE("identity subcommands") {
    RunResult quad = run_cli(R"(identity --quadratic --coeffs '{"coeffs":[[0,0],[0,0],[1,0]]}')");
    CHECK(quad.code == 0);
    CHECK(quad.out.find("\"ok\":true") != std::string::npos);
    CHECK(quad.out.find("\"sum\":[2,0]") != std::string::npos);

    RunResult cubic = run_cli(
        R"(identity --cubic --c "[1,0]" --z1 "[0,0]" --z2 "[1,0]" --z3 "[2,0]")");
    CHECK(cubic.code == 0);
    CHECK(cubic.out.find("\"margin\":3") != std::string::npos);
    CHECK(cubic.out.find("\"guaranteed_index\":") != std::string::npos);
}

TEST_CASE("conjecture runs are replayable byte for byte") {
    const std::string args = "conjecture --degree 2 --samples 256 --seed 11 --workers 2";
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("\"violations\":0") != std::string::npos);
    CHECK(first.out.find("\"seed\":11") != std::string::npos);
}

TEST_CASE("verify-bound random stream") {
    RunResult r = run_cli("verify-bound --random --degree 3 --samples 200 --seed 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"violations\":0") != std::string::npos);
    CHECK(r.out.find("\"checked\":200") != std::string::npos);
}

TEST_CASE("coverage on the golden cubic") {
    RunResult r = run_cli(std::string("coverage --coeffs '") + kGolden + "'");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"all_covered\":true") != std::string::npos);
    CHECK(r.out.find("\"attractive_count\":2") != std::string::npos);
}

TEST_CASE("basins writes image and sidecar") {
    RunResult r = run_cli(std::string("basins --coeffs '") + kGolden +
                          "' --out cli_basins.ppm --width 16 --height 16 --max-steps 60");
    CHECK(r.code == 0);
    std::ifstream ppm("cli_basins.ppm", std::ios::binary);
    CHECK(ppm.good());
    std::ifstream sidecar("cli_basins.ppm.json");
    CHECK(sidecar.good());
    std::string line;
    std::getline(sidecar, line);
    CHECK(line.find("\"width\":16") != std::string::npos);
    CHECK(line.find("\"palette\":") != std::string::npos);
    std::remove("cli_basins.ppm");
    std::remove("cli_basins.ppm.json");
}

TEST_CASE("validation failures exit 2") {
    CHECK(run_cli("no-such-subcommand").code == 2);
    CHECK(run_cli("exemplar --n 1").code == 2);
    CHECK(run_cli("analyze").code == 2);
    CHECK(run_cli("identity --quadratic --cubic").code == 2);
    CHECK(run_cli(R"(analyze --coeffs 'not json')").code == 2);
    // coincident prescribed points
    CHECK(run_cli(
              R"(synthesize --nodes '{"nodes":[{"z":[0,0],"alpha":[0,0]},{"z":[0,0],"alpha":[0,0]}]}')")
              .code == 2);
    // degree too small for fixed-point analysis
    CHECK(run_cli(R"(analyze --coeffs '{"coeffs":[[1,0],[2,0]]}')").code == 2);
}

TEST_CASE("a forced artifact violation exits 4 and still writes the report") {
    // an absurd collinearity tolerance makes the four unit-circle points
    // "collinear", tripping the bound check: 4 > ceil(5/2)
    RunResult fam = run_cli("exemplar --n 4 -o cli_fam4.json");
    REQUIRE(fam.code == 0);
    RunResult an = run_cli("analyze -i cli_fam4.json --eps-line 10");
    CHECK(an.code == 4);
    CHECK(an.out.find("\"satisfied\":false") != std::string::npos);
    CHECK(an.out.find("\"max_collinear_attractive\":4") != std::string::npos);
    std::remove("cli_fam4.json");
}
