#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

// Black-box checks of the command-line front end: exit codes, table shape,
// byte-stable formatting. The binary path is injected by the build.

namespace {

struct CliResult {
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

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string base = "cli_io_" + std::to_string(counter++);
    const std::string out = base + ".out", err = base + ".err";
    const std::string cmd =
        std::string(PSEUDOHEAT_CLI_PATH) + " " + args + " >" + out + " 2>" + err;
    const int raw = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    std::remove(out.c_str());
    std::remove(err.c_str());
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

int count_matches(const std::vector<std::string>& lines, const std::string& needle) {
    int n = 0;
    for (const auto& l : lines)
        if (l.find(needle) != std::string::npos) ++n;
    return n;
}

} // namespace

TEST_CASE("roots subcommand prints the root table") {
    const auto r = run_cli("roots --N 4 --kappa -1");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5); // header + one row per root
    CHECK(lines[0] == "l,re_theta,im_theta,set,coef_re,coef_im");
    CHECK(count_matches(lines, ",J,") == 2);
    CHECK(count_matches(lines, ",K,") == 2);
    CHECK(r.out.find("7.0710678118654") != std::string::npos);
}

TEST_CASE("output is byte-stable across runs") {
    const std::string args =
        "extrema --N 4 --domain laplace --which max --lambda 1 "
        "--x 0.2 --y -0.1 --z 0.5";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("3.5155278203922502e-02") != std::string::npos);
}

TEST_CASE("kernel subcommand produces the requested symmetric grid") {
    const auto r = run_cli("kernel --N 4 --t 1 --xi-min -5 --xi-max 5 --steps 101");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 102); // header + inclusive grid
    CHECK(lines[0] == "xi,p");
    std::vector<double> xi, p;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto comma = lines[i].find(',');
        REQUIRE(comma != std::string::npos);
        xi.push_back(std::stod(lines[i].substr(0, comma)));
        p.push_back(std::stod(lines[i].substr(comma + 1)));
    }
    CHECK(xi.front() == -5.0);
    CHECK(xi.back() == 5.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        CHECK(p[i] == doctest::Approx(p[p.size() - 1 - i]).epsilon(1e-12));
}

TEST_CASE("time-domain crossing profile value is pinned") {
    // Downward crossing for N = 3, kappa = -1 is driven by the single root
    // theta = -1, so the q = 0 profile is the inverse Laplace transform of
    // e^{-0.7 lambda^{1/3}} at t = 0.7. The digits below match the Airy
    // closed form of the one-sided 1/3-stable density,
    // c 3^{-1/3} t^{-4/3} Ai(c / (3t)^{1/3}) = 0.17283931449783087...,
    // to full double precision.
    const auto r = run_cli("hitting --N 3 --kappa -1 --sign down --a 0 --x 0.7 --t 0.7");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("1.7283931449783041e-01") != std::string::npos);
}

TEST_CASE("flag errors and domain errors exit with status 2") {
    CHECK(run_cli("kernel --N 4 --t 1").code == 2);          // missing grid flags
    CHECK(run_cli("roots --N 4 --kappa 1").code == 2);       // kappa is forced for even N
    CHECK(run_cli("roots --N 3").code == 2);                 // odd N needs kappa
    CHECK(run_cli("no-such-command").code == 2);
    CHECK(run_cli("extrema --N 2 --domain laplace --which max "
                  "--lambda 1 --x 0.2 --y -0.1 --z -0.5")
              .code == 2); // barrier below the start is not admissible
}

TEST_CASE("json format carries the same table") {
    const auto r = run_cli("roots --N 2 --format json");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.contains("columns"));
    REQUIRE(doc.contains("rows"));
    CHECK(doc["columns"].size() == 6);
    REQUIRE(doc["rows"].size() == 2);
    // Doubles travel as fixed-format strings for byte stability.
    const auto cell = doc["rows"][0][1].get<std::string>();
    CHECK(std::stod(cell) == doctest::Approx(-1.0));
}

TEST_CASE("--out writes the table to a file") {
    const std::string path = "cli_table.csv";
    const auto r = run_cli("roots --N 2 --out " + path);
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const auto body = slurp(path);
    CHECK(body.rfind("l,", 0) == 0);
    CHECK(lines_of(body).size() == 3);
    std::remove(path.c_str());
}

TEST_CASE("verify-all reports a clean battery") {
    const auto r = run_cli("verify-all --N 2 --seed 7");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines.size() > 10);
    CHECK(count_matches(lines, "FAIL") == 0);
    CHECK(count_matches(lines, ",pass") > 10);
}
