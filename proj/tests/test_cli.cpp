#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kBin = EPH_CLI_PATH;

struct RunResult {
    int exit_code = -1;
    std::string path;
};

fs::path temp_dir() {
    const fs::path d = fs::temp_directory_path() / "eph-cli-test";
    fs::create_directories(d);
    return d;
}

int run(const std::string& args) {
    const std::string cmd = kBin + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

size_t line_count(const std::string& s) {
    size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("no-such-command") == 2);
    CHECK(run("orbits --subgroup Q") == 2);
    CHECK(run("interference --mode sideways --out /dev/null") == 2);
}

TEST_CASE("orbit traces: schema, determinism, empty range") {
    const fs::path out = temp_dir() / "orb.csv";
    CHECK(run("orbits --subgroup K --kind elliptic --u0 0 --v0 0.5 --out " + out.string()) == 0);
    const std::string first = slurp(out);
    CHECK(first.rfind("t,u,v,kind,subgroup\n", 0) == 0);
    CHECK(line_count(first) == 82); // header + 81 samples
    CHECK(fs::exists(out.string() + ".derived.csv"));

    // byte-identical on re-run
    CHECK(run("orbits --subgroup K --kind elliptic --u0 0 --v0 0.5 --out " + out.string()) == 0);
    CHECK(slurp(out) == first);

    // empty range: header-only file, exit 0
    const fs::path empty = temp_dir() / "empty.csv";
    CHECK(run("orbits --subgroup A --n 0 --out " + empty.string()) == 0);
    CHECK(line_count(slurp(empty)) == 1);
}

TEST_CASE("orbit invariants from the emitted file") {
    const fs::path out = temp_dir() / "orbk.csv";
    REQUIRE(run("orbits --subgroup K --kind parabolic --u0 0 --v0 0.4 --out " + out.string()) == 0);
    std::ifstream is(out);
    std::string line;
    std::getline(is, line); // header
    double inv0 = 0.0;
    bool have0 = false;
    while (std::getline(is, line)) {
        std::stringstream ss(line);
        std::string t, u, v;
        std::getline(ss, t, ',');
        std::getline(ss, u, ',');
        std::getline(ss, v, ',');
        const double uu = std::stod(u), vv = std::stod(v);
        const double inv = (uu * uu + 1.0) / vv; // parabolic K-orbit invariant
        if (!have0) {
            inv0 = inv;
            have0 = true;
        }
        CHECK(std::abs(inv - inv0) < 1e-8);
    }
    CHECK(have0);
}

TEST_CASE("rotations emit wheel data") {
    const fs::path out = temp_dir() / "rot.csv";
    CHECK(run("rotations --kind hyperbolic --n 33 --out " + out.string()) == 0);
    const std::string data = slurp(out);
    CHECK(data.rfind("t,u,v,kind,r0\n", 0) == 0);
    CHECK(line_count(data) == 1 + 3 * 33);
}

TEST_CASE("dynamics time series") {
    const fs::path out = temp_dir() / "dyn.csv";
    // quarter period on a coarse grid to stay fast
    CHECK(run("dynamics --H harmonic --t 1.5708 --steps 220 --grid 96 --out " + out.string()) ==
          0);
    std::ifstream is(out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "t,L2_mass,rel_err_vs_analytic");
    double last_err = -1.0;
    while (std::getline(is, line)) {
        const auto p1 = line.find(','), p2 = line.find(',', p1 + 1);
        last_err = std::stod(line.substr(p2 + 1));
    }
    CHECK(last_err >= 0.0);
    CHECK(last_err < 1e-3);
}

TEST_CASE("interference curves through the cli") {
    const fs::path outq = temp_dir() / "intq.csv";
    CHECK(run("interference --mode quantum --family gaussian --b 1 --n 41 --out " +
              outq.string()) == 0);
    const std::string dq = slurp(outq);
    CHECK(dq.rfind("c,sum,interference,mode,state_family\n", 0) == 0);
    CHECK(line_count(dq) == 42);
    CHECK(dq.find("quantum,gaussian") != std::string::npos);

    const fs::path outc = temp_dir() / "intc.csv";
    CHECK(run("interference --mode classical --family bump --n 21 --out " + outc.string()) == 0);
    // classical bump slits: sum equals interference on every row
    std::ifstream is(outc);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        std::stringstream ss(line);
        std::string c, sum, inter;
        std::getline(ss, c, ',');
        std::getline(ss, sum, ',');
        std::getline(ss, inter, ',');
        CHECK(sum == inter);
    }
}

TEST_CASE("wavelet grids and report") {
    const fs::path out = temp_dir() / "wav.csv";
    CHECK(run("wavelet --transform sl2 --grid 24 --out " + out.string()) == 0);
    CHECK(slurp(out).rfind("x,y,re,im\n", 0) == 0);
    const std::string rep = slurp(out.string() + ".report.json");
    CHECK(rep.find("hardy_cr_residual") != std::string::npos);
}

TEST_CASE("verify subset and negative control") {
    const fs::path out = temp_dir() / "ver.json";
    CHECK(run("verify --only ladder --out " + out.string()) == 0);
    const std::string rep = slurp(out);
    CHECK(rep.find("ladder.jacobi") != std::string::npos);
    CHECK(rep.find("reps.commutators") == std::string::npos);
    CHECK(rep.find("\"pass\": true") != std::string::npos);
    // the solver's published solution sets ride along as JSON
    CHECK(rep.find("ladder_solutions") != std::string::npos);
    CHECK(rep.find("parametric") != std::string::npos);

    // injected sign error must surface as a failure
    CHECK(run("verify --only reps.commutators --inject-sign-error --out " + out.string()) == 1);
    CHECK(slurp(out).find("\"pass\": false") != std::string::npos);
}
