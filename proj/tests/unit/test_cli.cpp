#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string bin() {
    const char* b = std::getenv("JENSENLAB_BIN");
    REQUIRE(b != nullptr);
    return b;
}

std::string golden_dir() {
    const char* g = std::getenv("JENSENLAB_GOLDEN");
    REQUIRE(g != nullptr);
    return g;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = bin() + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("verify bounds matches the golden file byte for byte") {
    RunResult r = run("verify bounds --T 3e12");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(fs::path(golden_dir()) / "verify_bounds_T3e12.csv"));
}

TEST_CASE("scan grid on the exp jet: golden csv and json") {
    RunResult csv = run("scan grid --jet exp --d 1..4 --n 0..2");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == slurp(fs::path(golden_dir()) / "scan_grid_exp.csv"));

    RunResult js = run("scan grid --jet exp --d 1..4 --n 0..2 --format json");
    CHECK(js.exit_code == 0);
    CHECK(js.out == slurp(fs::path(golden_dir()) / "scan_grid_exp.json"));
}

TEST_CASE("deterministic outputs across reruns") {
    std::string args = "verify t3 --delta 0.5 --trials 20 --seed 99";
    RunResult a = run(args), b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    std::string xc = "xi-coeffs --order 6 --prec 96 --method factors";
    RunResult c = run(xc), d = run(xc);
    CHECK(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("cache reruns are bit-identical and hit the cache") {
    fs::path dir = fs::temp_directory_path() / "jensenlab_cli_cache";
    fs::remove_all(dir);
    std::string args =
        "xi-coeffs --order 6 --prec 96 --method factors --cache-dir " +
        dir.string();
    RunResult a = run(args);
    CHECK(a.exit_code == 0);
    bool have_cache = false;
    for (auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".jlc") have_cache = true;
    CHECK(have_cache);
    RunResult b = run(args);
    CHECK(b.out == a.out);
    fs::remove_all(dir);
}

TEST_CASE("exit codes") {
    CHECK(run("verify t3 --delta 0.5 --trials 5").exit_code == 0);
    CHECK(run("verify nonsense").exit_code == 3);
    CHECK(run("scan grid --jet bogus").exit_code == 3);
    CHECK(run("verify t4 --T 0.25 --trials 2").exit_code == 3);  // T < 1/2
    CHECK(run("xi-coeffs --prec 32").exit_code == 3);
    CHECK(run("").exit_code == 3);  // missing subcommand
    CHECK(run("verify bounds --T 0.75 --format json").exit_code == 0);
}

TEST_CASE("config file precedence: flags beat config") {
    fs::path cfgp = fs::temp_directory_path() / "jensenlab_test_config.ini";
    {
        std::ofstream f(cfgp, std::ios::trunc);
        f << "trials=7\nseed=5\ndelta=0.5\n";
    }
    RunResult a = run("verify t3 --config " + cfgp.string());
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("trials,7") != std::string::npos);
    CHECK(a.out.find("seed=5") != std::string::npos);
    RunResult b = run("verify t3 --config " + cfgp.string() + " --trials 9");
    CHECK(b.out.find("trials,9") != std::string::npos);
    fs::remove(cfgp);
}

TEST_CASE("JENSENLAB_CACHE environment variable selects the cache dir") {
    fs::path dir = fs::temp_directory_path() / "jensenlab_env_cache";
    fs::remove_all(dir);
    std::string cmd = "JENSENLAB_CACHE=" + dir.string() + " " + bin() +
                      " xi-coeffs --order 4 --prec 96 --method factors" +
                      " > /dev/null 2>&1";
    REQUIRE(std::system(cmd.c_str()) == 0);
    bool have_cache = false;
    for (auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".jlc") have_cache = true;
    CHECK(have_cache);
    fs::remove_all(dir);
}

TEST_CASE("output file writing") {
    fs::path outp = fs::temp_directory_path() / "jensenlab_out.csv";
    fs::remove(outp);
    RunResult r = run("verify bounds --T 1 --out " + outp.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::string content = slurp(outp);
    CHECK(content.find("d_max_xi_1_plus_4T2,5") != std::string::npos);
    fs::remove(outp);
}
