#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

const std::string kCli = REJSCHED_CLI_PATH;

fs::path work_dir() {
    fs::path dir = fs::temp_directory_path() / "rejsched_cli_test";
    fs::create_directories(dir);
    return dir;
}

int run_cmd(const std::string& args) {
    int rc = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("gen, solve and check round trip with exit code 0") {
    fs::path dir = work_dir();
    fs::path inst = dir / "inst.json";
    fs::path sol = dir / "sol.json";

    REQUIRE(run_cmd("gen --n 6 --m 2 --seed 5 --out " + inst.string()) == 0);
    for (std::string algo : {"approx1", "eptas", "exact"}) {
        CHECK(run_cmd("solve --algo " + algo + " --instance " + inst.string() + " --out " +
                      sol.string()) == 0);
        CHECK(run_cmd("check --instance " + inst.string() + " --solution " + sol.string()) == 0);
    }
}

TEST_CASE("check flags infeasible and malformed solutions") {
    fs::path dir = work_dir();
    fs::path inst = dir / "small.json";
    std::ofstream(inst) << R"({"m":1,"budget":"3","jobs":[{"p":"4","e":"1"}]})";

    fs::path over = dir / "over.json";
    std::ofstream(over) << R"({"decisions":[0]})";
    CHECK(run_cmd("check --instance " + inst.string() + " --solution " + over.string()) == 2);

    fs::path bad = dir / "bad.json";
    std::ofstream(bad) << R"({"decisions":[7]})";
    CHECK(run_cmd("check --instance " + inst.string() + " --solution " + bad.string()) == 2);

    fs::path shortsol = dir / "short.json";
    std::ofstream(shortsol) << R"({"decisions":[]})";
    CHECK(run_cmd("check --instance " + inst.string() + " --solution " + shortsol.string()) == 2);
}

TEST_CASE("parse errors exit with code 4") {
    fs::path dir = work_dir();
    fs::path junk = dir / "junk.json";
    std::ofstream(junk) << "{nope";
    CHECK(run_cmd("solve --algo approx1 --instance " + junk.string()) == 4);
}

TEST_CASE("bench CSV is byte-identical across runs") {
    fs::path dir = work_dir();
    fs::path a = dir / "a.csv", b = dir / "b.csv";
    std::string args = "bench --count 6 --n 6 --m 2 --seed 9 --eps 1/2 --out ";
    REQUIRE(run_cmd(args + a.string()) == 0);
    REQUIRE(run_cmd(args + b.string()) == 0);
    std::string ca = slurp(a);
    CHECK(ca == slurp(b));
    CHECK(ca.rfind("id,n,m,seed,eps,opt,approx1,eptas,ratio1,ratio2,"
                   "ms_exact,ms_approx1,ms_eptas,candidates,status\n",
                   0) == 0);
    CHECK(ca.find("summary") != std::string::npos);
}

TEST_CASE("lp solve debug subcommand") {
    fs::path dir = work_dir();
    fs::path lp = dir / "prog.lp";
    std::ofstream(lp) << "1\n1\n1 >= 5\n";
    CHECK(run_cmd("lp solve --file " + lp.string()) == 0);
}
