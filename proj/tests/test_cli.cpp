#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

// GRADECONE_CLI_PATH and GRADECONE_ROOT come from the build: the tool binary
// under test and the source tree holding instances/ and tests/golden/.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(bool(in), "cannot read " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string root() { return GRADECONE_ROOT; }

std::string golden(const std::string& name) { return slurp(root() + "/tests/golden/" + name); }

RunResult run(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    std::string tmp = "cli_out_" + std::to_string(counter++) + ".tmp";
    std::string cmd = (env.empty() ? "" : env + " ") + std::string(GRADECONE_CLI_PATH) + " " +
                      args + " > " + tmp + " 2> /dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(tmp);
    std::remove(tmp.c_str());
    return r;
}

std::string inst(const std::string& name) { return root() + "/instances/" + name + ".json"; }

} // namespace

TEST_CASE("betti output matches the frozen tables") {
    for (const char* name :
         {"staircase-pure", "origin", "staircase-quasipure", "staircase-gapped"}) {
        auto r = run("betti " + inst(name));
        CHECK(r.exit_code == 0);
        CHECK(r.out == golden(std::string("betti-") + name + ".txt"));
    }
}

TEST_CASE("hilbert json of the cusp") {
    auto r = run("hilbert " + inst("cusp") + " --cutoff 6 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("hilbert-cusp.json"));
}

TEST_CASE("checker reports and exit codes") {
    SUBCASE("quasi-pure pass") {
        auto r = run("check " + inst("staircase-quasipure") + " --theorem cor-3.4 --seed 5 --json");
        CHECK(r.exit_code == 0);
        CHECK(r.out == golden("check-quasipure-cor34.json"));
    }

    SUBCASE("intersection bounds pass") {
        auto r = run("check " + inst("ci22") + " --theorem thm-5.7 --seed 5 --json");
        CHECK(r.exit_code == 0);
        CHECK(r.out == golden("check-ci22-thm57.json"));
    }

    SUBCASE("windowed vanishing pass") {
        auto r = run("check " + inst("cusp") + " --theorem thm-3.1 --cutoff 15 --json");
        CHECK(r.exit_code == 0);
        CHECK(r.out == golden("check-cusp-thm31.json"));
    }

    SUBCASE("unverifiable hypothesis exits 2") {
        auto r = run("check " + inst("staircase-pure") + " --theorem thm-3.3 --seed 5");
        CHECK(r.exit_code == 2);
    }

    SUBCASE("vacuous verdict exits 0") {
        auto r = run("check " + inst("staircase-gapped") + " --theorem cor-3.4 --seed 5");
        CHECK(r.exit_code == 0);
    }
}

TEST_CASE("loewy and depth subcommands") {
    auto r = run("loewy " + inst("staircase-gapped") + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("loewy-gapped.json"));

    auto bad = run("loewy " + inst("cusp"));
    CHECK(bad.exit_code == 2);

    auto d = run("depth " + inst("cusp") + " --json");
    CHECK(d.exit_code == 0);
    CHECK(d.out == golden("depth-cusp.json"));
}

TEST_CASE("corpus listing replays") {
    auto r = run("corpus --kind monomial --count 3 --seed 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("corpus-monomial.txt"));
}

TEST_CASE("checked corpus is deterministic across reruns and worker counts") {
    const std::string args =
        "corpus --kind perturbed-homogeneous --nvars 3 --count 12 --seed 42 --check thm-3.3";
    auto one = run(args);
    CHECK(one.exit_code == 0);
    CHECK(one.out == golden("corpus-curve-thm33.txt"));

    auto again = run(args);
    CHECK(again.out == one.out);

    auto fanned = run(args + " --workers 4");
    CHECK(fanned.exit_code == 0);
    CHECK(fanned.out == one.out);
}

TEST_CASE("usage and input errors exit 1") {
    CHECK(run("betti /no/such/file.json").exit_code == 1);
    CHECK(run("check " + inst("cusp") + " --theorem thm-9.9").exit_code == 1);
    CHECK(run("corpus --kind mystery").exit_code == 1);
    CHECK(run("gb " + inst("cusp") + " --field fp:4").exit_code == 1);
}

TEST_CASE("seed precedence: flag beats environment beats instance") {
    auto from_inst = run("superficial " + inst("cusp") + " --json");
    auto from_env = run("superficial " + inst("cusp") + " --json", "GRADECONE_SEED=99");
    auto from_flag =
        run("superficial " + inst("cusp") + " --seed 9 --json", "GRADECONE_SEED=99");
    CHECK(from_inst.out.find("\"seed\": 42") != std::string::npos);
    CHECK(from_env.out.find("\"seed\": 99") != std::string::npos);
    CHECK(from_flag.out.find("\"seed\": 9") != std::string::npos);
}
