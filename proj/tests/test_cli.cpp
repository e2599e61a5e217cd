#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

// Runs the binary named by SCHURKIT_CLI (set by the test harness) with the
// given arguments; captures stdout, drops stderr, reports the exit status.
CliResult run_cli(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("SCHURKIT_CLI");
    REQUIRE(bin != nullptr);
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += "\"" + std::string(bin) + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("schur subcommand", "[cli]") {
    const std::string expected =
        "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3\n";

    CliResult flags = run_cli("schur --shape \"(2,1)\" --flags \"(2,3)\"");
    CHECK(flags.status == 0);
    CHECK(flags.out == expected);

    SECTION("--h 1 builds the same flag") {
        CliResult h = run_cli("schur --shape \"(2,1)\" --h 1");
        CHECK(h.status == 0);
        CHECK(h.out == expected);
    }

    SECTION("repeat invocations are byte-identical") {
        CliResult again = run_cli("schur --shape \"(2,1)\" --flags \"(2,3)\"");
        CHECK(again.status == flags.status);
        CHECK(again.out == flags.out);
    }

    SECTION("usage errors") {
        CHECK(run_cli("schur --shape \"(2,1)\"").status == 2);                      // neither
        CHECK(run_cli("schur --shape \"(2,1)\" --h 1 --flags \"(2,3)\"").status == 2); // both
        CHECK(run_cli("schur --shape \"(2,1\" --h 1").status == 2);                 // bad shape
        CHECK(run_cli("schur --shape \"(2,1)\" --h 0").status == 2);
        CHECK(run_cli("schur --shape \"(2,1)\" --flags \"(3)\"").status == 2);      // length mismatch
    }

    SECTION("json format") {
        CliResult js = run_cli("--format json schur --shape \"(2,1)\" --flags \"(2,3)\"");
        REQUIRE(js.status == 0);
        auto j = nlohmann::json::parse(js.out);
        CHECK(j.at("schema") == 1);
        CHECK(j.at("command") == "schur");
        CHECK(j.at("shape") == "(2,1)");
        CHECK(j.at("flag") == "(2,3)");
        CHECK(j.at("value_at_ones") == 5);
        CHECK(j.at("polynomial").at("text") ==
              "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3");
        CHECK(j.at("polynomial").at("terms").size() == 5);
    }
}

TEST_CASE("schubert subcommand", "[cli]") {
    CliResult p = run_cli("schubert --w \"(1,4,3,2)\"");
    CHECK(p.status == 0);
    CHECK(p.out == "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3\n");

    CliResult compact = run_cli("schubert --w \"(1432)\"");
    CHECK(compact.out == p.out);

    CHECK(run_cli("schubert --w \"(1,4,3,2)\" --at-ones").out == "5\n");
    CHECK(run_cli("schubert --w \"(1,4,3,2)\" --principal").out ==
          "x1^4 + x1^3 + 2*x1^2 + x1\n");
    CHECK(run_cli("schubert --w \"(1)\"").out == "1\n");

    SECTION("usage errors") {
        CHECK(run_cli("schubert --w \"(1,4,3,2)\" --at-ones --principal").status == 2);
        CHECK(run_cli("schubert --w \"(1,1,2)\"").status == 2);
        CHECK(run_cli("schubert").status == 2); // --w is required
    }

    SECTION("json format") {
        CliResult js = run_cli("--format json schubert --w \"(1432)\"");
        REQUIRE(js.status == 0);
        auto j = nlohmann::json::parse(js.out);
        CHECK(j.at("schema") == 1);
        CHECK(j.at("command") == "schubert");
        CHECK(j.at("w") == "(1,4,3,2)");
        CHECK(j.at("value_at_ones") == 5);
    }
}

TEST_CASE("verify subcommand single cases", "[cli]") {
    SECTION("jacobi-trudi") {
        CliResult r = run_cli("verify jacobi-trudi --shape \"(2,1)\" --flags \"(2,3)\"");
        CHECK(r.status == 0);
        CHECK(contains(r.out, "identity: jacobi-trudi"));
        CHECK(contains(r.out, "cases: 1"));
        CHECK(contains(r.out, "result: pass"));
    }

    SECTION("lgv") {
        CliResult r = run_cli("verify lgv --shape \"(2,1)\" --h 2");
        CHECK(r.status == 0);
        CHECK(contains(r.out, "result: pass"));
    }

    SECTION("flagged determinants with the printed matrix") {
        CliResult r = run_cli("verify flagged-det --shape \"(2,1)\" --h 2 --show-matrix");
        CHECK(r.status == 0);
        CHECK(contains(r.out, "identity: flagged-det"));
        CHECK(contains(r.out, "entry (1,1): s1[(2,1)](x2..) / x2^2*x3^2*x4"));
        CHECK(contains(r.out, "entry (1,2): s1[(2,2,1)](x1..) / x1^2*x2^2*x3^2*x4"));
        CHECK(contains(r.out, "entry (2,1): s1[(3,2)](x2..) / x2^3*x3^3*x4^2"));
        CHECK(contains(r.out, "entry (2,2): s1[(3,3,2)](x1..) / x1^3*x2^3*x3^3*x4^2"));
        CHECK(contains(r.out, "result: pass"));
    }

    SECTION("staircase variant") {
        CliResult r = run_cli("verify flagged-det-staircase --shape \"(2,1)\" --h 2");
        CHECK(r.status == 0);
        CHECK(contains(r.out, "identity: flagged-det-staircase"));
        CHECK(contains(r.out, "result: pass"));
    }

    SECTION("wachs") {
        CliResult r = run_cli("verify wachs --w \"(1,4,3,2)\"");
        CHECK(r.status == 0);
        CHECK(contains(r.out, "result: pass"));
        CHECK(run_cli("verify wachs --w \"(2,1,4,3)\"").status == 2); // not vexillary
    }

    SECTION("mainschubert") {
        CliResult r = run_cli("verify mainschubert --w \"(3,2,1)\" --h 2");
        CHECK(r.status == 0);
        CHECK(contains(r.out, "result: pass"));
        CHECK(run_cli("verify mainschubert --w \"(1,3,2)\" --h 1").status == 2); // not dominant
        CHECK(run_cli("verify mainschubert --w \"(3,2,1)\"").status == 2);       // missing --h
    }

    SECTION("woo and catalan-hankel") {
        CliResult woo = run_cli("verify woo --n 4");
        CHECK(woo.status == 0);
        CHECK(contains(woo.out, "cases: 1"));
        CliResult ch = run_cli("verify catalan-hankel --n 3 --h 2");
        CHECK(ch.status == 0);
        CHECK(contains(ch.out, "result: pass"));
    }

    SECTION("usage errors") {
        CHECK(run_cli("verify").status == 2);
        CHECK(run_cli("verify no-such-identity").status == 2);
        CHECK(run_cli("verify lgv --shape \"(2,1)\"").status == 2); // missing --h
        CHECK(run_cli("verify flagged-det --show-matrix").status == 2);
    }
}

TEST_CASE("verify subcommand sweeps", "[cli]") {
    SECTION("small bounded sweeps pass") {
        CliResult lgv = run_cli("verify lgv --max-shape \"(2,2)\" --max-h 2");
        CHECK(lgv.status == 0);
        CHECK(contains(lgv.out, "result: pass"));

        CliResult wachs = run_cli("verify wachs --n 4");
        CHECK(wachs.status == 0);
        // every vexillary member of S_4: all 24 less the unique 2143 pattern
        CHECK(contains(wachs.out, "cases: 23"));

        CliResult woo = run_cli("verify woo --max-n 5");
        CHECK(woo.status == 0);
        CHECK(contains(woo.out, "cases: 5"));
    }

    SECTION("json sweep report") {
        CliResult js = run_cli("--format json verify catalan-hankel --max-n 3 --max-h 2");
        REQUIRE(js.status == 0);
        auto j = nlohmann::json::parse(js.out);
        CHECK(j.at("schema") == 1);
        CHECK(j.at("identity") == "catalan-hankel");
        CHECK(j.at("cases") == 6);
        CHECK(j.at("result") == "pass");
        CHECK(j.contains("runtime_ms"));
    }

    SECTION("wall-clock budget") {
        CliResult r = run_cli("verify jacobi-trudi", "SCHURKIT_BUDGET_SECS=1");
        CHECK(r.status == 3);
    }
}

TEST_CASE("search subcommand", "[cli]") {
    CliResult r = run_cli("search --n 5");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "n: 5\n"
          "max_value: 14\n"
          "argmax: (1,2,5,4,3) (1,5,4,3,2) (2,1,5,4,3)\n"
          "all_argmax_richardson: true\n");

    SECTION("runtime goes to stderr, not stdout") {
        CHECK_FALSE(contains(r.out, "runtime_ms"));
    }

    SECTION("threads do not change the text output") {
        CliResult threaded = run_cli("--threads 4 search --n 5");
        CHECK(threaded.status == 0);
        CHECK(threaded.out == r.out);
    }

    SECTION("json format") {
        CliResult js = run_cli("--format json search --n 4");
        REQUIRE(js.status == 0);
        auto j = nlohmann::json::parse(js.out);
        CHECK(j.at("schema") == 1);
        CHECK(j.at("n") == 4);
        CHECK(j.at("max_value") == 5);
        REQUIRE(j.at("argmax").size() == 1);
        CHECK(j.at("argmax")[0] == "(1,4,3,2)");
        CHECK(j.at("all_argmax_richardson") == true);
        CHECK(j.contains("runtime_ms"));
    }

    SECTION("budget gate") {
        CHECK(run_cli("search --n 8").status == 3);
        CHECK(run_cli("search --n 9").status == 3);
    }

    SECTION("usage errors") {
        CHECK(run_cli("search").status == 2);
        CHECK(run_cli("search --n 0").status == 2);
        CHECK(run_cli("--threads 0 search --n 3").status == 2); // threads must be positive
    }
}

TEST_CASE("catalan subcommand", "[cli]") {
    CHECK(run_cli("catalan --n 3").out == "5\n");
    CHECK(run_cli("catalan --n 3 --h 2").out == "14\n");
    CHECK(run_cli("catalan --n 3 --q").out == "x1^3 + x1^2 + 2*x1 + 1\n");

    SECTION("json format") {
        CliResult js = run_cli("--format json catalan --n 3 --h 2");
        REQUIRE(js.status == 0);
        auto j = nlohmann::json::parse(js.out);
        CHECK(j.at("schema") == 1);
        CHECK(j.at("hankel") == 14);
    }

    SECTION("usage errors") {
        CHECK(run_cli("catalan --n 3 --h 2 --q").status == 2);
        CHECK(run_cli("catalan --n 0").status == 2);
        CHECK(run_cli("catalan").status == 2);
    }
}

TEST_CASE("top-level interface", "[cli]") {
    CHECK(run_cli("").status == 2);             // a subcommand is required
    CHECK(run_cli("frobnicate").status == 2);   // unknown subcommand
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("schur --help").status == 0);
    CHECK(run_cli("--format yaml catalan --n 1").status == 2);
}
