#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(TRIGON_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    const int raw = pclose(p);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("exit codes") {
        CHECK(run("eval --geometry e --sides 3 4 5").status == 0);
        CHECK(run("eval --geometry e --sides 1 1 5").status == 65);
        CHECK(run("eval --geometry s --sides 2.5 2.5 2.5").status == 65);
        CHECK(run("eval --geometry q --sides 3 4 5").status == 64);
        CHECK(run("eval --sides 3 4 5").status == 64);
        CHECK(run("chain --id euc_orig --geometry h --sides 1 1 1").status == 64);
        CHECK(run("chain --id hyp_orig_ratio_ext --sides 2 2 0.4").status == 1);
        CHECK(run("chain --id gen --geometry h --sides 2 2 0.4").status == 0);
        CHECK(run("chain --id nope --sides 1 1 1").status == 64);
        CHECK(run("sweep --chain gen --grid 1").status == 64);
        CHECK(run("certify --chain gen --gap 1 2 --box 1 1.2").status == 0);
        CHECK(run("certify --chain hyp_orig_ratio_ext --gap 0 3 --a 1.9 2.1 --b 1.9 2.1 --c 0.35 0.45").status == 1);
        CHECK(run("certify --chain gen --gap 1 2 --box 0.5 2.5 --max-boxes 20").status == 2);
        CHECK(run("repro").status == 1);  // two reference values do not reproduce
    }

    TEST_CASE("json output is one parseable document per line") {
        for (const char* args : {"eval --geometry h --sides 2 2 0.4", "chain --id euc_sym --sides 3 4 5",
                                 "oracle --geometry s --sides 0.8 1.1 1.3", "repro",
                                 "search --chain gen --gap 1 2 --box 0.5 2 --grid-n 10",
                                 "compare --chain gen --gap 0 2 --box 0.5 2 --grid-n 10"}) {
            const Run r = run(std::string("--format json ") + args);
            CAPTURE(args);
            REQUIRE_FALSE(r.out.empty());
            CHECK(r.out.back() == '\n');
            CHECK(r.out.find('\n') == r.out.size() - 1);
            CHECK(nlohmann::json::accept(r.out));
        }
        const auto e = nlohmann::json::parse(run("--format json eval --geometry e --sides 3 4 5").out);
        CHECK(e["euler_ratio"].get<double>() == doctest::Approx(2.5));
    }

    TEST_CASE("sweep csv") {
        const Run r = run("sweep --chain euc_orig --grid 4 --fix c=1");
        CHECK(r.status == 0);
        const std::string header = "geometry,a,b,c,term_0,term_1,term_2,term_3,term_4,gap_0,gap_1,gap_2,gap_3,verdict";
        REQUIRE(r.out.size() > header.size());
        CHECK(r.out.substr(0, header.size() + 1) == header + "\n");
        std::size_t lines = 0;
        for (char ch : r.out) lines += ch == '\n';
        CHECK(lines > 1);
        CHECK(r.out.find("violated") == std::string::npos);
        CHECK(run("sweep --chain sph_sym --fix c=10").out == "geometry,a,b,c,term_0,term_1,term_2,term_3,term_4,gap_0,gap_1,gap_2,gap_3,verdict\n");
    }
}
