#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sumlab/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int run(const std::vector<std::string>& args, std::string* out = nullptr) {
    std::vector<const char*> argv{"sumlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    // capture stdout via a temp file, restoring the original descriptor after
    fs::path cap = fs::temp_directory_path() / "sumlab_cli_capture.txt";
    fflush(stdout);
    int saved_fd = dup(fileno(stdout));
    FILE* redirected = freopen(cap.string().c_str(), "w", stdout);
    (void)redirected;
    int rc = sumlab::run_cli(static_cast<int>(argv.size()), argv.data());
    fflush(stdout);
    dup2(saved_fd, fileno(stdout));
    close(saved_fd);
    clearerr(stdout);
    if (out) {
        std::ifstream f(cap);
        std::stringstream ss;
        ss << f.rdbuf();
        *out = ss.str();
    }
    return rc;
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream f(p);
    f << content;
    return p;
}

}  // namespace

TEST_CASE("exit codes: usage=2, domain=1, ok=0") {
    CHECK(run({"no-such-subcommand"}) == 2);
    CHECK(run({}) == 2);
    CHECK(run({"longest-ap", "--in", "/nonexistent/file.txt"}) == 1);
    auto set = write_temp("cli_set.txt", "1\n2\n3\n4\n");
    CHECK(run({"longest-ap", "--in", set.string()}) == 0);
}

TEST_CASE("sumset subcommand round trip") {
    auto set = write_temp("cli_a.txt", "# A\n1\n2\n3\n");
    auto out = fs::temp_directory_path() / "cli_out.txt";
    CHECK(run({"sumset", "--op", "iter", "--l", "3", "--in", set.string(), "--out",
               out.string()}) == 0);
    std::ifstream f(out);
    std::vector<int64_t> got;
    int64_t v;
    while (f >> v) got.push_back(v);
    CHECK(got == std::vector<int64_t>{3, 4, 5, 6, 7, 8, 9});

    std::string text;
    CHECK(run({"sumset", "--op", "distinct", "--l", "2", "--in", set.string()}, &text) == 0);
    CHECK(text == "3\n4\n5\n");
}

TEST_CASE("longest-ap and find-gap emit JSON certificates") {
    auto set = write_temp("cli_ap.txt", "0\n5\n10\n15\n20\n21\n");
    std::string text;
    CHECK(run({"longest-ap", "--in", set.string()}, &text) == 0);
    json j = json::parse(text);
    CHECK(j["len"] == 5);
    CHECK(j["diff"] == 5);
    CHECK(j["start"] == 0);

    std::string gap_text;
    CHECK(run({"find-gap", "--in", set.string(), "--rank", "2", "--budget", "500"}, &gap_text) ==
          0);
    json g = json::parse(gap_text);
    CHECK(g["volume"] >= 4);
}

TEST_CASE("construct emits params and a verification report") {
    std::string text;
    CHECK(run({"construct", "--kind", "planar", "--n", "100000", "--m", "8", "--verify"},
              &text) == 0);
    json j = json::parse(text);
    CHECK(j["card"] == 64);
    CHECK(j["params"]["kind"] == "planar");
    CHECK(j["report"]["pass"] == true);
    // bad kind is a usage-level domain error
    CHECK(run({"construct", "--kind", "weird", "--n", "100", "--m", "4"}) == 1);
}

TEST_CASE("zsf and nsmall emit exact integers as strings") {
    std::string text;
    CHECK(run({"zsf", "--p", "5", "--count"}, &text) == 0);
    json j = json::parse(text);
    CHECK(j["count"] == "9");
    CHECK(run({"nsmall", "--n", "6"}, &text) == 0);
    json n = json::parse(text);
    CHECK(n["count"] == "10");
}

TEST_CASE("buckets and greedy-bigsum run end to end") {
    std::ostringstream seq;
    for (int i = 1; i <= 200; ++i) seq << i << "\n";
    auto set = write_temp("cli_range.txt", seq.str());
    std::string text;
    CHECK(run({"buckets", "--scheme", "harmonic", "--in", set.string()}, &text) == 0);
    json j = json::parse(text);
    CHECK(j["scheme"] == "harmonic");
    CHECK(j["buckets"].size() > 0);
    CHECK(run({"greedy-bigsum", "--in", set.string()}, &text) == 0);
    json g = json::parse(text);
    CHECK(g["size"] >= 200);
}

TEST_CASE("complete-analyze reports stages") {
    std::ostringstream seq;
    for (int v = 1; v <= 30; ++v)
        for (int c = 0; c < 4; ++c) seq << v << "\n";
    auto f = write_temp("cli_seq.txt", seq.str());
    std::string text;
    CHECK(run({"complete-analyze", "--in", f.string(), "--n", "20", "--depth", "2"}, &text) == 0);
    json j = json::parse(text);
    CHECK(j["stages"].size() == 3);
    CHECK(j["growth_ok"] == true);
}

TEST_CASE("threshold-sweep writes CSV and JSON mirrors") {
    auto cfg = write_temp("cli_sweep.cfg",
                          "n=20000 seed=5 timing=none max_diff=16\n"
                          "l=4\ncard=50\ngenerator=interval\n");
    auto csv = fs::temp_directory_path() / "cli_sweep.csv";
    auto jsn = fs::temp_directory_path() / "cli_sweep.json";
    CHECK(run({"threshold-sweep", "--config", cfg.string(), "--out", csv.string(), "--json",
               jsn.string()}) == 0);
    std::ifstream f(csv);
    std::string line;
    std::getline(f, line);
    CHECK(line.rfind("# sumlab-sweep-v1", 0) == 0);
    std::getline(f, line);
    CHECK(line == "n,l,m,card,generator,ap_len,gap_rank,gap_vol,ms");
    std::getline(f, line);
    CHECK(line == "20000,4,50,50,interval,197,1,196,0");
}
