#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::filesystem::path scratch_file(const std::string& stem) {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           ("lexcount_cli_" + std::to_string(getpid()) + "_" + stem + "_" +
            std::to_string(counter++));
}

/* Runs the tool through the shell, stderr dropped, and captures stdout. */
RunResult run(const std::string& args, const std::string& stdin_data = "",
              const std::string& env_prefix = "") {
    std::string cmd = env_prefix + LEXCOUNT_CLI_PATH " " + args + " 2>/dev/null";
    std::filesystem::path in;
    if (!stdin_data.empty()) {
        in = scratch_file("stdin");
        std::ofstream(in) << stdin_data;
        cmd += " < " + in.string();
    } else {
        cmd += " < /dev/null";
    }

    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    r.exit_code = WEXITSTATUS(status);
    if (!in.empty())
        std::filesystem::remove(in);
    return r;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty())
        lines.push_back(cur);
    return lines;
}

} // namespace

TEST_CASE("count renders the exact value first in text form") {
    auto r = run("count --m 2 --N 2");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "20");
    CHECK(lines[1] == "# method product");
}

TEST_CASE("count json carries the decimal string and optional timing") {
    auto r = run("count --m 2 --N 3 --format json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "count");
    CHECK(j["count"] == "50");
    CHECK(j.contains("wall_ms"));

    r = run("count --m 2 --N 3 --format json --no-timing");
    j = json::parse(r.out);
    CHECK_FALSE(j.contains("wall_ms"));
    CHECK(j["count"] == "50");
}

TEST_CASE("count csv has a header and one data row") {
    auto r = run("count --m 3 --N 1 --method partition-sum --format csv --no-timing");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "m,N,method,count");
    CHECK(lines[1] == "3,1,partition-sum,20");
}

TEST_CASE("every method answers the same through the tool") {
    for (const char* method :
         {"product", "partition-sum", "brute-arrays", "brute-matrices"}) {
        auto r = run(std::string("count --m 2 --N 2 --method ") + method);
        CHECK(r.exit_code == 0);
        CHECK(lines_of(r.out)[0] == "20");
    }
}

TEST_CASE("guard limits refuse with exit 3 and yield under --force") {
    auto r = run("count --m 1 --N 13 --method brute-arrays");
    CHECK(r.exit_code == 3);
    CHECK(r.out.empty());

    r = run("count --m 1 --N 13 --method brute-arrays --force");
    CHECK(r.exit_code == 0);
    CHECK(lines_of(r.out)[0] == "14");

    r = run("lpp count --m 1 --N 5");
    CHECK(r.exit_code == 3);
    r = run("lpp count --m 1 --N 5 --force");
    CHECK(r.exit_code == 0);
    CHECK(lines_of(r.out)[0] == "6");
}

TEST_CASE("usage problems exit 2") {
    CHECK(run("count --m 2").exit_code == 2);
    CHECK(run("count --m 2 --N 2 --method sorcery").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("verify --cells 2x2").exit_code == 2);
    CHECK(run("verify --cells 2:2 --max-m 1 --max-N 1").exit_code == 2);
    CHECK(run("verify --max-m 2").exit_code == 2);
    CHECK(run("rsk --format csv", "{}").exit_code == 2);
    CHECK(run("lpp time --matrix - --format csv", "{}").exit_code == 2);
    CHECK(run("rsk", "this is not json").exit_code == 2);
    CHECK(run("zeta f-estimate --m 1 --N-list 0").exit_code == 2);
    CHECK(run("count --m 1 --N 1", "", "LEXCOUNT_THREADS=abc ").exit_code == 2);
}

TEST_CASE("verify reports per-cell methods in canonical order") {
    auto r = run("verify --cells 2:2 --methods partition-sum,product "
                 "--format json --no-timing");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["cells"].size() == 1);
    const json& cell = j["cells"][0];
    CHECK(cell["m"] == 2);
    CHECK(cell["N"] == 2);
    REQUIRE(cell["results"].size() == 2);
    CHECK(cell["results"][0]["method"] == "product");
    CHECK(cell["results"][1]["method"] == "partition-sum");
    CHECK(cell["results"][0]["count"] == "20");
    CHECK(cell["agree"] == true);
    CHECK(j["all_agree"] == true);
}

TEST_CASE("verify accepts a rectangular grid and an empty one") {
    auto r = run("verify --max-m 2 --max-N 2 --methods product,partition-sum");
    CHECK(r.exit_code == 0);
    CHECK(lines_of(r.out).back() == "all cells agree");

    r = run("verify");
    CHECK(r.exit_code == 0);
}

TEST_CASE("the timing fields are the only run-to-run variation in verify") {
    const std::string args =
        "verify --cells 1:2,2:1,2:2 --format json --no-timing";
    auto a = run(args, "", "LEXCOUNT_THREADS=1 ");
    auto b = run(args, "", "LEXCOUNT_THREADS=8 ");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("enumerate emits the arrays, optionally one size") {
    auto r = run("enumerate --m 2 --N 2");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    CHECK(lines.size() == 20);
    CHECK(lines[0] == ";");

    r = run("enumerate --m 2 --N 2 --size 4");
    CHECK(lines_of(r.out) == std::vector<std::string>{"aabb;bbaa"});

    r = run("enumerate --m 2 --N 2 --format json");
    json j = json::parse(r.out);
    CHECK(j["count"] == "20");
    CHECK(j["arrays"].size() == 20);
    CHECK(j["arrays"][19]["u"] == json::array({1, 1, 2, 2}));
    CHECK(j["arrays"][19]["v"] == json::array({2, 2, 1, 1}));
}

TEST_CASE("rsk maps a biword to a pair and back") {
    auto fwd = run("rsk --format json", R"({"m":2,"u":[1,2],"v":[2,1]})");
    CHECK(fwd.exit_code == 0);
    json pair = json::parse(fwd.out);
    CHECK(pair["p"]["shape"] == json::array({1, 1}));
    CHECK(pair["q"]["shape"] == json::array({1, 1}));

    auto back = run("rsk --inverse --format json", fwd.out);
    CHECK(back.exit_code == 0);
    json biword = json::parse(back.out);
    CHECK(biword["u"] == json::array({1, 2}));
    CHECK(biword["v"] == json::array({2, 1}));

    auto text = run("rsk", R"({"m":2,"u":[1,2],"v":[2,1]})");
    auto lines = lines_of(text.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "P:");
    CHECK(lines[1] == "  a");
    CHECK(lines[2] == "  b");
}

TEST_CASE("lpp time reports the worked example with its chain") {
    const std::string matrix = R"({"m":3,"entries":[[1,2,0],[3,0,0],[1,1,2]]})";
    auto r = run("lpp time --matrix -", matrix);
    CHECK(r.exit_code == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{"8"});

    r = run("lpp time --matrix - --certificate", matrix);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "8");
    CHECK(lines[1] == "(1,1) -> (2,1) -> (3,1) -> (3,2) -> (3,3)");

    r = run("lpp time --matrix - --certificate --format json", matrix);
    json j = json::parse(r.out);
    CHECK(j["time"] == 8);
    CHECK(j["chain"][0] == json::array({1, 1}));
    CHECK(j["chain"][4] == json::array({3, 3}));

    auto file = scratch_file("matrix.json");
    std::ofstream(file) << matrix;
    r = run("lpp time --matrix " + file.string());
    CHECK(lines_of(r.out)[0] == "8");
    std::filesystem::remove(file);
}

TEST_CASE("--output writes the same bytes the run would print") {
    auto direct = run("count --m 2 --N 2 --format json --no-timing");
    auto file = scratch_file("out.json");
    auto redirected =
        run("count --m 2 --N 2 --format json --no-timing --output " + file.string());
    CHECK(redirected.exit_code == 0);
    CHECK(redirected.out.empty());
    std::ifstream in(file);
    std::string written((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(written == direct.out);
    std::filesystem::remove(file);
}

TEST_CASE("zeta subcommands answer through the tool") {
    auto r = run("zeta a-factor --m 1");
    CHECK(r.exit_code == 0);
    CHECK(lines_of(r.out)[0].substr(0, 6) == "0.9999");

    r = run("zeta f-estimate --m 1 --N-list 10");
    CHECK(r.exit_code == 0);
    CHECK(lines_of(r.out)[0] == "n=10 11/10 1.10000000000");

    r = run("zeta ratio --m 2 --N-list 2,4 --format json");
    json j = json::parse(r.out);
    CHECK(j["conditional_on_keating_snaith"] == true);
    CHECK(j["entries"].size() == 2);
}
