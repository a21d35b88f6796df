#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "doctest.h"

#include "frieze/cli.hpp"
#include "frieze/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "frieze");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = frieze::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::string shell(const std::string& command)
{
    std::string result;
    FILE* pipe = ::popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) result.append(buffer, got);
    CHECK(::pclose(pipe) == 0);
    return result;
}

} // namespace

TEST_CASE("build --render prints the staggered array")
{
    const auto r = invoke({"build", "--family", "A", "--rank", "5", "--seed", "2,5,13,8,3", "--render"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("          13     5     1     2    13     5\n") != std::string::npos);
}

TEST_CASE("build text output")
{
    const auto r = invoke({"build", "--family", "A", "--rank", "5", "--seed", "2,5,13,8,3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# type A5, period 4, max 13\n", 0) == 0);
    CHECK(r.out.find("2,5,13,8,3") != std::string::npos);
}

TEST_CASE("verify --json")
{
    const auto r = invoke({"verify", "--family", "A", "--max-rank", "3", "--json"});
    REQUIRE(r.code == 0);
    const auto j = frieze::Json::parse(r.out);
    REQUIRE(j.size() == 3);
    const long long maxima[] = {2, 3, 5};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(j[i]["max_entry"] == maxima[i]);
        CHECK(j[i]["pass"] == true);
        CHECK_FALSE(j[i].contains("elapsed_ms"));
    }
}

TEST_CASE("check-diagonal")
{
    auto r = invoke({"check-diagonal", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "false\n");
    r = invoke({"check-diagonal", "2,5,13,8,3"});
    CHECK(r.out == "true\n");
    r = invoke({"check-diagonal", "2,5,13,8,3", "--json"});
    const auto j = frieze::Json::parse(r.out);
    CHECK(j["valid"] == true);
    CHECK(j["witness"] == 3);
}

TEST_CASE("exit codes")
{
    CHECK(invoke({"build", "--family", "A"}).code == 2);
    CHECK(invoke({"no-such-command"}).code == 2);
    CHECK(invoke({"build", "--family", "Q", "--rank", "2", "--seed", "1,1"}).code == 1);

    const auto r = invoke({"build", "--family", "A", "--rank", "2", "--seed", "2,2"});
    CHECK(r.code == 1);
    CHECK(r.err.rfind("error: NonIntegral", 0) == 0);
    CHECK(r.out.empty());

    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("build --json piped into check --stdin")
{
    const auto built = invoke({"build", "--family", "C", "--rank", "3", "--seed", "2,5,13", "--json"});
    REQUIRE(built.code == 0);
    const auto checked = invoke({"check", "--stdin"}, built.out);
    CHECK(checked.code == 0);
    CHECK(checked.out == "true\n");

    auto doc = frieze::Json::parse(built.out);
    doc["columns"][1][0] = 4;
    const auto broken = invoke({"check", "--stdin"}, doc.dump());
    CHECK(broken.code == 0);
    CHECK(broken.out.rfind("false\nviolation: ", 0) == 0);

    const std::string bin = FRIEZE_BINARY;
    const auto piped = shell("'" + bin + "' build --family A --rank 4 --seed 3,2,3,1 --json | '" + bin +
                             "' check --stdin");
    CHECK(piped == "true\n");
}

TEST_CASE("enumerate with cache: miss, hit, corrupted entry")
{
    const auto dir = fs::temp_directory_path() / ("frieze-cli-cache-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    const std::vector<std::string> args{"--cache-dir", dir.string(), "enumerate", "--family", "A", "--rank", "8",
                                        "--count-only"};
    auto r = invoke(args);
    CHECK(r.code == 0);
    CHECK(r.out == "4862\n");
    REQUIRE(fs::exists(dir));
    r = invoke(args);
    CHECK(r.out == "4862\n");
    CHECK(r.err.empty());

    for (const auto& entry : fs::directory_iterator(dir)) fs::resize_file(entry.path(), 10);
    r = invoke(args);
    CHECK(r.code == 0);
    CHECK(r.out == "4862\n");
    CHECK(r.err.find("warning:") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("output does not depend on --jobs")
{
    const std::vector<std::vector<std::string>> commands{
        {"enumerate", "--family", "A", "--rank", "6", "--json"},
        {"enumerate", "--family", "C", "--rank", "3", "--json"},
        {"triangulations", "--polygon", "8", "--symmetric-only"},
        {"verify", "--max-rank", "4"},
    };
    for (auto args : commands) {
        auto base = args;
        base.insert(base.begin(), {"--no-cache", "--jobs", "1"});
        const auto reference = invoke(base);
        REQUIRE(reference.code == 0);
        for (const char* jobs : {"2", "3", "8"}) {
            auto other = args;
            other.insert(other.begin(), {"--no-cache", "--jobs", jobs});
            CHECK(invoke(other).out == reference.out);
        }
    }
}

TEST_CASE("fold, unfold and quiddity subcommands")
{
    auto r = invoke({"fold", "--rank", "3", "--seed", "2,5,13,8,3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("3,8,13") != std::string::npos);
    r = invoke({"unfold", "--rank", "3", "--seed", "3,8,13"});
    REQUIRE(r.code == 0);
    r = invoke({"quiddity", "--polygon", "6", "--diagonals", "1-3,1-4,1-5"});
    CHECK(r.code == 0);
    CHECK(r.out == "4,1,2,2,2,1\n");
    CHECK(invoke({"quiddity", "--polygon", "6", "--diagonals", "1-4,2-5,1-3"}).code == 1);
    r = invoke({"triangulations", "--polygon", "6", "--count-only", "--no-cache"});
    CHECK(r.out == "14\n");
    r = invoke({"--no-cache", "triangulations", "--polygon", "6", "--count-only"});
    CHECK(r.out == "14\n");
}
