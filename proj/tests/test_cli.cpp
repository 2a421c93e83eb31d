#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli/cache.hpp"
#include "cli/campaign.hpp"
#include "cli/cli.hpp"
#include "cli/verify.hpp"

using namespace gridtds::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path fresh_cache_dir(const std::string & name)
{
    auto dir = std::filesystem::temp_directory_path() / ("gridtds-test-" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("gamma command")
{
    CHECK(run({"gamma", "7", "2"}).out.starts_with("6\n"));
    CHECK(run({"gamma", "6", "2", "--remove", "H:5,1"}).out.starts_with("5\n"));
    CHECK(run({"gamma", "1", "1"}).out == "undefined\n");
    CHECK(run({"gamma", "3", "3", "--engine", "brute"}).out.starts_with("3\n"));

    auto r = run({"gamma", "4", "2", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"n\":4,\"m\":2,\"gamma_t\":4,\"witness\":[\"1,1\",\"1,2\",\"3,1\",\"3,2\"]}\n");
    CHECK(run({"gamma", "1", "1", "--json"}).out == "{\"n\":1,\"m\":1,\"gamma_t\":\"undefined\",\"witness\":[]}\n");
}

TEST_CASE("edge and vertex lists")
{
    auto a = run({"gamma", "6", "4", "--remove", "H:1,1,V:2,3", "--json"});
    auto b = run({"gamma", "6", "4", "--remove", "H:1,1", "--remove", "V:2,3", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run({"gamma", "4", "4", "--delete", "1,1;2,2", "--json"});
    auto d = run({"gamma", "4", "4", "--delete", "1,1,2,2", "--json"});
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("exit codes and no output on failure")
{
    for (const auto & args : std::vector<std::vector<std::string>>{
             {"gamma", "3", "3", "--remove", "H:9,1", "--json"},
             {"gamma", "3", "3", "--remove", "X:1,1"},
             {"gamma", "3", "3", "--delete", "4,1"},
             {"gamma", "3"},
             {"gamma", "0", "3"},
             {"frobnicate"},
             {"bondage", "3", "3", "--kmax", "0"},
             {"render", "9", "3", "--set", "prop51"},
             {"render", "6", "4", "--set", "prop52"},
             {"render", "1", "1"},
             {"verify", "--suite", "nope"},
         }) {
        auto r = run(args);
        CHECK_MESSAGE(r.code == kExitUsage, args[0]);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
    auto big = run({"gamma", "20", "20", "--json"});
    CHECK(big.code == kExitTooLarge);
    CHECK(big.out.empty());
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bondage command")
{
    auto r = run({"bondage", "4", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("exact 3\nwitness H:1,1 H:1,2 H:2,1\n"));

    auto j = nlohmann::ordered_json::parse(run({"bondage", "6", "3", "--json"}).out);
    CHECK(j["status"] == "exact");
    CHECK(j["value"] == 1);
    CHECK(j["closed_form_witness"] == nlohmann::ordered_json::array({"H:5,2"}));

    auto p = nlohmann::ordered_json::parse(run({"bondage", "1", "2", "--json"}).out);
    CHECK(p["status"] == "infinity");
    CHECK(p["value"] == "infinity");

    auto lb = nlohmann::ordered_json::parse(run({"bondage", "4", "2", "--kmax", "2", "--json"}).out);
    CHECK(lb["status"] == "lower_bound");
    CHECK(lb["value"] == 2);
}

TEST_CASE("json output round-trips byte for byte")
{
    for (const auto & args : std::vector<std::vector<std::string>>{
             {"gamma", "5", "3", "--json"},
             {"bondage", "7", "4", "--json"},
             {"table", "--m", "3", "--n-from", "2", "--n-to", "5", "--format", "json"},
             {"verify", "--suite", "witnesses", "--max-n", "8", "--json"},
         }) {
        auto text = run(args).out;
        REQUIRE_FALSE(text.empty());
        CHECK(nlohmann::ordered_json::parse(text).dump() + "\n" == text);
    }
}

TEST_CASE("render")
{
    CHECK(run({"render", "2", "2", "--set", "solver"}).out == "*o\n*o\n");
    CHECK(run({"render", "9", "4", "--set", "prop51", "--variant", "d"}).out == "oo**ooo**\n*oooo*ooo\n*oooo*ooo\noo**ooo**\n");
    auto r = run({"render", "9", "4", "--set", "prop52", "--variant", "dprime"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '*') == 12);
}

TEST_CASE("table")
{
    auto csv = run({"table", "--m", "2", "--n-from", "2", "--n-to", "10", "--format", "csv"});
    CHECK(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == csv_header());
    int rows = 0;
    const char * pattern[] = {"2", "1", "3"}; // b_t for n = 2, 3, 4 (mod 3)
    while (std::getline(lines, line)) {
        auto n = std::stoi(line.substr(0, line.find(',')));
        CHECK(line.find(std::string(",exact,") + pattern[(n - 2) % 3] + ",exact," + pattern[(n - 2) % 3] + ",") != std::string::npos);
        CHECK(line.ends_with(",agree,true"));
        ++rows;
    }
    CHECK(rows == 9);

    auto text = run({"table", "--m", "4", "--n-from", "4", "--n-to", "9"});
    CHECK(text.out.find("<=3") != std::string::npos);
    CHECK(text.out.find("<=4") != std::string::npos);
    CHECK(text.out.find("=2 ") != std::string::npos);
}

TEST_CASE("verify suites")
{
    auto w = run({"verify", "--suite", "witnesses", "--max-n", "12"});
    CHECK(w.code == 0);
    CHECK(w.out.find("FAIL") == std::string::npos);
    auto c = run({"verify", "--suite", "conjecture", "--max-n", "8"});
    CHECK(c.code == 0);
    CHECK(c.out.find("INFO  b_t G_{7,4}") != std::string::npos);
    CHECK(c.out.find("INFO  b_t G_{8,4}") != std::string::npos);
    CHECK(run({"verify", "--suite", "constructions", "--max-n", "12"}).code == 0);
    CHECK(run({"verify", "--suite", "formulas", "--max-n", "9"}).code == 0);
}

TEST_CASE("random instances are reproducible")
{
    std::mt19937_64 a(5), b(5);
    for (int k = 0; k < 20; ++k) {
        auto g = random_instance(a, 20, 3, 1);
        auto h = random_instance(b, 20, 3, 1);
        CHECK(g.spec() == h.spec());
        CHECK(g.removed_edges() == h.removed_edges());
        CHECK(g.deleted_vertices() == h.deleted_vertices());
        CHECK(g.spec().vertex_count() <= 20);
        CHECK(g.removed_edges().size() <= 3);
        CHECK(g.deleted_vertices().size() <= 1);
    }
}

TEST_CASE("cache hits equal recomputation")
{
    auto dir = fresh_cache_dir("spot");
    std::mt19937_64 rng(11);
    std::vector<std::vector<std::string>> keys;
    for (int k = 0; k < 50; ++k) {
        auto g = random_instance(rng, 24, 2, 1);
        std::vector<std::string> args{"gamma", std::to_string(g.spec().n), std::to_string(g.spec().m), "--json"};
        for (const auto & e : g.removed_edges())
            args.insert(args.end(), {"--remove", gridtds::to_string(e)});
        for (auto v : g.deleted_vertices())
            args.insert(args.end(), {"--delete", gridtds::to_string(v)});
        if (k % 5 == 0 && g.is_clean())
            args = {"bondage", std::to_string(g.spec().n), std::to_string(g.spec().m), "--kmax", "2", "--json"};
        keys.push_back(args);
    }
    for (const auto & args : keys) {
        auto plain = run(args);
        auto with_cache = args;
        with_cache.insert(with_cache.end(), {"--cache", "--cache-dir", dir.string()});
        auto first = run(with_cache);
        auto second = run(with_cache);
        CHECK(plain.code == 0);
        CHECK(first.out == plain.out);
        CHECK(second.out == plain.out);
    }

    // The second pass was served from the file: one record per distinct key.
    ResultCache cache(dir, GRIDTDS_VERSION);
    std::ifstream in(cache.file());
    std::size_t lines = 0;
    for (std::string l; std::getline(in, l);)
        ++lines;
    CHECK(lines <= keys.size());

    // Another tool version ignores existing records.
    ResultCache other(dir, "0.0.0-other");
    auto g = gridtds::build_grid({2, 2});
    CHECK_FALSE(other.lookup(CacheKey::make(g, "gamma_t:dp")).has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache keys sort names")
{
    auto g = gridtds::build_grid({4, 4});
    const gridtds::Edge a[] = {gridtds::Edge::vertical(2, 1), gridtds::Edge::horizontal(1, 1)};
    const gridtds::Edge b[] = {gridtds::Edge::horizontal(1, 1), gridtds::Edge::vertical(2, 1)};
    CHECK(CacheKey::make(remove_edges(g, a), "x").to_string() == CacheKey::make(remove_edges(g, b), "x").to_string());
    CHECK(CacheKey::make(remove_edges(g, a), "x").to_string() == "4x4|H:1,1 V:2,1||x");
}
