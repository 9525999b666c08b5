#include <doctest.h>

#include <cstdio>
#include <iostream>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = ulrich::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/ulrich_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const std::string kStarJson = R"({"vertices":[
  {"id":"C","self":-3},{"id":"A1","self":-2},{"id":"A2","self":-2},
  {"id":"B1","self":-2},{"id":"B2","self":-2},{"id":"D1","self":-2},{"id":"D2","self":-2}],
 "edges":[{"a":"C","b":"A1"},{"a":"A1","b":"A2"},{"a":"C","b":"B1"},
          {"a":"B1","b":"B2"},{"a":"C","b":"D1"},{"a":"D1","b":"D2"}]})";

} // namespace

TEST_CASE("identical invocations produce identical bytes") {
    const std::vector<std::string> args{"ns", "ulrich", "--gens", "8,15"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const auto ja = run({"ns", "ulrich", "--gens", "8,15", "--format", "json"});
    const auto jb = run({"ns", "ulrich", "--gens", "8,15", "--format", "json"});
    CHECK(ja.out == jb.out);
}

TEST_CASE("json round-trips to the identical table") {
    const std::string star = write_temp("star.json", kStarJson);
    const std::vector<std::vector<std::string>> cases = {
        {"ns", "info", "--gens", "8,15"},
        {"ns", "ulrich", "--gens", "8,15"},
        {"ns", "ulrich", "--gens", "3,5,7"},
        {"ns", "ulrich", "--gens", "3,5"},
        {"graph", "fundamental", "--input", star},
        {"graph", "stats", "--input", star, "--cycle",
         "C=2,A1=2,A2=1,B1=2,B2=1,D1=2,D2=1"},
        {"graph", "cycles", "--input", star},
        {"rdp", "--type", "E", "--n", "6"},
        {"rdp", "--type", "D", "--n", "7", "--dim", "1"},
        {"betti", "--dim", "1", "--mu", "2", "--upto", "3"},
    };
    for (auto args : cases) {
        const auto table = run(args);
        REQUIRE(table.code == 0);
        args.push_back("--format");
        args.push_back("json");
        const auto as_json = run(args);
        REQUIRE(as_json.code == 0);
        const json env = json::parse(as_json.out);
        CHECK(ulrich::cli::render_table(env) == table.out);
    }
}

TEST_CASE("json payload shape for ns ulrich") {
    const auto r = run({"ns", "ulrich", "--gens", "8,15", "--format", "json"});
    const json env = json::parse(r.out);
    CHECK(env.at("command") == "ns ulrich");
    CHECK(env.at("results").size() == 7);
    const json& first = env.at("results").at(0);
    CHECK(first.at("generators") == json::array({8, 60}));
    CHECK(first.at("mu") == 2);
    CHECK(first.at("reduction") == 8);
    CHECK(first.at("c") == 52);
    for (const auto& c : env.at("cross_checks")) CHECK(c.at("pass") == true);
}

TEST_CASE("betti values are exact decimal strings") {
    const auto r = run({"betti", "--dim", "0", "--mu", "3", "--upto", "64", "--format", "json"});
    const json env = json::parse(r.out);
    const auto& vals = env.at("results").at(0).at("betti");
    CHECK(vals.at(0) == "1");
    CHECK(vals.at(64) == "3433683820292512484657849089281"); // 3^64
}

TEST_CASE("exit codes") {
    CHECK(run({"ns", "ulrich", "--gens", "4,6"}).code == 2);        // gcd != 1
    CHECK(run({"ns", "ulrich", "--gens", "befuddle"}).code == 2);
    CHECK(run({"ns", "ulrich"}).code == 2);                          // missing --gens
    CHECK(run({"ns", "ulrich", "--gens", "8,15", "--method", "brute"}).code == 3);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"betti", "--dim", "2", "--mu", "1", "--upto", "3"}).code == 2);

    const std::string bad = write_temp("bad.json", "{\"vertices\": [{\"id\": 3}]}");
    CHECK(run({"graph", "fundamental", "--input", bad}).code == 2);
    const std::string nodef =
        write_temp("nodef.json", R"({"vertices":[{"id":"A","self":-2},{"id":"B","self":-2},
          {"id":"C","self":-2},{"id":"D","self":-2},{"id":"E","self":-2}],
          "edges":[{"a":"A","b":"E"},{"a":"B","b":"E"},{"a":"C","b":"E"},{"a":"D","b":"E"}]})");
    CHECK(run({"graph", "fundamental", "--input", nodef}).code == 2);

    // Not rational: cycles enumeration refuses.
    const std::string cusp = write_temp(
        "cusp.json",
        R"({"vertices":[{"id":"A","self":-3},{"id":"B","self":-3}],
            "edges":[{"a":"A","b":"B","mult":2}]})");
    CHECK(run({"graph", "cycles", "--input", cusp}).code == 2);
    CHECK(run({"graph", "fundamental", "--input", cusp}).code == 0); // flagged, not refused
}

TEST_CASE("stdin input") {
    // --input - reads the graph from stdin; exercised via a redirected std::cin.
    std::istringstream fake(kStarJson);
    auto* old = std::cin.rdbuf(fake.rdbuf());
    const auto r = run({"graph", "fundamental", "--input", "-"});
    std::cin.rdbuf(old);
    CHECK(r.code == 0);
    CHECK(r.out.find("multiplicity: 3") != std::string::npos);
}

TEST_CASE("cap flag widens the brute-force guard") {
    const auto refused = run({"ns", "ulrich", "--gens", "5,9", "--method", "brute"});
    CHECK(refused.code == 3); // 69 candidates > default 40
    const auto allowed =
        run({"ns", "ulrich", "--gens", "5,9", "--method", "brute", "--cap", "100"});
    CHECK(allowed.code == 0);
}

TEST_CASE("ULRICH_CAP overrides the default cap") {
    setenv("ULRICH_CAP", "100", 1);
    const auto r = run({"ns", "ulrich", "--gens", "5,9", "--method", "brute"});
    unsetenv("ULRICH_CAP");
    CHECK(r.code == 0);
    CHECK(run({"ns", "ulrich", "--gens", "5,9", "--method", "brute"}).code == 3);
}

TEST_CASE("graph stats refuses a cycle that is not anti-nef") {
    const std::string star = write_temp("star2.json", kStarJson);
    const auto r = run({"graph", "stats", "--input", star, "--cycle", "C=1"});
    CHECK(r.code == 2);
}

TEST_CASE("an undersized brute-force box is reported") {
    // bound 1 boxes the search at Z0, so the one cycle found sits on the
    // boundary and the cross-check asks for a larger bound.
    const std::string star = write_temp("star3.json", kStarJson);
    const auto r = run({"graph", "cycles", "--input", star, "--method", "brute", "--bound",
                        "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const json env = json::parse(r.out);
    CHECK(env.at("results").size() == 1);
    bool found = false;
    for (const auto& c : env.at("cross_checks")) {
        if (c.at("name") == "box_boundary_untouched") {
            found = true;
            CHECK(c.at("pass") == false);
        }
    }
    CHECK(found);
}

TEST_CASE("selfcheck passes") {
    const auto r = run({"selfcheck"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
}
