#include "doctest.h"

#include <sstream>

#include "ramlab/cli.hpp"
#include "ramlab/json_io.hpp"

using namespace ramlab;

namespace {

struct RunResult {
    int code;
    Json json;
    std::string raw;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    RunResult r{code, Json(), out.str()};
    if (!r.raw.empty()) r.json = Json::parse(r.raw);
    return r;
}

} // namespace

TEST_CASE("filtration subcommand on the Artin-Schreier family") {
    auto r = run({"filtration", "--family", "artin_schreier", "--p", "2", "--q", "2", "--m", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.json["breaks_lower"] == Json::array({1}));
    CHECK(r.json["different"] == 2);
    CHECK(r.json["discriminant"] == 2);
    CHECK(r.json["d_values"]["1"] == 2);
    CHECK(r.json["schema_version"] == kSchemaVersion);
}

TEST_CASE("census subcommand") {
    auto r = run({"census-as", "--q", "2", "--divisor", "3[inf]"});
    REQUIRE(r.code == 0);
    CHECK(r.json["count_classes"] == 7);
}

TEST_CASE("bound subcommand") {
    auto r = run({"bound", "--m", "2", "--n", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.json["m_prime"] == 8);
}

TEST_CASE("census-kummer subcommand") {
    auto r = run({"census-kummer", "--q", "3", "--e", "2", "--support", "0,inf"});
    REQUIRE(r.code == 0);
    CHECK(r.json["count_classes"] == 3);
}

TEST_CASE("census-chain subcommand") {
    auto r = run({"census-chain", "--q", "2", "--chain", "0;1[inf];3[inf]"});
    REQUIRE(r.code == 0);
    CHECK(r.json["counts"] == Json::array({1, 3, 7}));
    CHECK(r.json["ok"] == true);
}

TEST_CASE("swan and artin subcommands") {
    std::vector<std::string> base{"--family", "artin_schreier", "--p", "2", "--q", "2", "--m", "1"};
    auto swan = run([&] {
        std::vector<std::string> a{"swan"};
        a.insert(a.end(), base.begin(), base.end());
        a.insert(a.end(), {"--rep", R"({"kind":"character","values":[0,1]})"});
        return a;
    }());
    REQUIRE(swan.code == 0);
    CHECK(swan.json["swan"] == 1);

    auto artin = run([&] {
        std::vector<std::string> a{"artin"};
        a.insert(a.end(), base.begin(), base.end());
        a.insert(a.end(), {"--rep", R"({"kind":"character","values":[0,1]})"});
        return a;
    }());
    REQUIRE(artin.code == 0);
    CHECK(artin.json["swan"] == 1);
    CHECK(artin.json["epsilon"] == 1);
    CHECK(artin.json["artin"] == 2);
}

TEST_CASE("verify subcommand") {
    auto r = run({"verify", "--family", "tame_kummer", "--q", "3", "--e", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.json["all_pass"] == true);
}

TEST_CASE("base-change-check subcommand") {
    auto r = run({"base-change-check", "--family", "artin_schreier", "--q", "2", "--m", "1",
                  "--eprime", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.json["ok"] == true);
    CHECK(r.json["lambda_after"] == Json::array({3, 1}));
}

TEST_CASE("herbrand subcommand with samples") {
    auto r = run({"herbrand", "--family", "artin_schreier", "--q", "2", "--m", "1",
                  "--samples", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.json["phi"]["breakpoints"].size() == 3);
    CHECK(r.json["samples"].size() == 5);
}

TEST_CASE("error taxonomy maps to exit codes") {
    auto malformed = run({"filtration", "--json", "{not json"});
    CHECK(malformed.code == 1);
    CHECK(malformed.json["error"]["type"] == "domain");

    auto unsupported = run({"filtration", "--family", "tame_kummer", "--q", "2", "--e", "3"});
    CHECK(unsupported.code == 1);
    CHECK(unsupported.json["error"]["type"] == "unsupported");

    auto resource = run({"census-as", "--q", "2", "--divisor", "99[inf]"});
    CHECK(resource.code == 2);
    CHECK(resource.json["error"]["type"] == "resource");

    auto unknown = run({"no-such-command"});
    CHECK(unknown.code == 1);
}

TEST_CASE("byte-identical reruns, workers included") {
    std::vector<std::string> args{"census-as", "--q", "2", "--divisor", "3[inf]"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.raw == b.raw);
    auto c = run({"--workers", "3", "census-as", "--q", "2", "--divisor", "3[inf]"});
    CHECK(a.raw == c.raw);
}

TEST_CASE("datum JSON round-trip preserves the filtration") {
    auto F3 = FqField::create_canonical(3, 1);
    auto d = build_artin_schreier(F3, 2, F3->one());
    Json serialized = datum_to_json(d);
    auto restored = datum_from_json(serialized);
    CHECK(verify_datum(restored).all_pass());
    auto f1 = lower_filtration(d);
    auto f2 = lower_filtration(restored);
    CHECK(f1.breaks == f2.breaks);
    CHECK(f1.d_values == f2.d_values);
    CHECK(filtration_report_json(f1) == filtration_report_json(f2));
}

TEST_CASE("inline datum JSON input") {
    auto F2 = FqField::create_canonical(2, 1);
    Json datum = datum_to_json(build_artin_schreier(F2, 3, F2->one()));
    auto r = run({"filtration", "--json", datum.dump()});
    REQUIRE(r.code == 0);
    CHECK(r.json["breaks_lower"] == Json::array({3}));
    CHECK(r.json["different"] == 4);
}

TEST_CASE("family shorthand JSON input") {
    auto r = run({"different", "--json", R"({"family":"artin_schreier","q":2,"m":1})"});
    REQUIRE(r.code == 0);
    CHECK(r.json["different"] == 2);
}
