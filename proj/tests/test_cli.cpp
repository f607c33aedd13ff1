#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "nsl/cli.hpp"

using nsl::cli::main_entry;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "nsl");
    std::ostringstream out, err;
    int status = main_entry(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli: sgp json") {
    auto r = cli({"sgp", "--gens", "5,6,8", "--format", "json"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["frobenius"] == 9);
    CHECK(j["symmetric"] == false);
}

TEST_CASE("cli: liaison canonical") {
    auto r = cli({"liaison", "canonical", "--gens", "5,6,8", "--ideal", "0,2", "--format", "json"});
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["representatives"].size() == 2);
    CHECK(j["representatives"][0]["generators"] == nlohmann::json::array({0, 2}));
    CHECK(j["representatives"][1]["generators"] == nlohmann::json::array({0}));

    auto t = cli({"liaison", "canonical", "--gens", "5,6,8", "--ideal", "0,2"});
    CHECK(t.out.find("representatives: (0,2)+S S") != std::string::npos);
}

TEST_CASE("cli: orbit dot") {
    auto r = cli({"orbit", "--gens", "5,6,8", "--ideal", "0,2", "--ops", "star,kdual", "--format", "dot"});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("n2 [label=") != std::string::npos);
    CHECK(r.out.find("n3 [label=") == std::string::npos);
}

TEST_CASE("cli: ideal actions") {
    auto r = cli({"ideal", "colon", "--gens", "5,6,8", "--ideal", "0", "--ideal", "0,1,3", "--format", "json"});
    REQUIRE(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["generators"] == nlohmann::json::array({5, 12, 14}));

    r = cli({"ideal", "dual", "--gens", "5,6,8", "--ideal", "0@5"});
    CHECK(r.status == 0);
    CHECK(r.out.find("(-5)+S") != std::string::npos);

    r = cli({"ideal", "closure", "--gens", "5,6,8", "--ideal", "0,2", "--format", "json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["s_reflexive"] == false);
    CHECK(j["k_reflexive"] == true);

    r = cli({"ideal", "normalize", "--gens", "5,6,8", "--ideal", "6,8,10"});
    CHECK(r.out.find("(0,2,4)+S") != std::string::npos);

    r = cli({"ideal", "gens", "--gens", "5,6,8", "--ideal", "0,2,5,7", "--raw"});
    CHECK(r.out.find("generators: 0,2") != std::string::npos);
    CHECK(r.out.find("elements: {0, 2, 5, 6") != std::string::npos);

    r = cli({"ideal", "kdual", "--gens", "5,6,8", "--ideal", "0", "--check"});
    CHECK(r.status == 0);
    CHECK(r.out.find("(0,2)+S") != std::string::npos);
}

TEST_CASE("cli: verify-chain") {
    auto r = cli({"liaison", "verify-chain", "--gens", "5,6,8", "--ideal", "0", "--ideal", "0,2", "--link", "0,2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("valid:  yes") != std::string::npos);
    r = cli({"liaison", "verify-chain", "--gens", "5,6,8", "--ideal", "0", "--ideal", "0,2", "--link", "0,2", "--even"});
    CHECK(r.out.find("valid:  no") != std::string::npos);
    r = cli({"liaison", "verify-chain", "--gens", "5,6,8", "--ideal", "0", "--link", "0,2"});
    CHECK(r.status == nsl::cli::kDomainError);
}

TEST_CASE("cli: --check passes on every subcommand") {
    const std::vector<std::vector<std::string>> commands{
        {"sgp", "--gens", "5,6,8"},
        {"sgp", "--gens", "1"},
        {"ideal", "colon", "--gens", "4,5,7", "--ideal", "0,3@-4", "--ideal", "0,1@7"},
        {"ideal", "closure", "--gens", "7,9,10,12", "--ideal", "0,4,6"},
        {"ideal", "normalize", "--gens", "5,6,8", "--ideal", "3,4@-9"},
        {"ideal", "gens", "--gens", "5,6,8", "--ideal", "0,1,3,5,6"},
        {"liaison", "principal", "--gens", "5,6,8", "--ideal", "0,1,3"},
        {"liaison", "canonical", "--gens", "5,6,8", "--ideal", "0,2"},
        {"liaison", "verify-chain", "--gens", "5,6,8", "--ideal", "0", "--ideal", "0,2", "--link", "0,2"},
        {"orbit", "--gens", "7,9,10,12", "--ideal", "0,4,6"},
        {"classify", "--gens", "4,5,7"},
    };
    for (auto cmd : commands) {
        cmd.push_back("--check");
        auto r = cli(cmd);
        CAPTURE(cmd);
        CAPTURE(r.err);
        CHECK(r.status == 0);
        CHECK(r.err.find("check: oracle agrees") != std::string::npos);
    }
}

TEST_CASE("cli: exit statuses") {
    CHECK(cli({"sgp", "--gens", "4,6"}).status == nsl::cli::kDomainError);
    CHECK(cli({"sgp", "--gens", "4;6"}).status == nsl::cli::kParseError);
    CHECK(cli({"sgp"}).status == nsl::cli::kParseError);
    CHECK(cli({"sgp", "--gens", "5,6,8", "--format", "dot"}).status == nsl::cli::kParseError);
    CHECK(cli({"sgp", "--gens", "5,6,8", "--format", "xml"}).status == nsl::cli::kParseError);
    CHECK(cli({"ideal", "frobnicate", "--gens", "5,6,8"}).status == nsl::cli::kParseError);
    CHECK(cli({"bogus"}).status == nsl::cli::kParseError);
    CHECK(cli({"ideal", "dual", "--gens", "5,6,8"}).status == nsl::cli::kParseError);
    CHECK(cli({"orbit", "--gens", "5,6,8", "--ideal", "0,2", "--cap", "2"}).status == nsl::cli::kDomainError);
    CHECK(cli({"classify", "--gens", "5,6,8", "--limit", "5"}).status == nsl::cli::kDomainError);
    CHECK(cli({"--help"}).status == 0);
}

TEST_CASE("cli: --paper-compare") {
    auto r = cli({"sgp", "--gens", "7,9,10,12", "--paper-compare"});
    REQUIRE(r.status == 0);
    CHECK(r.out.find("DIFFERS") != std::string::npos);
    CHECK(r.out.find("(0,2,3,5)+S") != std::string::npos);

    auto j = nlohmann::json::parse(
        cli({"sgp", "--gens", "5,6,8", "--paper-compare", "--format", "json"}).out);
    CHECK(j["published_comparison"].size() > 5);
}
