#include "doctest.h"

#include <random>

#include "nsl/io.hpp"
#include "nsl/orbit.hpp"
#include "support.hpp"

using namespace nsl;
using nsl::test::sg;

TEST_CASE("parse_semigroup_spec") {
    CHECK(io::parse_semigroup_spec("5,6,8") == std::vector<Int>{5, 6, 8});
    CHECK(io::parse_semigroup_spec(" 4, 6 ") == std::vector<Int>{4, 6});
    CHECK(io::parse_semigroup_spec("1") == std::vector<Int>{1});
    CHECK_THROWS_AS(semigroup_from_generators(io::parse_semigroup_spec("4, 6")), Error);

    try {
        io::parse_semigroup_spec("5,x,8");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(io::parse_semigroup_spec("5,,8"), ParseError);
    CHECK_THROWS_AS(io::parse_semigroup_spec("5,-6"), ParseError);
    CHECK_THROWS_AS(io::parse_semigroup_spec("0,3"), ParseError);
    CHECK_THROWS_AS(io::parse_semigroup_spec(""), Error);
}

TEST_CASE("parse_ideal_spec") {
    auto S = sg({5, 6, 8});
    auto Sid = principal_ideal(S);
    CHECK(io::parse_ideal_spec("0,2", S) == ideal_from_generators(S, {0, 2}));
    CHECK(io::parse_ideal_spec("0@5", S) == Sid.translate(5));
    CHECK(io::parse_ideal_spec("-5", S) == Sid.translate(-5));
    CHECK(io::parse_ideal_spec("(0,2)+S", S) == ideal_from_generators(S, {0, 2}));
    CHECK(io::parse_ideal_spec("(-5)+S", S) == Sid.translate(-5));
    CHECK(io::parse_ideal_spec("5+S", S) == Sid.translate(5));
    CHECK(io::parse_ideal_spec("S", S) == Sid);
    CHECK(io::parse_ideal_spec(" 0, 1 ,3 @ -2", S) == ideal_from_generators(S, {-2, -1, 1}));
    CHECK_THROWS_AS(io::parse_ideal_spec("0;2", S), ParseError);
    CHECK_THROWS_AS(io::parse_ideal_spec("0@", S), Error);
    CHECK_THROWS_AS(io::parse_ideal_spec("", S), Error);
}

TEST_CASE("parse_ops") {
    CHECK(io::parse_ops("star,kdual") == std::vector<DualityOp>{DualityOp::Star, DualityOp::KDual});
    CHECK(io::parse_ops("kdual") == std::vector<DualityOp>{DualityOp::KDual});
    CHECK_THROWS_AS(io::parse_ops("star,vee"), ParseError);
}

TEST_CASE("ideal_text") {
    auto S = sg({5, 6, 8});
    auto Sid = principal_ideal(S);
    CHECK(io::ideal_text(Sid) == "S");
    CHECK(io::ideal_text(Sid.translate(5)) == "5+S");
    CHECK(io::ideal_text(Sid.translate(-5)) == "(-5)+S");
    CHECK(io::ideal_text(ideal_from_generators(S, {0, 2})) == "(0,2)+S");
    CHECK(io::ideal_elements_text(ideal_from_generators(S, {0, 2})) == "{0, 2, 5, 6, 7, 8, 10, ...}");
}

TEST_CASE("rendered ideals re-parse to the same ideal") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<Int> shift(-30, 30);
    for (const auto& gens : nsl::test::corpus()) {
        auto S = sg(gens);
        for (const auto& I : enumerate_normalized_ideals(S)) {
            auto J = I.translate(shift(rng));
            CHECK(io::parse_ideal_spec(io::ideal_text(J), S) == J);
        }
    }
}

TEST_CASE("JSON schemas") {
    auto S = sg({5, 6, 8});
    auto js = io::semigroup_json(*S);
    CHECK(js["generators"] == nlohmann::json::array({5, 6, 8}));
    CHECK(js["frobenius"] == 9);
    CHECK(js["gaps"] == nlohmann::json::array({1, 2, 3, 4, 7, 9}));
    CHECK(js["multiplicity"] == 5);
    CHECK(js["symmetric"] == false);

    auto ji = io::ideal_json(ideal_from_generators(S, {0, 2}).translate(3));
    CHECK(ji["min"] == 3);
    CHECK(ji["generators"] == nlohmann::json::array({3, 5}));
    CHECK(ji["window_offsets"] == nlohmann::json::array({0, 2, 5, 6, 7, 8}));

    auto jl = io::liaison_json(principal_liaison_class(canonical_ideal(S)));
    CHECK(jl["theory"] == "principal");
    CHECK(jl["reflexive"] == false);
    CHECK(jl["collapsed"] == false);
    CHECK(jl["representatives"].size() == 1);
    CHECK(jl["linking_ideal"].is_null());

    constexpr std::array ops{DualityOp::Star, DualityOp::KDual};
    auto jo = io::orbit_json(mixed_orbit(canonical_ideal(S), ops));
    CHECK(jo["nodes"].size() == 3);
    CHECK(jo["edges"].size() == 6);
    CHECK(jo["edges"][0].contains("op"));

    auto jr = io::report_json(classify(S));
    for (const char* key : {"ideal_count", "s_reflexive_count", "k_reflexive_count", "principal_class_histogram",
                            "canonical_class_histogram", "max_mixed_orbit"})
        CHECK(jr.contains(key));
    CHECK(jr["ideal_count"] == 23);
}

TEST_CASE("orbit DOT export") {
    auto S = sg({5, 6, 8});
    constexpr std::array ops{DualityOp::Star, DualityOp::KDual};
    auto dot = io::orbit_dot(mixed_orbit(canonical_ideal(S), ops));
    CHECK(dot.find("digraph orbit {") == 0);
    CHECK(dot.find("n0 [label=\"(0,2)+S\", shape=box]") != std::string::npos);
    CHECK(dot.find("label=\"(0,2,4)+S\"") != std::string::npos);
    CHECK(dot.find("label=\"S\"") != std::string::npos);
    CHECK(dot.find("[label=\"kdual\"]") != std::string::npos);
}

TEST_CASE("published comparison tables") {
    auto rows = io::published_comparison(sg({7, 9, 10, 12}));
    REQUIRE_FALSE(rows.empty());
    CHECK(rows[0].quantity == "F(S)");
    CHECK(rows[0].published == "11");
    CHECK(rows[0].computed == "15");
    CHECK_FALSE(rows[0].agrees);

    auto rows2 = io::published_comparison(sg({5, 6, 8}));
    auto find = [&](const std::string& q) {
        for (const auto& r : rows2)
            if (r.quantity == q) return r;
        FAIL("missing row " << q);
        return io::PublishedComparison{};
    };
    CHECK(find("F(S)").agrees);
    CHECK(find("S-K(S)").agrees);
    CHECK(find("canonical class of K(S)").agrees);
    auto dual = find("S-((0,1,3)+S)");
    CHECK_FALSE(dual.agrees);
    CHECK(dual.computed == "(5,12,14)+S");

    CHECK(io::published_comparison(sg({2, 3})).empty());
}
