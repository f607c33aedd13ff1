#include "doctest.h"

#include "nsl/classify.hpp"
#include "support.hpp"

using namespace nsl;
using nsl::test::sg;

TEST_CASE("classify: frozen census") {
    struct Row {
        std::vector<Int> gens;
        std::size_t ideals, s_refl, k_refl, max_orbit;
    };
    // Computed by an independent brute-force script over explicit sets.
    const std::vector<Row> rows{
        {{2, 3}, 2, 2, 2, 1},    {{3, 4, 5}, 4, 2, 4, 3}, {{3, 5}, 7, 7, 7, 2},
        {{4, 5, 7}, 10, 5, 10, 5}, {{5, 6, 8}, 23, 7, 23, 9}, {{4, 6, 9}, 17, 17, 17, 2},
        {{7, 9, 10, 12}, 132, 15, 132, 13}};
    for (const auto& row : rows) {
        CAPTURE(row.gens);
        auto r = classify(sg(row.gens));
        CHECK(r.ideal_count == row.ideals);
        CHECK(r.s_reflexive_count == row.s_refl);
        CHECK(r.k_reflexive_count == row.k_refl);
        CHECK(r.max_mixed_orbit == row.max_orbit);
        CHECK(r.universal_k_reflexivity());
        CHECK(r.canonical_pairs_linked);
        for (const auto* h : {&r.principal_class_histogram, &r.canonical_class_histogram}) {
            std::size_t total = 0;
            for (auto [size, count] : *h) {
                CHECK((size == 1 || size == 2));
                total += count;
            }
            CHECK(total == r.ideal_count);
        }
    }
}

TEST_CASE("classify: symmetric semigroup has identical theories") {
    for (auto gens : {std::vector<Int>{2, 3}, {3, 5}, {4, 6, 9}}) {
        auto r = classify(sg(gens));
        CHECK(r.principal_class_histogram == r.canonical_class_histogram);
        CHECK(r.s_reflexive_count == r.k_reflexive_count);
    }
}

TEST_CASE("classify: N and limits") {
    auto r = classify(sg({1}));
    CHECK(r.ideal_count == 1);
    CHECK(r.principal_class_histogram == std::map<std::size_t, std::size_t>{{1, 1}});
    CHECK(r.canonical_class_histogram == std::map<std::size_t, std::size_t>{{1, 1}});

    ClassifyOptions small;
    small.enumeration_limit = 8;
    CHECK_THROWS_AS(classify(sg({5, 6, 8}), small), Error);
    try {
        classify_serial(sg({5, 6, 8}), small);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EnumerationLimitExceeded);
    }

    // Orbit cap failures inside the parallel region surface as exceptions.
    ClassifyOptions tiny;
    tiny.orbit_cap = 1;
    CHECK_THROWS_AS(classify(sg({5, 6, 8}), tiny), Error);
}

TEST_CASE("parallel kernels match the serial reference") {
    nsl::test::SemigroupGen gen(5150, 13);
    for (int trial = 0; trial < 12; ++trial) {
        auto S = gen.next();
        CAPTURE(S->minimal_generators());
        CHECK(classify(S) == classify_serial(S));
        auto ideals = enumerate_normalized_ideals(S);
        CHECK(colon_table(ideals) == colon_table_serial(ideals));
    }
    CHECK(colon_table({}).empty());
    CHECK(parallel_thread_count() >= 1);
}
