#include <catch2/catch_amalgamated.hpp>

#include "g5x/search.hpp"
#include "oracle.hpp"

using namespace g5x;

TEST_CASE("tiny searches") {
    SearchConfig one;
    one.n = 1;
    SearchResult r1 = extremal_search(one);
    CHECK(r1.turan_value == 0);
    CHECK(r1.complete);
    CHECK(r1.extremal.size() == 1);

    SearchConfig two;
    two.n = 2;
    SearchResult r2 = extremal_search(two);
    CHECK(r2.turan_value == 1);
    CHECK(r2.extremal.size() == 1);
}

TEST_CASE("n = 5 finds the pentagon") {
    SearchConfig cfg;
    cfg.n = 5;
    SearchResult r = extremal_search(cfg);
    CHECK(r.turan_value == 5);
    REQUIRE(r.extremal.size() == 1);
    CHECK(isomorphic(r.extremal[0], cycle_graph(5)));
}

TEST_CASE("n = 10 finds the Petersen graph") {
    SearchConfig cfg;
    cfg.n = 10;
    SearchResult r = extremal_search(cfg);
    CHECK(r.turan_value == 15);
    CHECK(r.complete);
    bool petersen_found = false;
    for (const Graph& g : r.extremal) petersen_found |= isomorphic(g, petersen());
    CHECK(petersen_found);
}

TEST_CASE("search outputs are girth-5 and isomorph-free") {
    SearchConfig cfg;
    cfg.n = 9;
    SearchResult r = extremal_search(cfg);
    for (const Graph& g : r.extremal) {
        CHECK(g.order() == 9);
        CHECK(g.size() == r.turan_value);
        CHECK(girth_at_least_5(g));
    }
    for (std::size_t i = 0; i < r.canonical_forms.size(); ++i)
        for (std::size_t j = i + 1; j < r.canonical_forms.size(); ++j)
            CHECK(r.canonical_forms[i] != r.canonical_forms[j]);
}

TEST_CASE("oracle equivalence for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        oracle::Result expect = oracle::turan_girth5(n);
        SearchConfig cfg;
        cfg.n = n;
        SearchResult got = extremal_search(cfg);
        INFO("n = " << n);
        CHECK(got.complete);
        CHECK(got.turan_value == expect.best_size);
        CHECK(static_cast<int>(got.extremal.size()) == expect.classes);
        CHECK(count_extremal(n) == expect.classes);
    }
}

TEST_CASE("pruning toggles do not change results") {
    for (int n : {5, 6, 7}) {
        oracle::Result expect = oracle::turan_girth5(n);
        for (int bits = 0; bits < 8; ++bits) {
            SearchConfig cfg;
            cfg.n = n;
            cfg.prune_common_neighbour = bits & 1;
            cfg.prune_degree_cap = bits & 2;
            cfg.prune_standard_argument = bits & 4;
            SearchResult r = extremal_search(cfg);
            INFO("n = " << n << " toggles = " << bits);
            CHECK(r.turan_value == expect.best_size);
            CHECK(static_cast<int>(r.extremal.size()) == expect.classes);
        }
    }
}

TEST_CASE("verify_table1 matches the published values") {
    Table1Report report = verify_table1(13);
    CHECK(report.all_match);
    CHECK(report.all_complete);
    REQUIRE(report.rows.size() == 13);
    const int expected[] = {0, 1, 2, 3, 5, 6, 8, 10, 12, 15, 16, 18, 21};
    for (int n = 1; n <= 13; ++n) {
        CHECK(report.rows[static_cast<std::size_t>(n - 1)].computed == expected[n - 1]);
        CHECK(report.rows[static_cast<std::size_t>(n - 1)].complete);
    }
}

TEST_CASE("computed values are monotone and subadditive") {
    SearchConfig cfg;
    cfg.n = 12;
    detail::SearchEngine engine(cfg);
    SearchResult r = engine.run();
    REQUIRE(r.complete);
    for (int n = 2; n <= 12; ++n) {
        CHECK(engine.exact_value(n) >= engine.exact_value(n - 1));
        CHECK(engine.exact_value(n) <= engine.exact_value(n - 1) + n - 1);
    }
}

TEST_CASE("budget exhaustion is reported, not silently wrong") {
    SearchConfig cfg;
    cfg.n = 12;
    cfg.node_budget = 50;
    SearchResult r = extremal_search(cfg);
    CHECK_FALSE(r.complete);
    CHECK_THROWS_AS(count_extremal(12, cfg), std::runtime_error);
}

TEST_CASE("capacity and cap guards") {
    SearchConfig cfg;
    cfg.n = 33;
    CHECK_THROWS_AS(extremal_search(cfg), std::invalid_argument);
    SearchConfig over;
    over.n = 25;  // beyond the default desk cap
    CHECK_THROWS_AS(extremal_search(over), std::invalid_argument);
    over.desk_cap = 25;  // explicit opt-in raises the cap
    CHECK_THROWS_AS(verify_table1(22), std::invalid_argument);
}

TEST_CASE("sharded search agrees with single-threaded", "[shards]") {
    SearchConfig solo;
    solo.n = 13;
    SearchResult a = extremal_search(solo);
    SearchConfig dual = solo;
    dual.shards = 2;
    SearchResult b = extremal_search(dual);
    CHECK(a.turan_value == b.turan_value);
    CHECK(a.complete);
    CHECK(b.complete);
    REQUIRE(a.canonical_forms.size() == b.canonical_forms.size());
    CHECK(a.canonical_forms == b.canonical_forms);
}
