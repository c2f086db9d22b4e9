#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "g5x/canonical.hpp"
#include "g5x/constructions.hpp"

using namespace g5x;

TEST_CASE("petersen") {
    Graph p = petersen();
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    CHECK(is_regular(p, 3));
    CHECK(girth_at_least_5(p));
    CHECK(girth(p) == 5);
}

TEST_CASE("hoffman_singleton") {
    auto hs = hoffman_singleton();
    const Graph& g = hs.graph;
    CHECK(g.order() == 50);
    CHECK(g.size() == 175);
    CHECK(is_regular(g, 7));
    CHECK(girth_at_least_5(g));
    for (int v = 0; v < 50; ++v) CHECK(deg2(g, v) == 49);

    // the theoretical bound holds with equality: (2e)^2 == n^2 (n-1)
    long long e = g.size(), n = g.order();
    CHECK(4 * e * e == n * n * (n - 1));

    // both sides induce five disjoint 5-cycles
    for (VertexSet half : {VertexSet::first_n(25), VertexSet::first_n(50) - VertexSet::first_n(25)}) {
        Graph ind = induced_subgraph(g, half).graph;
        auto comps = components(ind);
        REQUIRE(comps.size() == 5);
        for (const auto& comp : comps) {
            CHECK(comp.count() == 5);
            CHECK(isomorphic(induced_subgraph(ind, comp).graph, cycle_graph(5)));
        }
    }
}

TEST_CASE("hs labeling") {
    HsLabeling lab;
    CHECK(lab.vertex_of({true, 0, 1}) == 0);
    CHECK(lab.vertex_of({false, 4, 5}) == 49);
    for (int v = 0; v < 50; ++v) CHECK(lab.vertex_of(lab.name_of(v)) == v);
    CHECK(lab.name_of(0).text() == "c1^(0)");
    CHECK(lab.name_of(49).text() == "d(4,5)");
    CHECK_THROWS_AS(lab.name_of(50), std::out_of_range);
    CHECK_THROWS_AS(lab.vertex_of({true, 5, 1}), std::out_of_range);
}

TEST_CASE("every pentagon/pentagram pair induces a Petersen graph") {
    auto hs = hoffman_singleton();
    for (int nu = 0; nu < 5; ++nu) {
        for (int l = 0; l < 5; ++l) {
            VertexSet pair;
            for (int i = 0; i < 5; ++i) {
                pair.insert(5 * nu + i);
                pair.insert(25 + 5 * l + i);
            }
            CHECK(isomorphic(induced_subgraph(hs.graph, pair).graph, petersen()));
        }
    }
}

TEST_CASE("peel sizes reproduce the known values") {
    // first peel: 175, 168, 162, 156, 150, 145
    const int first_sizes[] = {175, 168, 162, 156, 150, 145};
    for (int k = 0; k <= 5; ++k) {
        PeelSpec spec;
        spec.count = k;
        auto p = peel(spec);
        CHECK(p.graph.order() == 50 - k);
        CHECK(p.graph.size() == first_sizes[k]);
        CHECK(girth_at_least_5(p.graph));
    }
    // second peel: 139, 134, 129, 124, 120
    const int second_sizes[] = {145, 139, 134, 129, 124, 120};
    for (int k = 0; k <= 5; ++k) {
        PeelSpec spec;
        spec.count = 5;
        spec.second_cycle = 4;
        spec.second_count = k;
        auto p = peel(spec);
        CHECK(p.graph.order() == 45 - k);
        CHECK(p.graph.size() == second_sizes[k]);
        CHECK(girth_at_least_5(p.graph));
    }
}

TEST_CASE("peel spec validation") {
    PeelSpec bad;
    bad.count = 6;
    CHECK_THROWS_AS(peel(bad), std::invalid_argument);
    PeelSpec second_without_full;
    second_without_full.count = 4;
    second_without_full.second_cycle = 0;
    second_without_full.second_count = 1;
    CHECK_THROWS_AS(peel(second_without_full), std::invalid_argument);
}

TEST_CASE("the order-45 peel has the forced degree structure") {
    auto p = peel(PeelSpec{});
    const Graph& g = p.graph;
    DegreeSequence s = degree_sequence(g);
    CHECK(s.min_degree() == 6);
    CHECK(s.max_degree() == 7);

    for (int v = 0; v < g.order(); ++v) {
        int same = 0;
        for (int w : g.neighbourhood(v))
            if (g.degree(w) == g.degree(v)) ++same;
        CHECK(same == 2);
    }

    // G7 = 4 C5, G6 = 5 C5
    Graph g7 = induced_subgraph(g, vertices_with_degree(g, 7)).graph;
    Graph g6 = induced_subgraph(g, vertices_with_degree(g, 6)).graph;
    auto comps7 = components(g7);
    auto comps6 = components(g6);
    CHECK(comps7.size() == 4);
    CHECK(comps6.size() == 5);
    for (const auto& c : comps7) CHECK(isomorphic(induced_subgraph(g7, c).graph, cycle_graph(5)));
    for (const auto& c : comps6) CHECK(isomorphic(induced_subgraph(g6, c).graph, cycle_graph(5)));
}

TEST_CASE("peels along different cycles are isomorphic") {
    PeelSpec a;  // pentagon 4
    PeelSpec b;
    b.cycle = 1;
    PeelSpec c;
    c.part = HsPart::pentagrams;
    c.cycle = 2;
    CHECK(canonical_form(peel(a).graph) == canonical_form(peel(b).graph));
    CHECK(canonical_form(peel(a).graph) == canonical_form(peel(c).graph));
}

TEST_CASE("distance-3 classes of the order-45 peel") {
    auto p45 = peel(PeelSpec{});
    auto classes = distance3_classes(p45);

    VertexSet v6 = vertices_with_degree(p45.graph, 6);
    VertexSet all;
    for (const auto& cls : classes) {
        CHECK(cls.count() == 5);
        CHECK(cls.is_subset_of(v6));
        all |= cls;
    }
    CHECK(all == v6);

    for (const auto& cls : classes)
        for (int u : cls)
            for (int v : cls)
                if (u < v) CHECK(graph_distance(p45.graph, u, v) == 3);

    // every pair at distance > 2 lies inside one class
    for (int u = 0; u < 45; ++u) {
        for (int v = u + 1; v < 45; ++v) {
            if (graph_distance(p45.graph, u, v) <= 2) continue;
            bool together = false;
            for (const auto& cls : classes) together |= cls.contains(u) && cls.contains(v);
            CHECK(together);
        }
    }

    CHECK_THROWS_AS(distance3_classes(peel(PeelSpec{HsPart::pentagons, 4, 4})), std::invalid_argument);
}

TEST_CASE("adding a joined 5-cycle back to the 45-peel rebuilds HS") {
    auto p45 = peel(PeelSpec{});
    auto classes = distance3_classes(p45);

    Graph g(50);
    for (int u = 0; u < 45; ++u)
        for (int v : p45.graph.neighbourhood(u))
            if (v > u) g.add_edge(u, v);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(45 + i, 45 + (i + 1) % 5);
        for (int v : classes[static_cast<std::size_t>(i)]) g.add_edge(45 + i, v);
    }
    CHECK(isomorphic(g, hoffman_singleton().graph));
}

TEST_CASE("hs_minus_claw") {
    Graph g = hs_minus_claw();
    CHECK(g.order() == 46);
    CHECK(g.size() == 150);
    CHECK(girth_at_least_5(g));
    DegreeSequence s = degree_sequence(g);
    CHECK(s.min_degree() == 6);

    // the largest order-45 induced subgraph is one min-degree deletion away
    int largest = 0;
    for (int v = 0; v < 46; ++v) largest = std::max(largest, g.size() - g.degree(v));
    CHECK(largest == 144);

    // the choice of claw does not matter up to isomorphism: remove another
    // vertex with three pentagram neighbours of distinct blocks
    auto hs = hoffman_singleton();
    // c_3^(2) is joined to d_{l, 3+2l}; pick the pentagram blocks 0, 3, 4
    VertexSet other = VertexSet::of({HsLabeling::vertex_of({true, 2, 3}),
                                     HsLabeling::vertex_of({false, 0, 3}),
                                     HsLabeling::vertex_of({false, 3, 4}),
                                     HsLabeling::vertex_of({false, 4, 1})});
    Graph g2 = delete_vertices(hs.graph, other).graph;
    CHECK(g2.size() == 150);
    CHECK(isomorphic(g, g2));
}

TEST_CASE("extremal_graph reproduces the higher known values") {
    const int sizes[] = {120, 124, 129, 134, 139, 145, 150, 156, 162, 168, 175};
    for (int n = 40; n <= 50; ++n) {
        Graph g = extremal_graph(n);
        CHECK(g.order() == n);
        CHECK(g.size() == sizes[n - 40]);
        CHECK(girth_at_least_5(g));
    }
    CHECK(extremal_graph(44).size() == 5 * 44 - 81);
    CHECK(is_regular(extremal_graph(40), 6));
    CHECK_THROWS_AS(extremal_graph(51), std::invalid_argument);
    CHECK_THROWS_AS(extremal_graph(39), std::invalid_argument);
}

TEST_CASE("random girth-5 generators stay girth-5", "[property]") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        Graph a = random_girth5_graph(rng, 2 + static_cast<int>(rng() % 39), 300);
        CHECK(girth_at_least_5(a));
        Graph b = random_hs_subgraph(rng, static_cast<int>(rng() % 51));
        CHECK(girth_at_least_5(b));
    }
}
