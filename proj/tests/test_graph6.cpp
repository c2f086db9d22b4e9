#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "g5x/constructions.hpp"
#include "g5x/graph6.hpp"

using namespace g5x;

// Expected strings generated independently with networkx.
TEST_CASE("graph6 golden encodings") {
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})) == "Bw");
    CHECK(to_graph6(path_graph(4)) == "Ch");
    CHECK(to_graph6(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})) == "Cs");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(Graph(2)) == "A?");
    CHECK(to_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(to_graph6(petersen()) == "IheA@GUAo");

    const char* hs_g6 =
        "qhc?GC@@G??@?@??_@G????C??G??G??c??????G???_??@???H`ACGGO`A@ACGQCGO`WGO`As?aG_"
        "AG@CO?aG@CACPC?_oPCP?BOC_H??OCc@??H?Q?_@AOCc??oQOC_?E_OI@??@?gCA??@?gD???OgCA_"
        "??WI@OG??E_____??AAAB????CCEA???ACEAA???EB@@@???B?";
    CHECK(to_graph6(hoffman_singleton().graph) == hs_g6);
    CHECK(from_graph6(hs_g6) == hoffman_singleton().graph);
}

TEST_CASE("graph6 long form for orders 63 and 64") {
    std::string p63 = to_graph6(path_graph(63));
    CHECK(p63.substr(0, 4) == "~??~");
    CHECK(from_graph6(p63) == path_graph(63));

    std::string p64 = to_graph6(path_graph(64));
    CHECK(p64.substr(0, 4) == "~?@?");
    CHECK(from_graph6(p64) == path_graph(64));
}

TEST_CASE("graph6 round trip on random graphs", "[property]") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        int n = static_cast<int>(rng() % 40);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("D"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("Dhc!"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6(std::string(1, '\x1f')), std::invalid_argument);
    CHECK(from_graph6(">>graph6<<Dhc\n") == cycle_graph(5));
}

TEST_CASE("adjacency text round trip") {
    Graph g = Graph::from_edges(6, {{0, 1}, {2, 4}, {4, 5}});
    std::string text = to_adjacency_text(g);
    CHECK(from_adjacency_text(text) == g);

    CHECK(from_adjacency_text("0 1\n1 2\n") == path_graph(3));
    CHECK(from_adjacency_text("# order 4\n0 1\n1 2\n") == Graph::from_edges(4, {{0, 1}, {1, 2}}));
    CHECK(from_adjacency_text("# a comment\n0 1 # trailing\n1 2\n") == path_graph(3));
    CHECK_THROWS_AS(from_adjacency_text("0\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_adjacency_text("# order 2\n0 5\n"), std::invalid_argument);
}
