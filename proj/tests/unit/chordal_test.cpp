#include "grundy/chordal.hpp"

#include "grundy/generate.hpp"
#include "grundy/oracle.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace grundy;

TEST_CASE("is_simplicial") {
    const Graph p3 = path_graph(3);
    CHECK(is_simplicial(p3, 0));
    CHECK_FALSE(is_simplicial(p3, 1)); // neighbors 0 and 2 are not adjacent
    CHECK(is_simplicial(p3, 2));

    const Graph k4 = complete_graph(4);
    for (int v = 0; v < 4; ++v) CHECK(is_simplicial(k4, v));

    const Graph isolated = Graph::from_edges(2, {});
    CHECK(is_simplicial(isolated, 0)); // empty neighborhood is a clique

    CHECK_THROWS_AS(is_simplicial(p3, 9), GraphError);
}

TEST_CASE("simplicial_vertices") {
    CHECK(simplicial_vertices(path_graph(4)) == std::vector<int>{0, 3});
    CHECK(simplicial_vertices(cycle_graph(4)).empty());
    // Existence on nonempty chordal graphs.
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK_FALSE(simplicial_vertices(fixtures::random_ktree(12, 2, seed)).empty());
}

TEST_CASE("perfect_elimination_order on small graphs") {
    SUBCASE("complete graph peels in id order") {
        const PeelResult r = perfect_elimination_order(complete_graph(3));
        CHECK(r.chordal);
        CHECK(r.order == std::vector<int>{0, 1, 2});
    }
    SUBCASE("C4 is stuck immediately") {
        const PeelResult r = perfect_elimination_order(cycle_graph(4));
        CHECK_FALSE(r.chordal);
        CHECK(r.residual == std::vector<int>{0, 1, 2, 3});
        CHECK(r.order.empty());
    }
    SUBCASE("empty graph is chordal with the empty order") {
        const PeelResult r = perfect_elimination_order(Graph(0));
        CHECK(r.chordal);
        CHECK(r.order.empty());
    }
}

TEST_CASE("the six-vertex wave example") {
    const Graph g = fixtures::wave_example();
    // Labels a..f are ids 0..5.
    const WaveResult w = elimination_waves(g);
    REQUIRE(w.chordal);
    REQUIRE(w.waves.size() == 3);
    CHECK(w.waves[0] == std::vector<int>{1, 2}); // {b, c}
    CHECK(w.waves[1] == std::vector<int>{3, 5}); // {d, f}
    CHECK(w.waves[2] == std::vector<int>{0, 4}); // {a, e}

    const PeelResult p = perfect_elimination_order(g);
    REQUIRE(p.chordal);
    CHECK(p.order == std::vector<int>{1, 2, 3, 0, 4, 5});
    CHECK(verify_peo(g, p.order));

    // Concatenated waves also form a valid elimination order.
    std::vector<int> wave_order;
    for (const auto& wave : w.waves)
        wave_order.insert(wave_order.end(), wave.begin(), wave.end());
    CHECK(verify_peo(g, wave_order));
}

TEST_CASE("verify_peo") {
    CHECK(verify_peo(complete_graph(3), std::vector<int>{0, 1, 2}));
    // Vertex 1 of P3 has later neighbors {0, 2}, which are not adjacent.
    CHECK_FALSE(verify_peo(path_graph(3), std::vector<int>{1, 0, 2}));
    CHECK_THROWS_AS(verify_peo(path_graph(3), std::vector<int>{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(verify_peo(path_graph(3), std::vector<int>{0, 1, 1}),
                    std::invalid_argument);
}

TEST_CASE("producer contract: verify_peo accepts every produced order") {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 3);
        const int n = k + 2 + static_cast<int>(rng() % 20);
        const Graph g = k_tree(n, k, rng);
        const PeelResult r = perfect_elimination_order(g);
        REQUIRE(r.chordal);
        CHECK(verify_peo(g, r.order));
    }
}

TEST_CASE("is_chordal on fixed families") {
    CHECK(is_chordal(path_graph(7))); // trees have no cycles at all
    CHECK(is_chordal(star_graph(8)));
    CHECK(is_chordal(complete_graph(5)));
    CHECK_FALSE(is_chordal(cycle_graph(4)));
    CHECK_FALSE(is_chordal(cycle_graph(5)));
    CHECK_FALSE(is_chordal(cycle_graph(6)));
}

TEST_CASE("C5 with chords, frozen against the induced-cycle oracle") {
    // One chord leaves the induced 4-cycle {0,2,3,4}: still not chordal.
    Graph one_chord = cycle_graph(5);
    one_chord.add_edge(0, 2);
    CHECK_FALSE(oracle::is_chordal_by_definition(one_chord));
    CHECK_FALSE(is_chordal(one_chord));

    // A second chord from the same vertex triangulates the pentagon.
    Graph two_chords = one_chord;
    two_chords.add_edge(0, 3);
    CHECK(oracle::is_chordal_by_definition(two_chords));
    CHECK(is_chordal(two_chords));
}

TEST_CASE("peel and definitional oracle agree exhaustively for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t end = edge_mask_limit(n);
        for (std::uint64_t mask = 0; mask < end; ++mask) {
            const Graph g = graph_from_edge_mask(n, mask);
            CHECK(is_chordal(g) == oracle::is_chordal_by_definition(g));
        }
    }
}

TEST_CASE("peel and definitional oracle agree on random graphs n = 6..8") {
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 6 + trial % 3;
        const double p = 0.3 + 0.2 * (trial % 3);
        const Graph g = gnp(n, p, rng);
        CHECK(is_chordal(g) == oracle::is_chordal_by_definition(g));
    }
}

TEST_CASE("chordality is hereditary under induced subgraphs") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = k_tree(10, 2, rng);
        std::vector<int> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng() % 2) keep.push_back(v);
        CHECK(is_chordal(induced_subgraph(g, keep).graph));
    }
}

TEST_CASE("non-complete chordal graphs have two non-adjacent simplicial vertices") {
    Rng rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 3);
        const int n = k + 2 + static_cast<int>(rng() % 15);
        const Graph g = k_tree(n, k, rng);
        const auto simp = simplicial_vertices(g);
        REQUIRE(simp.size() >= 2);
        bool nonadjacent_pair = false;
        for (std::size_t i = 0; i < simp.size() && !nonadjacent_pair; ++i)
            for (std::size_t j = i + 1; j < simp.size() && !nonadjacent_pair; ++j)
                if (!g.has_edge(simp[i], simp[j])) nonadjacent_pair = true;
        CHECK(nonadjacent_pair);
    }
}

TEST_CASE("is_split") {
    CHECK(is_split(complete_graph(4))); // S empty, C everything
    CHECK_FALSE(is_split(cycle_graph(4)));
    CHECK_FALSE(is_split(cycle_graph(5))); // complement of C5 is C5 again
    CHECK(is_split(star_graph(5)));
}

TEST_CASE("max_clique_chordal") {
    CHECK(max_clique_chordal(complete_graph(4)).size == 4);
    CHECK(max_clique_chordal(path_graph(6)).size == 2);
    CHECK_THROWS_AS(max_clique_chordal(cycle_graph(4)), NotChordalError);

    SUBCASE("witness really is a clique") {
        Rng rng(43);
        for (int trial = 0; trial < 20; ++trial) {
            const Graph g = k_tree(12, 1 + static_cast<int>(rng() % 3), rng);
            const CliqueResult c = max_clique_chordal(g);
            for (std::size_t i = 0; i < c.members.size(); ++i)
                for (std::size_t j = i + 1; j < c.members.size(); ++j)
                    CHECK(g.has_edge(c.members[i], c.members[j]));
            CHECK(static_cast<int>(c.members.size()) == c.size);
        }
    }
    SUBCASE("k-trees have clique number k+1, cross-checked by brute force") {
        // omega(g) equals alpha of the complement.
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const int k = 1 + static_cast<int>(seed % 3);
            const Graph g = fixtures::random_ktree(8 + static_cast<int>(seed % 3), k, seed);
            const CliqueResult c = max_clique_chordal(g);
            CHECK(c.size == k + 1);
            CHECK(c.size == oracle::independence_number_exact(complement(g)));
        }
    }
}
