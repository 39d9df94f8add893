#include "doctest.h"

#include <random>
#include <sstream>

#include "derange/cayley.hpp"
#include "derange/enumeration.hpp"

using namespace derange;

TEST_CASE("rank and unrank") {
    CHECK(perm_rank(Permutation::identity(5)) == 0);
    CHECK(perm_rank(Permutation::from_one_line({5, 4, 3, 2, 1})) == factorial(5) - 1);
    CHECK(perm_unrank(0, 4) == Permutation::identity(4));
    CHECK_THROWS_AS(perm_unrank(24, 4), std::out_of_range);
    std::mt19937 rng(4242);
    std::vector<int> line{1, 2, 3, 4, 5, 6, 7};
    for (int i = 0; i < 1000; ++i) {
        std::shuffle(line.begin(), line.end(), rng);
        auto p = Permutation::from_one_line(line);
        CHECK(perm_unrank(perm_rank(p), 7) == p);
    }
}

TEST_CASE("connection set basics") {
    CayleyGraph g(4, 2);
    CHECK(g.vertex_count() == 24);
    CHECK(g.degree() == 14);
    CHECK(g.edge_count() == 168);
    for (const auto& s : g.connection_set()) {
        CHECK_FALSE(s.is_identity());
        CHECK(is_k_derangement(s, 2));
        CHECK(g.in_connection_set(inverse(s)));
    }
}

TEST_CASE("adjacency") {
    CayleyGraph g(5, 2);
    auto u = Permutation::from_one_line({2, 3, 1, 4, 5});
    auto v = Permutation::from_one_line({4, 1, 3, 5, 2});
    CHECK_FALSE(g.adjacent(u, v));
    CHECK_FALSE(position_agreement_adjacent(u, v, 2));

    CayleyGraph g4(4, 2);
    auto e = Permutation::identity(4);
    auto c = Permutation::from_cycles("(1 2 3 4)", 4);
    CHECK(g4.adjacent(e, c));
    CHECK(position_agreement_adjacent(e, c, 2));
    CHECK_FALSE(g4.adjacent(e, e));
    // adjacency at the identity is connection-set membership
    std::vector<int> line{1, 2, 3, 4};
    do {
        auto sigma = Permutation::from_one_line(line);
        CHECK(g4.adjacent(e, sigma) == (!sigma.is_identity() && is_k_derangement(sigma, 2)));
    } while (std::next_permutation(line.begin(), line.end()));
}

TEST_CASE("position-agreement oracle matches adjacency, n <= 4 exhaustive") {
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k < n; ++k) {
            CayleyGraph g(n, k);
            for (std::uint64_t ru = 0; ru < g.vertex_count(); ++ru)
                for (std::uint64_t rv = ru + 1; rv < g.vertex_count(); ++rv) {
                    auto u = perm_unrank(ru, n), v = perm_unrank(rv, n);
                    CHECK(g.adjacent(u, v) == position_agreement_adjacent(u, v, k));
                }
        }
    }
}

TEST_CASE("quotient convention independence") {
    std::mt19937 rng(99);
    CayleyGraph g(5, 2);
    for (int trial = 0; trial < 400; ++trial) {
        auto u = perm_unrank(rng() % 120, 5);
        auto v = perm_unrank(rng() % 120, 5);
        if (u == v) continue;
        const bool a = is_k_derangement(compose(v, inverse(u)), 2);
        CHECK(a == is_k_derangement(compose(u, inverse(v)), 2));
        CHECK(a == is_k_derangement(compose(inverse(u), v), 2));
        CHECK(a == is_k_derangement(compose(inverse(v), u), 2));
        CHECK(a == g.adjacent(u, v));
        CHECK(a == g.adjacent(v, u));
    }
}

TEST_CASE("explicit matrix: regularity and symmetry") {
    for (int n : {4, 5}) {
        for (int k = 1; k < n; ++k) {
            CayleyGraph g(n, k, true);
            REQUIRE(g.has_explicit_matrix());
            for (std::uint64_t u = 0; u < g.vertex_count(); ++u) {
                std::uint64_t deg = 0;
                for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
                    if (g.adjacent_ranks(u, v)) {
                        ++deg;
                        CHECK(g.adjacent_ranks(v, u));
                    }
                }
                CHECK(deg == g.degree());
            }
        }
    }
}

TEST_CASE("edge sets coincide for k and n-k") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(CayleyGraph(n, k, true).same_edges(CayleyGraph(n, n - k, true)));
    CHECK(CayleyGraph(6, 2).same_edges(CayleyGraph(6, 4)));
}

TEST_CASE("connected components") {
    auto c23 = CayleyGraph(3, 2).connected_components();
    CHECK(c23.count == 2);
    CHECK(c23.sizes == std::vector<std::uint64_t>{3, 3});
    CHECK(CayleyGraph(2, 1).connected_components().count == 1);
    CHECK(CayleyGraph(5, 2).connected_components().count == 1);
    auto c13 = CayleyGraph(3, 1).connected_components();
    CHECK(c13.count == 2);
}

TEST_CASE("Eulerian status") {
    CHECK(CayleyGraph(4, 2).is_eulerian());
    CHECK_FALSE(CayleyGraph(4, 1).is_eulerian());
    CHECK_FALSE(CayleyGraph(3, 2).is_eulerian()); // disconnected triangles
    CHECK(count_k_derangements(1, 4) == 9);       // odd degree behind the n=4, k=1 case
}

TEST_CASE("factorization of adjacent transpositions") {
    auto [d1, d2] = factor_adjacent_transposition(4, 2, 1);
    CHECK(d1 == Permutation::from_cycles("(1 4 3 2)", 4));
    CHECK(d2 == Permutation::from_cycles("(1 3 4)", 4));
    CHECK(compose(d1, d2) == Permutation::from_cycles("(1 2)", 4));

    auto [e1, e2] = factor_adjacent_transposition(4, 1, 1);
    CHECK(e1 == Permutation::from_cycles("(1 3)(2 4)", 4));
    CHECK(compose(e1, e2) == Permutation::from_cycles("(1 2)", 4));
    CHECK(is_k_derangement(e1, 1));
    CHECK(is_k_derangement(e2, 1));

    for (int n = 4; n <= 7; ++n)
        for (int k = 1; k < n; ++k)
            for (int h = 1; h < n; ++h) {
                auto [f1, f2] = factor_adjacent_transposition(n, k, h);
                CHECK(is_k_derangement(f1, k));
                CHECK(is_k_derangement(f2, k));
                std::ostringstream want;
                want << "(" << h << " " << h + 1 << ")";
                CHECK(compose(f1, f2) == Permutation::from_cycles(want.str(), n));
            }
    CHECK_THROWS_AS(factor_adjacent_transposition(3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(factor_adjacent_transposition(5, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(factor_adjacent_transposition(5, 2, 5), std::invalid_argument);
}

TEST_CASE("graph export") {
    std::ostringstream dimacs;
    CayleyGraph(3, 2).export_graph(GraphFormat::dimacs, dimacs);
    std::istringstream in(dimacs.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "p edge 6 6");
    int edge_lines = 0;
    for (std::string line; std::getline(in, line);) {
        CHECK(line.rfind("e ", 0) == 0);
        ++edge_lines;
    }
    CHECK(edge_lines == 6);

    std::ostringstream edges;
    CayleyGraph(2, 1).export_graph(GraphFormat::edges, edges);
    CHECK(edges.str() == "1 2\n");

    CHECK(CayleyGraph(4, 2).edge_count() == 168);

    std::ostringstream js;
    CayleyGraph(3, 1).export_graph(GraphFormat::json, js);
    CHECK(js.str().find("\"vertices\":6") != std::string::npos);
}
