#include "doctest.h"

#include "hbar/fixtures.hpp"
#include "hbar/graph.hpp"
#include "hbar/graph6.hpp"
#include "hbar/stab.hpp"
#include "oracles.hpp"

using namespace hbar;

TEST_CASE("graph6 decodes by hand") {
    // 'D' -> n = 5; '?' = 000000, '{' = 111100 over pairs (0,1),(0,2),(1,2),(0,3),...
    Graph g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(g) == "D?{");
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6("D?"), Error);
    CHECK_THROWS_AS(parse_graph6("D?|"), Error); // padding bit set
    CHECK_THROWS_AS(parse_graph6("X????????????????????????????????????????????"), Error);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(7);
    for (int t = 0; t < 1000; ++t) {
        Graph g = oracle::random_graph(rng, 1 + t % 12);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
    for (int n = 3; n <= 7; ++n)
        for (const auto& g : oracle::connected(n)) CHECK(parse_graph6(to_graph6(g)) == g);
}

TEST_CASE("fixture sizes") {
    CHECK(oracle::connected(3).size() == 2);
    CHECK(oracle::connected(4).size() == 6);
    CHECK(oracle::connected(5).size() == 21);
    CHECK(oracle::connected(6).size() == 112);
    CHECK(oracle::connected(7).size() == 853);
    CHECK(fixtures::g7().size() == 14);
    CHECK(fixtures::g15().order() == 15);
    CHECK(fixtures::g9().size() == 20);
}

TEST_CASE("join and disjoint union") {
    Graph k2 = join(Graph(1), Graph(1));
    CHECK(k2 == complete_graph(2));
    Graph w = join(Graph(1), fixtures::cycle(5));
    CHECK(w.order() == 6);
    CHECK(w.size() == 10);
    CHECK(isomorphic(w, fixtures::h_imperfect_c()));
    CHECK(disjoint_union(Graph(2), Graph(3)) == Graph(5));
    Graph cc = disjoint_union(fixtures::cycle(5), fixtures::cycle(5));
    CHECK(cc.order() == 10);
    CHECK(cc.size() == 10);
}

TEST_CASE("lexicographic product") {
    CHECK(lexicographic_product(complete_graph(2), complete_graph(2)) == complete_graph(4));
    // Doubling every C5 vertex as a copy gives the same graph up to relabeling.
    Graph lex = lexicographic_product(fixtures::cycle(5), Graph(2));
    Graph copied = fixtures::cycle(5);
    for (int v = 0; v < 5; ++v) copied = copy_vertex(copied, v);
    CHECK(lex.order() == 10);
    CHECK(isomorphic(lex, copied));
}

TEST_CASE("alpha identities under graph operations") {
    std::mt19937 rng(11);
    for (int t = 0; t < 25; ++t) {
        Graph a = oracle::random_graph(rng, 1 + t % 5), b = oracle::random_graph(rng, 1 + (t * 3) % 5);
        CHECK(oracle::brute_alpha(join(a, b)) == std::max(oracle::brute_alpha(a), oracle::brute_alpha(b)));
        CHECK(oracle::brute_alpha(disjoint_union(a, b)) == oracle::brute_alpha(a) + oracle::brute_alpha(b));
        Graph c = oracle::random_graph(rng, 1 + t % 4), d = oracle::random_graph(rng, 1 + (t * 7) % 4);
        CHECK(oracle::brute_alpha(lexicographic_product(c, d)) == oracle::brute_alpha(c) * oracle::brute_alpha(d));
    }
}

TEST_CASE("copy merges weights, split takes the max") {
    std::mt19937 rng(13);
    for (int t = 0; t < 25; ++t) {
        const int n = 2 + t % 4;
        Graph g = oracle::random_graph(rng, n);
        const int v = t % n;
        Weights w = oracle::random_weights(rng, n + 1);
        Weights merged(w.begin(), w.begin() + n);
        merged[v] += w[n];
        CHECK(oracle::brute_alpha(copy_vertex(g, v), w) == oracle::brute_alpha(g, merged));
        Weights maxed(w.begin(), w.begin() + n);
        maxed[v] = std::max(w[v], w[n]);
        CHECK(oracle::brute_alpha(split_vertex(g, v), w) == oracle::brute_alpha(g, maxed));
    }
}

TEST_CASE("split of a C5 vertex is the first h-imperfect graph") {
    CHECK(isomorphic(split_vertex(fixtures::cycle(5), 0), fixtures::h_imperfect_a()));
    CHECK(copy_vertex(Graph(1), 0) == Graph(2));
}

TEST_CASE("complement and induced subgraph") {
    CHECK(complement(fixtures::cycle(7)) == fixtures::anticycle(7));
    Graph g = fixtures::g7();
    CHECK(induced_subgraph(g, g.all()) == g);
    // Six strings of the PPT-entangled example, picked from G15 by label.
    auto strings = fixtures::two_qubit_strings();
    std::vector<int> pick;
    for (const char* s : {"IY", "XX", "YZ", "ZX", "ZY", "ZZ"})
        for (int i = 0; i < 15; ++i)
            if (strings[i].str() == s) pick.push_back(i);
    Graph sub = induced_subgraph(fixtures::g15(), pick);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int anti = 0;
            for (int q = 0; q < 2; ++q) {
                char a = strings[pick[i]].letter(q), b = strings[pick[j]].letter(q);
                anti += (a != 'I' && b != 'I' && a != b);
            }
            CHECK(sub.adjacent(i, j) == (i != j && anti % 2 == 1));
        }
}

TEST_CASE("induced subgraph search") {
    Graph c7b = fixtures::anticycle(7);
    auto e = find_induced_subgraph(c7b, c7b);
    REQUIRE(e);
    CHECK(*e == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK_FALSE(find_induced_subgraph(fixtures::cycle(7), c7b));
    auto f = find_induced_subgraph(fixtures::g15(), fixtures::h_imperfect_b());
    REQUIRE(f);
    Graph h = fixtures::h_imperfect_b();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j) CHECK(fixtures::g15().adjacent((*f)[i], (*f)[j]) == h.adjacent(i, j));
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        Graph host = oracle::random_graph(rng, 9), pat = oracle::random_graph(rng, 4);
        auto m = find_induced_subgraph(host, pat);
        if (!m) continue;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) CHECK(host.adjacent((*m)[i], (*m)[j]) == pat.adjacent(i, j));
    }
}

TEST_CASE("twins") {
    auto t = find_twins(complete_graph(3));
    REQUIRE(t);
    CHECK(complete_graph(3).adjacent(t->first, t->second));
    CHECK_FALSE(find_twins(fixtures::cycle(5)));
    auto c = find_twins(copy_vertex(fixtures::cycle(5), 0));
    REQUIRE(c);
    CHECK(*c == std::make_pair(0, 5));
}

TEST_CASE("vertex transitivity") {
    CHECK(is_vertex_transitive(fixtures::cycle(7)));
    CHECK(is_vertex_transitive(fixtures::anticycle(7)));
    CHECK_FALSE(is_vertex_transitive(fixtures::g7()));
    CHECK(is_vertex_transitive(fixtures::cycle(5)));
    CHECK_FALSE(is_vertex_transitive(path_graph(4)));
    CHECK_FALSE(is_vertex_transitive(fixtures::claw()));
}
