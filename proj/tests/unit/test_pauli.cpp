#include "doctest.h"

#include "hbar/fixtures.hpp"
#include "hbar/gf2.hpp"
#include "hbar/pauli.hpp"
#include "oracles.hpp"

using namespace hbar;

namespace {

// Single-qubit Pauli letters anticommute iff both are non-identity and differ.
bool letters_anticommute(const std::string& a, const std::string& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += (a[i] != 'I' && b[i] != 'I' && a[i] != b[i]);
    return c % 2;
}

PauliString random_string(std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> d(0, 3);
    std::string s;
    for (int i = 0; i < len; ++i) s.push_back("IXYZ"[d(rng)]);
    return PauliString::parse(s);
}

} // namespace

TEST_CASE("gf2 rank") {
    CHECK(gf2_rank(Gf2Matrix::adjacency(complete_graph(3))) == 2);
    CHECK(gf2_rank(Gf2Matrix(4, 4)) == 0);
    CHECK(gf2_rank(Gf2Matrix::identity(5)) == 5);
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t)
        CHECK(gf2_rank(Gf2Matrix::adjacency(oracle::random_graph(rng, 1 + t % 14))) % 2 == 0);
}

TEST_CASE("complete tripartite graphs have rank at most two") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> part(1, 4);
    for (int t = 0; t < 30; ++t) {
        int a = part(rng), b = part(rng), c = part(rng);
        Graph g = join(join(Graph(a), Graph(b)), Graph(c));
        CHECK(gf2_rank(Gf2Matrix::adjacency(g)) <= 2);
    }
}

TEST_CASE("symplectic canonical form reconstructs") {
    auto check = [](const Graph& g) {
        Gf2Matrix a = Gf2Matrix::adjacency(g);
        SymplecticForm f = symplectic_canonical_form(a);
        CHECK(2 * f.k == gf2_rank(a));
        Gf2Matrix c = f.L.transpose() * a * f.L;
        Gf2Matrix expect(g.order(), g.order());
        for (int i = 0; i < f.k; ++i) {
            expect.set(2 * i, 2 * i + 1, true);
            expect.set(2 * i + 1, 2 * i, true);
        }
        CHECK(c == expect);
    };
    check(complete_graph(3));
    check(fixtures::cycle(5));
    check(fixtures::g15());
    SymplecticForm z = symplectic_canonical_form(Gf2Matrix(3, 3));
    CHECK(z.k == 0);
    CHECK(z.L == Gf2Matrix::identity(3));
    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) check(oracle::random_graph(rng, 2 + t % 12));
    Gf2Matrix bad = Gf2Matrix::identity(2);
    CHECK_THROWS_AS(symplectic_canonical_form(bad), Error);
}

TEST_CASE("anticommutation") {
    CHECK(anticommutes(PauliString::parse("X"), PauliString::parse("Z")));
    CHECK_FALSE(anticommutes(PauliString::parse("XX"), PauliString::parse("YY")));
    CHECK_THROWS_AS(anticommutes(PauliString::parse("X"), PauliString::parse("XX")), Error);
    auto s = fixtures::g9_strings();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            CHECK(anticommutes(s[i], s[j]) == letters_anticommute(s[i].str(), s[j].str()));
    CHECK(PauliString::parse("\xF0\x9D\x9F\x99Y").str() == "IY");
}

TEST_CASE("frustration graphs of small string sets") {
    CHECK(frustration_graph(parse_strings({"X", "Y", "Z"})) == complete_graph(3));
    CHECK(frustration_graph(parse_strings({"XXI", "YYI", "ZZZ"})) == Graph(3));
    // The nine four-qubit strings give the 20-edge example graph with the
    // weight-2 vertices mapped onto two vertices of equal role.
    Graph g9 = fixtures::g9();
    Graph drawn(9, {{0, 2}, {0, 3}, {0, 4}, {0, 6}, {0, 7}, {0, 8}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
                    {1, 8}, {2, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 8}, {4, 7}, {4, 8}, {5, 8}, {7, 8}});
    CHECK(isomorphic(g9, drawn));
}

TEST_CASE("dense rendering") {
    CMatrix x = to_dense(PauliString::parse("X"));
    CHECK(std::abs(x(0, 1) - cplx(1)) < 1e-15);
    CHECK(std::abs(x(0, 0)) < 1e-15);
    CMatrix y = to_dense(PauliString::parse("Y"));
    CHECK(std::abs(y(0, 1) - cplx(0, -1)) < 1e-15);
    CHECK(std::abs(y(1, 0) - cplx(0, 1)) < 1e-15);
    CMatrix zi = to_dense(PauliString::parse("ZI"));
    CHECK(std::abs(zi(2, 2) - cplx(-1)) < 1e-15);
    std::mt19937 rng(21);
    for (int t = 0; t < 40; ++t) {
        PauliString p = random_string(rng, 1 + t % 4);
        CMatrix d = to_dense(p);
        CHECK((d * d - CMatrix::Identity(d.rows(), d.cols())).norm() < 1e-12);
        CHECK((d - d.adjoint()).norm() < 1e-12);
    }
    for (int t = 0; t < 60; ++t) {
        int len = 1 + t % 3;
        PauliString p = random_string(rng, len), q = random_string(rng, len);
        CMatrix a = to_dense(p), b = to_dense(q);
        CHECK(anticommutes(p, q) == ((a * b + b * a).norm() < 1e-12));
    }
    CHECK_THROWS_AS(to_dense(PauliString::parse("XXXXXXX")), Error);
}

TEST_CASE("minimal realization") {
    Realization k3 = realize_min(complete_graph(3));
    CHECK(k3.length() == 1);
    Realization e = realize_min(Graph(4));
    CHECK(e.length() == 1);
    for (const auto& s : e.strings()) CHECK(s.str() == "Z");
    Realization r15 = realize_min(fixtures::g15());
    CHECK(r15.length() == 2);
    std::vector<std::string> seen;
    for (const auto& s : r15.strings()) {
        CHECK(s.str() != "II");
        seen.push_back(s.str());
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
    for (int n = 3; n <= 7; ++n)
        for (const auto& g : oracle::connected(n)) {
            Realization r = realize_min(g);
            CHECK(frustration_graph(r.strings()) == g);
            CHECK(r.length() == std::max(1, gf2_rank(Gf2Matrix::adjacency(g)) / 2));
        }
}
