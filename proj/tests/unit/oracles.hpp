#pragma once

// Brute-force reference implementations used only by the tests.

#include <random>
#include <string>
#include <vector>

#include "hbar/error.hpp"
#include "hbar/graph.hpp"
#include "hbar/graph6.hpp"
#include "hbar/rational.hpp"

namespace oracle {

inline hbar::Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    hbar::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline bool independent(const hbar::Graph& g, unsigned s) {
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if ((s >> i & 1) && (s >> j & 1) && g.adjacent(i, j)) return false;
    return true;
}

inline hbar::Rational brute_alpha(const hbar::Graph& g, const hbar::Weights& w) {
    hbar::Rational best = 0;
    for (unsigned s = 0; s < (1u << g.order()); ++s) {
        if (!independent(g, s)) continue;
        hbar::Rational v = 0;
        for (int i = 0; i < g.order(); ++i)
            if (s >> i & 1) v += w[i];
        if (v > best) best = v;
    }
    return best;
}

inline int brute_alpha(const hbar::Graph& g) { return int(brute_alpha(g, hbar::unit_weights(g.order()))); }

inline hbar::Weights random_weights(std::mt19937& rng, int n, int maxw = 4) {
    std::uniform_int_distribution<int> d(0, maxw);
    hbar::Weights w;
    for (int i = 0; i < n; ++i) w.emplace_back(d(rng));
    return w;
}

inline std::vector<hbar::Graph> connected(int n) {
    return hbar::read_graph6_file(std::string(HBAR_TEST_DATA) + "/connected" + std::to_string(n) + ".g6");
}

} // namespace oracle
