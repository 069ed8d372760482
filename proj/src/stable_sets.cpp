#include "hbar/stab.hpp"

#include <algorithm>

#include "hbar/error.hpp"

namespace hbar {

namespace {

// Bron-Kerbosch with pivoting; nbr(v) gives the neighbourhood in the graph
// whose cliques are wanted.
template <class Nbr>
void bron_kerbosch(Mask r, Mask p, Mask x, const Nbr& nbr, std::vector<Mask>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    for (Mask t = p | x; t; t &= t - 1) {
        int u = lowest(t);
        int c = popcount(p & nbr(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (Mask cand = p & ~nbr(pivot); cand; cand &= cand - 1) {
        int v = lowest(cand);
        Mask bit = Mask(1) << v;
        bron_kerbosch(r | bit, p & nbr(v), x & nbr(v), nbr, out);
        p &= ~bit;
        x |= bit;
    }
}

void all_stable(const Graph& g, Mask chosen, Mask allowed, std::vector<Mask>& out) {
    out.push_back(chosen);
    for (Mask t = allowed; t; t &= t - 1) {
        int v = lowest(t);
        // Only extend with vertices above v to avoid duplicates.
        Mask higher = t & ~((Mask(1) << (v + 1)) - 1);
        all_stable(g, chosen | (Mask(1) << v), higher & ~g.neighbors(v), out);
    }
}

} // namespace

std::vector<Mask> maximal_cliques(const Graph& g) {
    std::vector<Mask> out;
    if (g.order() == 0) return out;
    bron_kerbosch(0, g.all(), 0, [&](int v) { return g.neighbors(v); }, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Mask> all_stable_sets(const Graph& g) {
    std::vector<Mask> out;
    all_stable(g, 0, g.all(), out);
    std::sort(out.begin(), out.end());
    return out;
}

StableSetFamily enumerate_stable_sets(const Graph& g, bool include_all) {
    StableSetFamily fam;
    if (g.order() > 0) {
        const Mask full = g.all();
        bron_kerbosch(0, full, 0,
                      [&](int v) { return full & ~g.neighbors(v) & ~(Mask(1) << v); }, fam.maximal);
        std::sort(fam.maximal.begin(), fam.maximal.end());
    }
    if (include_all) fam.all = all_stable_sets(g);
    return fam;
}

void check_weights(const Graph& g, const Weights& w) {
    if (int(w.size()) != g.order())
        fail("DimMismatch", "weight vector length differs from the vertex count",
             std::to_string(w.size()) + " vs " + std::to_string(g.order()));
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] < 0) fail("NegativeWeight", "weights must be nonnegative", "index " + std::to_string(i));
}

AlphaResult alpha(const Graph& g, const Weights& w) {
    check_weights(g, w);
    AlphaResult best;
    best.value = 0;
    for (Mask s : enumerate_stable_sets(g).maximal) {
        Rational v = 0;
        for (Mask t = s; t; t &= t - 1) v += w[lowest(t)];
        if (v > best.value) {
            best.value = v;
            best.argmax = s;
        }
    }
    return best;
}

int alpha(const Graph& g) {
    int best = 0;
    for (Mask s : enumerate_stable_sets(g).maximal) best = std::max(best, popcount(s));
    return best;
}

double alpha_double(const Graph& g, const std::vector<double>& w) {
    if (int(w.size()) != g.order()) fail("DimMismatch", "weight vector length differs from the vertex count");
    double best = 0;
    for (Mask s : enumerate_stable_sets(g).maximal) {
        double v = 0;
        for (Mask t = s; t; t &= t - 1) v += w[lowest(t)];
        best = std::max(best, v);
    }
    return best;
}

} // namespace hbar
