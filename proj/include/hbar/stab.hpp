#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hbar/graph.hpp"
#include "hbar/rational.hpp"

namespace hbar {

struct StableSetFamily {
    std::vector<Mask> maximal;
    std::vector<Mask> all; // filled only on request; includes the empty set
};

StableSetFamily enumerate_stable_sets(const Graph& g, bool include_all = false);
std::vector<Mask> maximal_cliques(const Graph& g);
std::vector<Mask> all_stable_sets(const Graph& g);

struct AlphaResult {
    Rational value;
    Mask argmax = 0;
};

void check_weights(const Graph& g, const Weights& w);
AlphaResult alpha(const Graph& g, const Weights& w);
int alpha(const Graph& g);
double alpha_double(const Graph& g, const std::vector<double>& w);

// normal . x <= rhs, gcd-reduced, rhs >= 0.
struct Facet {
    std::vector<std::int64_t> normal;
    std::int64_t rhs = 0;
    bool operator==(const Facet& o) const = default;
    bool operator<(const Facet& o) const;
};

enum class FacetTag { Nonnegativity, Clique, OddHole, Other };

struct FacetClass {
    FacetTag tag = FacetTag::Other;
    int a = 0; // odd hole on 2a+1 vertices
};

std::string tag_name(FacetTag t);

struct StabPolytope {
    Graph graph;
    std::vector<Mask> vertices;
    std::vector<Facet> facets;
};

StabPolytope stab_facets(const Graph& g);

// Support of the facet normal as a vertex mask.
Mask facet_support(const Facet& f);
bool is_trivial_facet(const Facet& f);
FacetClass classify_facet(const Graph& g, const Facet& f);
std::vector<FacetClass> classify_facets(const StabPolytope& p);
bool is_h_perfect(const StabPolytope& p);
bool is_h_perfect(const Graph& g);

bool is_odd_hole(const Graph& g, Mask s);
bool is_perfect(const Graph& g);

Rational fractional_packing(const Graph& g);

struct Violation {
    Facet facet;
    Rational slack; // rhs - normal . x (negative)
};

struct Membership {
    bool inside = true;
    std::vector<Violation> violated;
};

Membership point_membership(const StabPolytope& p, const std::vector<Rational>& x);
// Independent check: x is a convex combination of the stable-set vectors (exact LP).
bool in_hull_lp(const StabPolytope& p, const std::vector<Rational>& x);

} // namespace hbar
