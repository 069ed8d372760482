#include "hbar/stab.hpp"

#include <algorithm>
#include <numeric>

#include "hbar/error.hpp"
#include "hbar/exact_lp.hpp"

namespace hbar {

namespace {

using i64 = std::int64_t;

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) fail("Overflow", "facet coefficient overflow in double description");
    return r;
}

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) fail("Overflow", "facet coefficient overflow in double description");
    return r;
}

struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
        return r;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
};

// Homogenized inequality a0 + sum a_i x_i >= 0 with its tight vertex set.
struct Ray {
    std::vector<i64> a;
    Bits tight;
};

void reduce(std::vector<i64>& a) {
    i64 g = 0;
    for (i64 x : a) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (i64& x : a) x /= g;
}

i64 eval(const std::vector<i64>& a, Mask v) {
    i64 s = a[0];
    for (Mask t = v; t; t &= t - 1) s = checked_add(s, a[1 + lowest(t)]);
    return s;
}

} // namespace

bool Facet::operator<(const Facet& o) const {
    if (rhs != o.rhs) return rhs < o.rhs;
    return normal < o.normal;
}

StabPolytope stab_facets(const Graph& g) {
    const int n = g.order();
    if (n > 10) fail("SizeOverflow", "facet enumeration is limited to 10 vertices", "n=" + std::to_string(n));
    if (n == 0) fail("EmptyInput", "graph has no vertices");
    StabPolytope poly;
    poly.graph = g;
    poly.vertices = all_stable_sets(g);

    // Processing order: origin, unit vectors, then the rest lexicographically.
    std::vector<Mask> order{0};
    for (int i = 0; i < n; ++i) order.push_back(Mask(1) << i);
    for (Mask v : poly.vertices)
        if (popcount(v) >= 2) order.push_back(v);
    const std::size_t nv = order.size();

    std::vector<Ray> rays;
    for (int i = 0; i < n; ++i) {
        Ray r{std::vector<i64>(n + 1, 0), Bits(nv)};
        r.a[1 + i] = 1;
        for (int k = 0; k <= n; ++k)
            if (k != 1 + i) r.tight.set(k);
        rays.push_back(std::move(r));
    }
    {
        Ray r{std::vector<i64>(n + 1, -1), Bits(nv)};
        r.a[0] = 1;
        for (int k = 1; k <= n; ++k) r.tight.set(k);
        rays.push_back(std::move(r));
    }

    for (std::size_t k = n + 1; k < nv; ++k) {
        const Mask v = order[k];
        std::vector<i64> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = eval(rays[r].a, v);
            if (val[r] > 0)
                pos.push_back(r);
            else if (val[r] < 0)
                neg.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (val[r] == 0) rays[r].tight.set(k);
            continue;
        }
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (val[r] < 0) continue;
            Ray keep = rays[r];
            if (val[r] == 0) keep.tight.set(k);
            next.push_back(std::move(keep));
        }
        for (std::size_t p : pos)
            for (std::size_t q : neg) {
                Bits common = rays[p].tight & rays[q].tight;
                if (common.count() + 1 < std::size_t(n)) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && common.subset_of(rays[r].tight)) adjacent = false;
                if (!adjacent) continue;
                Ray nr{std::vector<i64>(n + 1), common};
                for (int i = 0; i <= n; ++i)
                    nr.a[i] = checked_add(checked_mul(val[p], rays[q].a[i]), checked_mul(-val[q], rays[p].a[i]));
                reduce(nr.a);
                nr.tight.set(k);
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
    }

    for (const auto& r : rays) {
        Facet f;
        f.rhs = r.a[0];
        for (int i = 0; i < n; ++i) f.normal.push_back(-r.a[1 + i]);
        poly.facets.push_back(std::move(f));
    }
    std::sort(poly.facets.begin(), poly.facets.end());
    return poly;
}

Mask facet_support(const Facet& f) {
    Mask s = 0;
    for (std::size_t i = 0; i < f.normal.size(); ++i)
        if (f.normal[i] != 0) s |= Mask(1) << i;
    return s;
}

bool is_trivial_facet(const Facet& f) { return f.rhs == 0; }

bool is_odd_hole(const Graph& g, Mask s) {
    const int k = popcount(s);
    if (k < 5 || k % 2 == 0) return false;
    for (Mask t = s; t; t &= t - 1)
        if (popcount(g.neighbors(lowest(t)) & s) != 2) return false;
    return connected_components(g, s).size() == 1;
}

FacetClass classify_facet(const Graph& g, const Facet& f) {
    FacetClass c;
    const Mask supp = facet_support(f);
    if (f.rhs == 0 && popcount(supp) == 1 && f.normal[lowest(supp)] == -1) {
        c.tag = FacetTag::Nonnegativity;
        return c;
    }
    for (auto x : f.normal)
        if (x != 0 && x != 1) return c;
    if (f.rhs == 1 && g.is_clique(supp)) {
        c.tag = FacetTag::Clique;
        return c;
    }
    const int k = popcount(supp);
    if (k % 2 == 1 && f.rhs == (k - 1) / 2 && is_odd_hole(g, supp)) {
        c.tag = FacetTag::OddHole;
        c.a = int(f.rhs);
    }
    return c;
}

std::vector<FacetClass> classify_facets(const StabPolytope& p) {
    std::vector<FacetClass> out;
    for (const auto& f : p.facets) out.push_back(classify_facet(p.graph, f));
    return out;
}

bool is_h_perfect(const StabPolytope& p) {
    for (const auto& c : classify_facets(p))
        if (c.tag == FacetTag::Other) return false;
    return true;
}

bool is_h_perfect(const Graph& g) { return is_h_perfect(stab_facets(g)); }

std::string tag_name(FacetTag t) {
    switch (t) {
    case FacetTag::Nonnegativity: return "nonnegativity";
    case FacetTag::Clique: return "clique";
    case FacetTag::OddHole: return "odd_hole";
    default: return "other";
    }
}

Membership point_membership(const StabPolytope& p, const std::vector<Rational>& x) {
    if (int(x.size()) != p.graph.order()) fail("DimMismatch", "point dimension differs from the vertex count");
    Membership m;
    for (const auto& f : p.facets) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < x.size(); ++i) lhs += f.normal[i] * x[i];
        Rational slack = Rational(f.rhs) - lhs;
        if (slack < 0) {
            m.inside = false;
            m.violated.push_back({f, slack});
        }
    }
    return m;
}

bool in_hull_lp(const StabPolytope& p, const std::vector<Rational>& x) {
    const int n = p.graph.order();
    if (int(x.size()) != n) fail("DimMismatch", "point dimension differs from the vertex count");
    const std::size_t k = p.vertices.size();
    ExactLp lp;
    lp.c.assign(k, 0);
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> row(k, 0);
        for (std::size_t j = 0; j < k; ++j)
            if ((p.vertices[j] >> i) & 1u) row[j] = 1;
        lp.add_row(std::move(row), Sense::Eq, x[i]);
    }
    lp.add_row(std::vector<Rational>(k, 1), Sense::Eq, 1);
    return solve_exact_lp(lp).status == LpStatus::Optimal;
}

Rational fractional_packing(const Graph& g) {
    if (g.order() > 12) fail("SizeOverflow", "fractional packing is limited to 12 vertices");
    ExactLp lp;
    lp.c.assign(g.order(), 1);
    for (Mask c : maximal_cliques(g)) {
        std::vector<Rational> row(g.order(), 0);
        for (Mask t = c; t; t &= t - 1) row[lowest(t)] = 1;
        lp.add_row(std::move(row), Sense::Le, 1);
    }
    return solve_exact_lp(lp).value;
}

} // namespace hbar
