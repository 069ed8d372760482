#include "hbar/graph.hpp"

#include <algorithm>
#include <numeric>

#include "hbar/error.hpp"

namespace hbar {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices)
        fail("TooLarge", "graph order must be in [0, 24]", "n=" + std::to_string(n));
}

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        fail("BadVertex", "vertex index out of range", "v=" + std::to_string(v));
}

} // namespace

Graph::Graph(int n) : n_(n) {
    check_order(n);
    rows_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
    int m = 0;
    for (Mask r : rows_) m += popcount(r);
    return m / 2;
}

int Graph::degree(int v) const { return popcount(rows_[v]); }

void Graph::add_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) fail("SelfLoop", "self loops are not allowed", "v=" + std::to_string(u));
    rows_[u] |= Mask(1) << v;
    rows_[v] |= Mask(1) << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    rows_[u] &= ~(Mask(1) << v);
    rows_[v] &= ~(Mask(1) << u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> Graph::adjacency_matrix() const {
    std::vector<std::vector<int>> a(n_, std::vector<int>(n_, 0));
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) a[u][v] = adjacent(u, v);
    return a;
}

bool Graph::is_stable(Mask s) const {
    for (Mask t = s; t; t &= t - 1)
        if (rows_[lowest(t)] & s) return false;
    return true;
}

bool Graph::is_clique(Mask s) const {
    for (Mask t = s; t; t &= t - 1) {
        int v = lowest(t);
        if (((rows_[v] | (Mask(1) << v)) & s) != s) return false;
    }
    return true;
}

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph h(static_cast<int>(verts.size()));
    for (int v : verts) check_vertex(g, v);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (verts[i] == verts[j]) fail("BadVertex", "duplicate vertex in subset");
            if (g.adjacent(verts[i], verts[j])) h.add_edge(int(i), int(j));
        }
    return h;
}

Graph induced_subgraph(const Graph& g, Mask verts) {
    std::vector<int> vs;
    for (Mask t = verts; t; t &= t - 1) vs.push_back(lowest(t));
    return induced_subgraph(g, vs);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.order();
    Graph g(na + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
    const int m = h.order();
    Graph p(g.order() * m);
    for (int u = 0; u < g.order(); ++u)
        for (int a = 0; a < m; ++a)
            for (int v = 0; v < g.order(); ++v)
                for (int b = 0; b < m; ++b) {
                    int x = u * m + a, y = v * m + b;
                    if (x >= y) continue;
                    if (g.adjacent(u, v) || (u == v && h.adjacent(a, b))) p.add_edge(x, y);
                }
    return p;
}

Graph copy_vertex(const Graph& g, int v) {
    check_vertex(g, v);
    const int n = g.order();
    Graph c(n + 1);
    for (auto [a, b] : g.edges()) c.add_edge(a, b);
    for (int u = 0; u < n; ++u)
        if (g.adjacent(v, u)) c.add_edge(n, u);
    return c;
}

Graph split_vertex(const Graph& g, int v) {
    Graph c = copy_vertex(g, v);
    c.add_edge(g.order(), v);
    return c;
}

std::vector<Mask> connected_components(const Graph& g, Mask within) {
    std::vector<Mask> comps;
    Mask left = within;
    while (left) {
        Mask comp = Mask(1) << lowest(left), frontier = comp;
        while (frontier) {
            int v = lowest(frontier);
            frontier &= frontier - 1;
            Mask nb = g.neighbors(v) & within & ~comp;
            comp |= nb;
            frontier |= nb;
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

std::vector<Mask> connected_components(const Graph& g) { return connected_components(g, g.all()); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

// Injective map pattern -> host preserving adjacency and non-adjacency.
struct Embedder {
    const Graph& host;
    const Graph& pat;
    std::vector<int> order;
    std::vector<int> phi;
    Mask used = 0;

    Embedder(const Graph& h, const Graph& p) : host(h), pat(p), phi(p.order(), -1) {
        // Connected-first ordering keeps the adjacency checks early.
        const int n = p.order();
        std::vector<char> placed(n, 0);
        for (int k = 0; k < n; ++k) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int w : order) links += p.adjacent(v, w);
                int deg = p.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    bool extend(std::size_t k) {
        if (k == order.size()) return true;
        const int v = order[k];
        if (phi[v] >= 0) return consistent(v, phi[v]) && extend(k + 1);
        for (int x = 0; x < host.order(); ++x) {
            if ((used >> x) & 1u) continue;
            if (host.degree(x) < pat.degree(v)) continue;
            if (!consistent(v, x)) continue;
            phi[v] = x;
            used |= Mask(1) << x;
            if (extend(k + 1)) return true;
            used &= ~(Mask(1) << x);
            phi[v] = -1;
        }
        return false;
    }

    bool consistent(int v, int x) const {
        for (int w = 0; w < pat.order(); ++w) {
            if (w == v || phi[w] < 0) continue;
            if (pat.adjacent(v, w) != host.adjacent(x, phi[w])) return false;
        }
        return true;
    }
};

} // namespace

std::optional<std::vector<int>> find_induced_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return std::nullopt;
    Embedder e(host, pattern);
    if (e.extend(0)) return e.phi;
    return std::nullopt;
}

std::optional<std::pair<int, int>> find_twins(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            Mask a = g.neighbors(u) & ~(Mask(1) << v);
            Mask b = g.neighbors(v) & ~(Mask(1) << u);
            if (a == b) return std::make_pair(u, v);
        }
    return std::nullopt;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return find_induced_subgraph(b, a).has_value();
}

bool is_vertex_transitive(const Graph& g) {
    const int n = g.order();
    if (n > 12) fail("TooLarge", "vertex transitivity is limited to 12 vertices", "n=" + std::to_string(n));
    for (int v = 1; v < n; ++v) {
        if (g.degree(v) != g.degree(0)) return false;
        Embedder e(g, g);
        // Pin 0 -> v by putting vertex 0 first.
        e.order.erase(std::find(e.order.begin(), e.order.end(), 0));
        e.order.insert(e.order.begin(), 0);
        e.phi[0] = v;
        e.used = Mask(1) << v;
        if (!e.extend(0)) return false;
    }
    return true;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

} // namespace hbar
