#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hbar {

using Mask = std::uint32_t;

inline constexpr int kMaxVertices = 24;

// Simple undirected graph, adjacency stored as one bit row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const;

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
    Mask neighbors(int v) const { return rows_[v]; }
    int degree(int v) const;
    Mask all() const { return n_ == 32 ? ~Mask(0) : ((Mask(1) << n_) - 1); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::vector<std::pair<int, int>> edges() const;
    std::vector<std::vector<int>> adjacency_matrix() const;
    bool is_stable(Mask s) const;
    bool is_clique(Mask s) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_ = 0;
    std::vector<Mask> rows_;
};

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);
Graph induced_subgraph(const Graph& g, Mask verts);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
// H replaces every vertex of G; vertex (v, h) has index v * |H| + h.
Graph lexicographic_product(const Graph& g, const Graph& h);
// New vertex n with N(n) = N(v).
Graph copy_vertex(const Graph& g, int v);
// New vertex n with N(n) = N(v) + {v}.
Graph split_vertex(const Graph& g, int v);

std::vector<Mask> connected_components(const Graph& g, Mask within);
std::vector<Mask> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Embedding of pattern H as an induced subgraph of G (phi[h] = vertex of G).
std::optional<std::vector<int>> find_induced_subgraph(const Graph& host, const Graph& pattern);

// First pair u < v with N(u) \ {v} == N(v) \ {u}.
std::optional<std::pair<int, int>> find_twins(const Graph& g);

bool is_vertex_transitive(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline int lowest(Mask m) { return __builtin_ctz(m); }

} // namespace hbar
