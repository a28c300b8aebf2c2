#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drg/errors.hpp"
#include "drg/vertex_set.hpp"

namespace drg {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..v-1.  Immutable once built; the
// factory rejects loops, duplicate edges and out-of-range endpoints.
class Graph {
  public:
    static Graph from_edges(int v, const std::vector<Edge>& edges);

    int order() const { return v_; }
    long size() const { return static_cast<long>(e_); }

    std::span<const int> neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
    const VertexSet& neighbor_set(int u) const { return bits_[static_cast<std::size_t>(u)]; }
    int degree(int u) const { return static_cast<int>(adj_[static_cast<std::size_t>(u)].size()); }
    bool has_edge(int u, int w) const { return u != w && bits_[static_cast<std::size_t>(u)].contains(w); }

    // Degree if the graph is regular, otherwise nullopt.
    std::optional<int> regular_degree() const;

    // All edges as (u, w) with u < w, lexicographically sorted.
    std::vector<Edge> edges() const;

    bool is_connected() const;

    // Two-colorability; the graph need not be connected.
    bool is_bipartite() const;

  private:
    Graph() = default;
    int v_ = 0;
    long e_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> bits_;
};

// Distance value used for unreachable pairs.  Kept as a named constant so
// callers never test against a bare literal.
inline constexpr int kUnreachable = -1;

// All-pairs distances from per-vertex breadth-first search.
class DistanceMatrix {
  public:
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

    int n() const { return n_; }
    int at(int u, int w) const { return d_[static_cast<std::size_t>(u) * n_ + w]; }
    int& at(int u, int w) { return d_[static_cast<std::size_t>(u) * n_ + w]; }
    bool reachable(int u, int w) const { return at(u, w) != kUnreachable; }

    // Largest finite distance (0 for a single vertex).
    int max_finite() const;

  private:
    int n_;
    std::vector<int> d_;
};

DistanceMatrix distance_matrix(const Graph& g, int threads = 1);

// Distances from a single source.
std::vector<int> bfs_distances(const Graph& g, int source);

// Length of a shortest odd cycle, or nullopt when the graph is bipartite.
// Throws DisconnectedGraph on disconnected input.
std::optional<int> odd_girth(const Graph& g);

// Number of cycles of length len containing the edge (u, w).  Counts simple
// cycles; each cycle is counted once.  Throws EdgeNotPresent / BadParams.
long count_cycles_through_edge(const Graph& g, int u, int w, int len);

// Number of edges with exactly one endpoint in a.
long edge_boundary(const Graph& g, const VertexSet& a);

// Union of neighbourhoods of a, minus a itself.
VertexSet neighborhood(const Graph& g, const VertexSet& a);

struct Connectivity {
    int vertex;
    int edge;
};

// Vertex and edge connectivity via unit-capacity max-flow.
// Requires order >= 2; throws DisconnectedGraph when appropriate (both
// numbers are 0 only for disconnected input, which we report as an error).
Connectivity connectivity(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    // vertex_map[i] = original label of the subgraph's vertex i; increasing.
    std::vector<int> vertex_map;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Subgraph induced on { y : d(x, y) >= i }.  Throws DisconnectedGraph.
InducedSubgraph subgraph_at_distance_ge(const Graph& g, int x, int i);

// Balanced blow-up of an odd cycle: each of the g_len cycle positions becomes
// an independent set of m vertices, with complete joins between consecutive
// positions.  Vertex i*m + j is the j-th copy at position i.
// Throws EvenLength for even g_len, BadParams for g_len < 3 or m < 1.
Graph blowup_cycle(int g_len, int m);

// Number of connected components; fills comp[v] with component ids (0-based,
// in order of first appearance by smallest vertex).
int components(const Graph& g, std::vector<int>& comp);

// Components of g restricted to the complement of s; returns the number of
// odd-sized ones.
int odd_components_after_removal(const Graph& g, const VertexSet& s);

}  // namespace drg
