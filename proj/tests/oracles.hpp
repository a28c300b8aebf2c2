#pragma once

// Small independent reference implementations used to cross-check the
// production solvers.  Everything here is written for clarity over speed and
// only works on graphs small enough for full enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "drg/graph.hpp"
#include "drg/rng.hpp"

namespace oracle {

inline std::vector<std::uint32_t> adjacency_masks(const drg::Graph& g) {
    if (g.order() > 30) throw std::runtime_error("oracle graph too large");
    std::vector<std::uint32_t> adj(g.order(), 0);
    for (const auto& [u, w] : g.edges()) {
        adj[u] |= 1u << w;
        adj[w] |= 1u << u;
    }
    return adj;
}

// Exhaustive maximum cut: vertex n-1 is pinned to one side, every split of
// the rest is scored directly.
inline long max_cut(const drg::Graph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    auto adj = adjacency_masks(g);
    std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
    long best = 0;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        long cut = 0;
        std::uint32_t rest = mask;
        std::uint32_t other = full ^ mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            cut += std::popcount(adj[v] & other);
        }
        best = std::max(best, cut);
    }
    return best;
}

namespace detail {

inline long alpha_rec(const std::vector<std::uint32_t>& closed, std::uint32_t free) {
    if (!free) return 0;
    int v = std::countr_zero(free);
    long skip = alpha_rec(closed, free & ~(1u << v));
    long take = 1 + alpha_rec(closed, free & ~closed[v]);
    return std::max(skip, take);
}

inline int matching_rec(const std::vector<std::uint32_t>& adj, std::uint32_t covered, int n) {
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (!(covered & (1u << v))) {
            u = v;
            break;
        }
    }
    if (u < 0) return 0;
    int best = matching_rec(adj, covered | (1u << u), n);  // leave u exposed
    std::uint32_t free_nb = adj[u] & ~covered;
    while (free_nb) {
        int w = std::countr_zero(free_nb);
        free_nb &= free_nb - 1;
        best = std::max(best,
                        1 + matching_rec(adj, covered | (1u << u) | (1u << w), n));
    }
    return best;
}

}  // namespace detail

// Exhaustive maximum independent set by branching on the lowest free vertex.
inline long alpha(const drg::Graph& g) {
    auto adj = adjacency_masks(g);
    std::vector<std::uint32_t> closed(adj);
    for (int v = 0; v < g.order(); ++v) closed[v] |= 1u << v;
    std::uint32_t full = (g.order() == 32) ? 0xffffffffu : ((1u << g.order()) - 1);
    return detail::alpha_rec(closed, full);
}

// Exhaustive maximum matching by branching on the lowest uncovered vertex.
inline int max_matching(const drg::Graph& g) {
    auto adj = adjacency_masks(g);
    return detail::matching_rec(adj, 0, g.order());
}

// Seeded Erdos-Renyi style graph; edge probability in [0.15, 0.85].
inline drg::Graph random_graph(int n, drg::Rng& rng) {
    double p = 0.15 + 0.7 * rng.unit();
    std::vector<drg::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (rng.unit() < p) edges.push_back({u, w});
    return drg::Graph::from_edges(n, edges);
}

}  // namespace oracle
