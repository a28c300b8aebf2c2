#pragma once

#include <cstdint>
#include <optional>

#include "drg/graph.hpp"

namespace drg {

struct SolverBudget {
    double time_limit_s = 60.0;
    std::uint64_t node_limit = 10'000'000;
    std::uint64_t seed = 0;
};

struct CutResult {
    VertexSet side;    // one side of the partition (vertex 0 is never in it)
    long value = 0;    // number of crossing edges
    bool proved = false;
    std::uint64_t nodes = 0;
};

// Exact maximum cut by branch and bound.  Vertices are assigned in a fixed
// ascending order with vertex 0 pinned to the first side; the bound adds,
// for each unassigned vertex, the larger of its edge counts into the two
// assigned sides, plus all edges between unassigned vertices.  When the
// budget runs out the incumbent is returned with proved = false.
CutResult max_cut_exact(const Graph& g, const SolverBudget& budget = {});

// Seeded multi-restart single-flip hill climbing.  Never returns a value
// above the true maximum (the result is a realized cut).  Restart 0 starts
// from a breadth-first 2-coloring, so bipartite graphs always reach e.
CutResult max_cut_local_search(const Graph& g, const SolverBudget& budget = {},
                               int restarts = 64);

struct AlphaResult {
    VertexSet witness;
    long alpha = 0;
    bool proved = false;
    std::uint64_t nodes = 0;
};

// Exact independence number: branch and bound on the highest-degree vertex
// with degree-0/1 removal and degree-2 folding, pruned by a greedy clique
// cover.  The witness is reconstructed through the fold history and verified
// independent before returning.
AlphaResult independence_number_exact(const Graph& g, const SolverBudget& budget = {});

}  // namespace drg
