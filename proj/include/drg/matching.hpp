#pragma once

#include <optional>
#include <vector>

#include "drg/graph.hpp"
#include "drg/solvers.hpp"

namespace drg {

struct Matching {
    std::vector<Edge> edges;  // (u, w) with u < w, lexicographically sorted

    int size() const { return static_cast<int>(edges.size()); }
    VertexSet covered(int n) const {
        VertexSet s(n);
        for (const auto& [u, w] : edges) {
            s.insert(u);
            s.insert(w);
        }
        return s;
    }
};

// Maximum matching via augmenting-path search with blossom contraction.
// warm gives edges assumed to form a matching to start from (they must be
// pairwise disjoint edges of g).
Matching maximum_matching(const Graph& g, const std::vector<Edge>& warm = {});

bool has_perfect_matching(const Graph& g);

// Structure of the final non-augmenting search: d holds the vertices missed
// by at least one maximum matching, a their outside neighbours, c the rest.
struct GallaiEdmonds {
    VertexSet d, a, c;
};

GallaiEdmonds gallai_edmonds(const Graph& g);

struct TExtendResult {
    bool extendable = false;
    // A t-matching witnessing failure (it extends to no perfect matching).
    std::optional<Matching> counterexample;
    std::uint64_t tested = 0;
};

// Whether every matching of t independent edges extends to a perfect
// matching.  Candidate matchings are enumerated in lexicographic order over
// the sorted edge list, so the reported counterexample is canonical.
// Throws OddOrder, NoPerfectMatching, TTooLarge, BadParams, BudgetExceeded.
TExtendResult is_t_extendable(const Graph& g, int t, const SolverBudget& budget = {});

struct Barrier {
    VertexSet s;
    int t = 0;
    Matching independent_edges;  // t disjoint edges inside s
    int odd_components = 0;      // odd components of g - s
};

// Checks the two barrier conditions: s spans at least t independent edges and
// removing s leaves at least |s| - 2t + 2 odd components.
bool verify_barrier(const Graph& g, const VertexSet& s, int t);

// Builds a barrier from a matching that does not extend: the matched ends
// plus the odd-neighbourhood set of the leftover graph.  Throws
// MatchingExtends if the matching does extend to a perfect matching.
Barrier find_barrier(const Graph& g, const Matching& m);

struct ExtendabilityResult {
    int value = 0;  // largest t such that the graph is t-extendable
    std::optional<Matching> failing_matching;  // witness at t value+1, if found
    std::optional<Barrier> barrier;
    bool search_exhausted = false;  // true when capped by hint or v/2-1
    std::uint64_t tested = 0;
};

// Largest t for which the graph is t-extendable, searched upward from t = 1.
// hint caps the search (pass the valency for distance-regular graphs); -1
// means no cap beyond the trivial v/2 - 1.
ExtendabilityResult extendability(const Graph& g, int hint = -1,
                                  const SolverBudget& budget = {});

}  // namespace drg
