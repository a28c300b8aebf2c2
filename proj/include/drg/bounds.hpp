#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"
#include "drg/spectrum.hpp"

#include "json.hpp"

namespace drg {

// ---- max-cut upper bounds -------------------------------------------------

// e * (1 - 1/g) for a graph with e edges and odd girth g.  Valid whenever
// every edge lies on the same positive number of g-cycles; the caller is
// responsible for that premise (it holds in vertex-transitive and
// distance-regular graphs, and is checked by the verification suite).
double maxcut_oddgirth_bound(long e, int odd_girth);

// (e/2) * (1 - lambda_min/k) for a k-regular graph with smallest adjacency
// eigenvalue lambda_min.
double maxcut_spectral_bound(long e, int k, double lambda_min);

// ---- independence number upper bounds --------------------------------------

// (v/2) * (1 - 1/g); same premise as the max-cut odd-girth bound.
double alpha_oddgirth_bound(long v, int odd_girth);

// min(v - n_minus, v - n_plus) from the counts of positive/negative
// adjacency eigenvalues.
long alpha_inertia_bound(const Spectrum& spec);

// v / (1 + k / (-lambda_min)) for regular graphs.
double alpha_hoffman_bound(long v, int k, double lambda_min);

// ---- matching extendability lower bound -------------------------------------

// Best known lower bound on the extendability of a distance-regular graph of
// diameter >= 3, by case analysis on (bipartite, mu, lambda).  Returns
// nullopt for diameter < 3 (no bound is claimed there).
std::optional<long> extendability_lower_bound(const IntersectionArray& ia, bool bipartite);

// ---- combined report --------------------------------------------------------

struct BoundValue {
    double real;
    long floor_value;
};

struct ExactCell {
    std::optional<long> mc;
    std::optional<long> alpha;
    bool proved = false;
    std::optional<long> extendability;
};

struct BoundReport {
    std::string graph;
    long v = 0;
    long e = 0;
    int k = 0;
    std::optional<int> odd_girth;
    double lambda_min = 0.0;
    std::optional<BoundValue> mc_oddgirth;
    std::optional<BoundValue> mc_spectral;
    std::optional<BoundValue> alpha_oddgirth;
    std::optional<long> alpha_inertia;
    std::optional<BoundValue> alpha_hoffman;
    std::optional<long> ext_lower;
    std::optional<ExactCell> exact;
    std::vector<std::string> notes;
};

// Computes every applicable bound for a connected regular graph.  Bounds
// whose premise fails are left empty with an explanatory note.  Throws
// NotRegular / DisconnectedGraph.
BoundReport bound_report(const Graph& g, const std::string& graph_id);

nlohmann::ordered_json to_json(const BoundReport& r);
std::string render_text(const BoundReport& r);

}  // namespace drg
