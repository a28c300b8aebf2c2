#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"

namespace drg {

struct CatalogEntry {
    std::string id;                // canonical name with parameters, e.g. "hamming(3,3)"
    std::string family;            // constructor name, e.g. "hamming"
    std::vector<int> params;
    long order;
    long size;
    bool bipartite;
    // Present when the construction is distance-regular; the builder checks
    // the realized graph against it and refuses to hand out a graph that
    // does not match.
    std::optional<IntersectionArray> array;
};

struct CatalogGraph {
    Graph graph;
    CatalogEntry entry;
};

// Builds a graph by family name and integer parameters.  Recognized families:
//   cycle(n), complete(n), complete_multipartite(p1,...,pm), hypercube(d),
//   hamming(d,q), johnson(n,m), odd_graph(m), petersen, dodecahedron,
//   coxeter, biggs_smith, wells, hoffman_singleton, shrikhande,
//   blowup_cycle(g,m)
// Throws UnknownName / BadParams, and SelfValidationFailed if the realized
// graph contradicts its own expected invariants.
CatalogGraph build(const std::string& family, std::span<const int> params = {});

// Parses "family", "family(3,2)" or "family 3 2" into a build call.
CatalogGraph build_from_spec(const std::string& spec);

// The default entry list used by the verification suites: every named graph
// plus small representatives of each parametrized family, in a fixed order.
std::vector<CatalogEntry> list_catalog();

}  // namespace drg
