#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace drg {

// One invariant checked on one subject.  detail carries counts or the
// counterexample; it never contains timing data, so suite output is
// reproducible byte for byte.
struct CheckResult {
    std::string name;
    std::string subject;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int threads = 0;  // 0 = hardware concurrency
};

// Rebuilds every catalog entry, re-validates it against its expected
// parameters, and checks the derived spectra (trace identities, stated
// smallest eigenvalues, bipartiteness agreement, Taylor recognition).
std::vector<CheckResult> verify_catalog(const VerifyOptions& opt = {});

// Structural facts asserted for the whole catalog: constant cycle count
// through edges at the odd girth, connectivity equal to the valency, the
// distance >= 2 subgraph connected, expansion of independent sets, edge
// boundaries of small sets, cut-size consistency of the component-size
// lower bounds, barrier duality for non-extendable matchings, and the
// bipartite independent-set witness.
std::vector<CheckResult> verify_lemmas(const VerifyOptions& opt = {});

// Extendability ground truth on the named instances plus consistency of the
// closed-form lower bound with exact search on small catalog graphs.
std::vector<CheckResult> verify_extendability(const VerifyOptions& opt = {});

}  // namespace drg
