#include "drg/bounds.hpp"

#include <cmath>
#include <sstream>

namespace drg {

double maxcut_oddgirth_bound(long e, int odd_girth) {
    if (odd_girth < 3 || odd_girth % 2 == 0) throw BadParams("odd girth must be odd and >= 3");
    return static_cast<double>(e) * (1.0 - 1.0 / odd_girth);
}

double maxcut_spectral_bound(long e, int k, double lambda_min) {
    if (k < 1) throw BadParams("degree must be positive");
    return 0.5 * static_cast<double>(e) * (1.0 - lambda_min / k);
}

double alpha_oddgirth_bound(long v, int odd_girth) {
    if (odd_girth < 3 || odd_girth % 2 == 0) throw BadParams("odd girth must be odd and >= 3");
    return 0.5 * static_cast<double>(v) * (1.0 - 1.0 / odd_girth);
}

long alpha_inertia_bound(const Spectrum& spec) {
    long v = spec.order();
    return std::min(v - spec.negative_count(), v - spec.positive_count());
}

double alpha_hoffman_bound(long v, int k, double lambda_min) {
    if (lambda_min >= 0) throw BadParams("Hoffman bound needs a negative smallest eigenvalue");
    return static_cast<double>(v) / (1.0 + static_cast<double>(k) / (-lambda_min));
}

std::optional<long> extendability_lower_bound(const IntersectionArray& ia, bool bipartite) {
    const int D = ia.diameter();
    if (D < 3) return std::nullopt;
    if (ia.order() % 2 != 0) return std::nullopt;  // no perfect matching exists at all
    const long k = ia.k();
    const long mu = ia.mu();
    const long lambda = ia.lambda();

    if (bipartite) return (k + 1) / 2;

    // Non-bipartite: the guarantees below come from separate case analyses,
    // so take the best one that applies.
    long best = 0;
    if (k >= 3) best = 2;
    if (mu == 1) {
        // lambda+1 divides k when mu = 1 (edges partition into cliques).
        best = std::max(best, (k + 1 - k / (lambda + 1)) / 2);
    }
    if (lambda >= 1) best = std::max(best, ((k + 3) / 2) / 2);
    if (mu >= 3 && 2 * mu <= k) best = std::max(best, k / 3);
    if (2 * mu > k) best = std::max(best, k / 3);
    return best;
}

namespace {

BoundValue bv(double real) { return BoundValue{real, static_cast<long>(std::floor(real + 1e-9))}; }

nlohmann::ordered_json bound_json(const std::optional<BoundValue>& b) {
    if (!b) return nullptr;
    return nlohmann::ordered_json{{"real", b->real}, {"floor", b->floor_value}};
}

}  // namespace

BoundReport bound_report(const Graph& g, const std::string& graph_id) {
    if (!g.is_connected()) throw DisconnectedGraph("bound report requires a connected graph");
    auto k = g.regular_degree();
    if (!k) throw NotRegular("bound report requires a regular graph");

    BoundReport r;
    r.graph = graph_id;
    r.v = g.order();
    r.e = g.size();
    r.k = *k;

    auto array = try_intersection_array(g);
    Spectrum spec = array ? drg_spectrum(*array) : dense_spectrum(g);
    r.lambda_min = spec.smallest();
    r.odd_girth = odd_girth(g);

    if (r.odd_girth) {
        r.mc_oddgirth = bv(maxcut_oddgirth_bound(r.e, *r.odd_girth));
        r.alpha_oddgirth = bv(alpha_oddgirth_bound(r.v, *r.odd_girth));
    } else {
        r.notes.push_back("bipartite: odd-girth bounds not applicable; max-cut equals e");
    }
    r.mc_spectral = bv(maxcut_spectral_bound(r.e, r.k, r.lambda_min));
    r.alpha_inertia = alpha_inertia_bound(spec);
    if (spec.smallest() < 0) r.alpha_hoffman = bv(alpha_hoffman_bound(r.v, r.k, r.lambda_min));

    if (array) {
        if (array->diameter() < 3) {
            r.notes.push_back("diameter 2: no general extendability lower bound is claimed");
        } else if (r.v % 2 != 0) {
            r.notes.push_back("odd order: perfect matchings do not exist");
        } else {
            r.ext_lower = extendability_lower_bound(*array, g.is_bipartite());
        }
    } else {
        r.notes.push_back("not distance-regular: extendability lower bound not applicable");
    }
    return r;
}

nlohmann::ordered_json to_json(const BoundReport& r) {
    nlohmann::ordered_json j;
    j["graph"] = r.graph;
    j["v"] = r.v;
    j["e"] = r.e;
    j["k"] = r.k;
    j["odd_girth"] = r.odd_girth ? nlohmann::ordered_json(*r.odd_girth) : nullptr;
    j["lambda_min"] = r.lambda_min;
    nlohmann::ordered_json b;
    b["mc_oddgirth"] = bound_json(r.mc_oddgirth);
    b["mc_spectral"] = bound_json(r.mc_spectral);
    b["alpha_oddgirth"] = bound_json(r.alpha_oddgirth);
    b["alpha_inertia"] = r.alpha_inertia ? nlohmann::ordered_json(*r.alpha_inertia) : nullptr;
    b["alpha_hoffman"] = bound_json(r.alpha_hoffman);
    j["bounds"] = b;
    j["ext_lower"] = r.ext_lower ? nlohmann::ordered_json(*r.ext_lower) : nullptr;
    if (r.exact) {
        nlohmann::ordered_json x;
        x["mc"] = r.exact->mc ? nlohmann::ordered_json(*r.exact->mc) : nullptr;
        x["alpha"] = r.exact->alpha ? nlohmann::ordered_json(*r.exact->alpha) : nullptr;
        x["proved"] = r.exact->proved;
        x["extendability"] =
            r.exact->extendability ? nlohmann::ordered_json(*r.exact->extendability) : nullptr;
        j["exact"] = x;
    }
    j["notes"] = r.notes;
    return j;
}

std::string render_text(const BoundReport& r) {
    std::ostringstream out;
    out << "graph " << r.graph << ": v=" << r.v << " e=" << r.e << " k=" << r.k << "\n";
    if (r.odd_girth)
        out << "  odd girth: " << *r.odd_girth << "\n";
    else
        out << "  odd girth: none (bipartite)\n";
    out << "  lambda_min: " << r.lambda_min << "\n";
    auto line = [&](const char* name, const std::optional<BoundValue>& b) {
        out << "  " << name << ": ";
        if (b)
            out << b->real << " (floor " << b->floor_value << ")";
        else
            out << "n/a";
        out << "\n";
    };
    line("max-cut odd-girth bound", r.mc_oddgirth);
    line("max-cut spectral bound", r.mc_spectral);
    line("alpha odd-girth bound", r.alpha_oddgirth);
    out << "  alpha inertia bound: ";
    if (r.alpha_inertia)
        out << *r.alpha_inertia << "\n";
    else
        out << "n/a\n";
    line("alpha ratio bound", r.alpha_hoffman);
    out << "  extendability lower bound: ";
    if (r.ext_lower)
        out << *r.ext_lower << "\n";
    else
        out << "n/a\n";
    if (r.exact) {
        out << "  exact: mc=";
        if (r.exact->mc)
            out << *r.exact->mc;
        else
            out << "?";
        out << " alpha=";
        if (r.exact->alpha)
            out << *r.exact->alpha;
        else
            out << "?";
        out << (r.exact->proved ? " (proved)" : " (not proved)");
        if (r.exact->extendability) out << " extendability=" << *r.exact->extendability;
        out << "\n";
    }
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    return out.str();
}

}  // namespace drg
