// End-to-end acceptance checks.  Each criterion prints exactly one
// PASS/FAIL line; the exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "drg/app.hpp"
#include "drg/bounds.hpp"
#include "drg/catalog.hpp"
#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"
#include "drg/matching.hpp"
#include "drg/rng.hpp"
#include "drg/solvers.hpp"
#include "drg/spectrum.hpp"
#include "drg/verify.hpp"
#include "oracles.hpp"

using namespace drg;
using nlohmann::json;

namespace {

double now_s() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

void report(int idx, const Outcome& o) {
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << idx;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << "\n" << std::flush;
}

SolverBudget wall_budget(double seconds) {
    SolverBudget b;
    b.time_limit_s = seconds;
    b.node_limit = 1ULL << 62;
    return b;
}

long binomial(int n, int m) {
    if (m < 0 || m > n) return 0;
    long r = 1;
    for (int i = 1; i <= m; ++i) r = r * (n - m + i) / i;
    return r;
}

// ---- criterion 1: cut-bound table -------------------------------------------

Outcome criterion1() {
    Outcome o;
    double t0 = now_s();
    app::RunConfig cfg;
    cfg.json = true;
    app::CommandOutput out = app::run_table("section2_examples", cfg);
    double dt = now_s() - t0;
    json j = json::parse(out.text);
    if (out.exit_code != 0) o.fail("nonzero exit");
    if (j["rows"].size() != 10) o.fail("expected 10 rows");
    for (const auto& row : j["rows"]) {
        if (!row["row_match"].get<bool>())
            o.fail(row["graph"].get<std::string>() + " row does not match");
    }
    // spot-check the pinned pairs straight from the JSON
    auto pair_of = [&](const std::string& name) {
        for (const auto& row : j["rows"])
            if (row["graph"] == name)
                return std::pair<long, long>(row["mc_oddgirth"]["computed"].get<long>(),
                                             row["mc_spectral"]["computed"].get<long>());
        return std::pair<long, long>(-1, -1);
    };
    struct Want {
        const char* name;
        long f1, f2;
    };
    for (const Want& w :
         {Want{"dodecahedron", 24, 26}, Want{"coxeter", 36, 37}, Want{"biggs_smith", 136, 141},
          Want{"wells", 64, 64}, Want{"hoffman_singleton", 140, 125},
          Want{"ivanov_ivanov_faradjev", 2772, 2722}}) {
        auto got = pair_of(w.name);
        if (got.first != w.f1 || got.second != w.f2) {
            std::ostringstream msg;
            msg << w.name << " got (" << got.first << "," << got.second << ") want (" << w.f1
                << "," << w.f2 << ")";
            o.fail(msg.str());
        }
    }
    if (dt >= 10.0) o.fail("table took too long");
    std::ostringstream d;
    d << "10 rows matched in " << std::fixed << std::setprecision(2) << dt << "s";
    o.note(d.str());
    return o;
}

// ---- criterion 2: independence numbers and their bound columns ----------------

Outcome criterion2(const std::string& alpha_table_json) {
    Outcome o;
    struct Want {
        const char* name;
        long alpha;
        double cap_s;
    };
    const Want wants[] = {
        {"dodecahedron", 8, 1.0},        {"coxeter", 12, 10.0},  {"wells", 10, 10.0},
        {"hoffman_singleton", 15, 60.0}, {"biggs_smith", 43, 600.0},
    };
    std::ostringstream times;
    for (const Want& w : wants) {
        CatalogGraph cg = build_from_spec(w.name);
        double t0 = now_s();
        AlphaResult r = independence_number_exact(cg.graph, wall_budget(w.cap_s));
        double dt = now_s() - t0;
        if (!r.proved) {
            o.fail(std::string(w.name) + " not solved within its time cap");
            continue;
        }
        if (r.alpha != w.alpha) {
            std::ostringstream msg;
            msg << w.name << " alpha=" << r.alpha << " want " << w.alpha;
            o.fail(msg.str());
        }
        if (dt > w.cap_s) o.fail(std::string(w.name) + " exceeded its time cap");
        times << " " << w.name << "=" << r.alpha << "(" << std::fixed << std::setprecision(1)
              << dt << "s)";
    }

    json j = json::parse(alpha_table_json);
    for (const auto& row : j["rows"]) {
        std::string name = row["graph"].get<std::string>();
        if (name == "dodecahedron") {
            // the two spectral cells hold as a value set; the row must say so
            if (!row.contains("value_set_match") || !row["value_set_match"].get<bool>())
                o.fail("dodecahedron cells do not form the expected value set");
            if (!row.contains("note")) o.fail("dodecahedron order discrepancy not flagged");
            long c4 = row["alpha_inertia"]["computed"].get<long>();
            long c5 = row["alpha_hoffman"]["computed"].get<long>();
            if (std::min(c4, c5) != 8 || std::max(c4, c5) != 11)
                o.fail("dodecahedron computed cells are not {8,11}");
        } else {
            for (const char* key : {"alpha_oddgirth", "alpha_inertia", "alpha_hoffman"}) {
                if (!row[key]["match"].get<bool>()) o.fail(name + " " + key + " mismatch");
            }
        }
        if (!row["alpha"]["proved"].get<bool>() || !row["alpha"]["match"].get<bool>())
            o.fail(name + " table alpha not proved at its published value");
    }
    o.note("alpha" + times.str());
    return o;
}

// ---- criterion 3: extendability examples --------------------------------------

Outcome criterion3() {
    Outcome o;
    std::ostringstream times;

    auto timed_exact = [&](const char* name, int hint, int want, double cap_s) {
        CatalogGraph cg = build_from_spec(name);
        double t0 = now_s();
        ExtendabilityResult r = extendability(cg.graph, hint, wall_budget(cap_s));
        double dt = now_s() - t0;
        if (r.value != want) {
            std::ostringstream msg;
            msg << name << " extendability=" << r.value << " want " << want;
            o.fail(msg.str());
        }
        if (dt > cap_s) o.fail(std::string(name) + " exceeded its time cap");
        times << " " << name << "=" << r.value << "(" << std::fixed << std::setprecision(1) << dt
              << "s)";
    };
    timed_exact("petersen", 3, 1, 1.0);
    timed_exact("complete_multipartite(2,2,2)", 4, 1, 1.0);

    auto timed_level = [&](const char* name, int t, double cap_s) {
        CatalogGraph cg = build_from_spec(name);
        double t0 = now_s();
        TExtendResult r = is_t_extendable(cg.graph, t, wall_budget(cap_s));
        double dt = now_s() - t0;
        if (!r.extendable) o.fail(std::string(name) + " unexpectedly fails at t=2");
        if (dt > cap_s) o.fail(std::string(name) + " exceeded its time cap");
        times << " " << name << ":t" << t << "(" << std::fixed << std::setprecision(1) << dt
              << "s)";
    };
    timed_level("coxeter", 2, 60.0);
    timed_level("dodecahedron", 2, 60.0);
    timed_level("biggs_smith", 2, 1800.0);
    timed_level("hypercube(3)", 2, 10.0);
    timed_level("hypercube(4)", 2, 10.0);

    o.note(times.str());
    return o;
}

// ---- criterion 4: cut values of blown-up cycles ---------------------------------

Outcome criterion4() {
    Outcome o;
    double t0 = now_s();
    struct Case {
        int g, m;
    };
    for (Case c : {Case{3, 2}, Case{5, 1}, Case{5, 2}, Case{7, 1}}) {
        Graph b = blowup_cycle(c.g, c.m);
        CutResult r = max_cut_exact(b, wall_budget(60.0));
        long want = static_cast<long>(c.g - 1) * c.m * c.m;
        if (!r.proved || r.value != want) {
            std::ostringstream msg;
            msg << "blowup(" << c.g << "," << c.m << ") got " << r.value << " want " << want;
            o.fail(msg.str());
        }
    }
    double dt = now_s() - t0;
    if (dt >= 60.0) o.fail("cut family took too long");
    std::ostringstream d;
    d << "4 cut values in " << std::fixed << std::setprecision(2) << dt << "s";
    o.note(d.str());
    return o;
}

// ---- criterion 5: spectra ---------------------------------------------------------

Outcome criterion5() {
    Outcome o;
    long checked = 0;
    auto mult_of = [](const Spectrum& s, double x) -> long {
        for (const auto& ev : s.values())
            if (std::fabs(ev.value - x) <= 1e-9) return ev.multiplicity;
        return -1;
    };

    for (int d = 1; d <= 4; ++d) {
        for (int q = 2; q <= 4; ++q) {
            std::vector<int> b, c;
            for (int i = 0; i < d; ++i) b.push_back((d - i) * (q - 1));
            for (int i = 1; i <= d; ++i) c.push_back(i);
            Spectrum s = drg_spectrum(IntersectionArray(b, c));
            for (int i = 0; i <= d; ++i) {
                long want = binomial(d, i);
                for (int p = 0; p < i; ++p) want *= (q - 1);
                if (mult_of(s, (q - 1.0) * d - q * i) != want) {
                    std::ostringstream msg;
                    msg << "hamming(" << d << "," << q << ") eigenvalue " << i;
                    o.fail(msg.str());
                }
                ++checked;
            }
        }
    }
    for (int n = 4; n <= 9; ++n) {
        for (int m = 2; 2 * m <= n; ++m) {
            std::vector<int> b, c;
            for (int i = 0; i < m; ++i) b.push_back((m - i) * (n - m - i));
            for (int i = 1; i <= m; ++i) c.push_back(i * i);
            Spectrum s = drg_spectrum(IntersectionArray(b, c));
            for (int i = 0; i <= m; ++i) {
                long want = binomial(n, i) - binomial(n, i - 1);
                if (mult_of(s, static_cast<double>((m - i) * (n - m - i) - i)) != want) {
                    std::ostringstream msg;
                    msg << "johnson(" << n << "," << m << ") eigenvalue " << i;
                    o.fail(msg.str());
                }
                ++checked;
            }
        }
    }
    for (const auto& entry : list_catalog()) {
        if (!entry.array) continue;
        Spectrum s = drg_spectrum(*entry.array);
        double v = static_cast<double>(entry.order);
        double vk = v * entry.array->k();
        double sum = 0, sum1 = 0, sum2 = 0;
        for (const auto& ev : s.values()) {
            sum += static_cast<double>(ev.multiplicity);
            sum1 += ev.multiplicity * ev.value;
            sum2 += ev.multiplicity * ev.value * ev.value;
        }
        if (sum != v) o.fail(entry.id + " multiplicities do not sum to v");
        if (std::fabs(sum1) > 1e-6 * vk) o.fail(entry.id + " trace is not zero");
        if (std::fabs(sum2 - vk) > 1e-6 * vk) o.fail(entry.id + " edge-count trace fails");
        ++checked;
    }
    std::ostringstream d;
    d << checked << " spectral identities";
    o.note(d.str());
    return o;
}

// ---- criterion 6: solver cross-validation -------------------------------------

Outcome criterion6() {
    Outcome o;
    long mc_bad = 0, mis_bad = 0, match_bad = 0;

    Rng mc_seeds(90210);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(mc_seeds.below(15));
        Rng gr = mc_seeds.split();
        Graph g = oracle::random_graph(n, gr);
        SolverBudget b = wall_budget(60.0);
        b.seed = trial;
        CutResult r = max_cut_exact(g, b);
        if (!r.proved || r.value != oracle::max_cut(g)) ++mc_bad;
    }

    Rng mis_seeds(8675309);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(mis_seeds.below(15));
        Rng gr = mis_seeds.split();
        Graph g = oracle::random_graph(n, gr);
        SolverBudget b = wall_budget(60.0);
        b.seed = trial;
        AlphaResult r = independence_number_exact(g, b);
        if (!r.proved || r.alpha != oracle::alpha(g)) ++mis_bad;
    }

    Rng m_seeds(424242);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(m_seeds.below(11));
        Rng gr = m_seeds.split();
        Graph g = oracle::random_graph(n, gr);
        if (maximum_matching(g).size() != oracle::max_matching(g)) ++match_bad;
    }
    // structured sweep: cycles, cliques, stars, complete bipartite up to 12 vertices
    std::vector<Graph> structured;
    for (int n = 3; n <= 12; ++n) {
        std::vector<Edge> ce, ke;
        for (int i = 0; i < n; ++i) ce.push_back({i, (i + 1) % n});
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w) ke.push_back({u, w});
        structured.push_back(Graph::from_edges(n, ce));
        structured.push_back(Graph::from_edges(n, ke));
    }
    for (int a = 1; a <= 6; ++a)
        for (int c = a; c <= 6; ++c) {
            std::vector<Edge> e;
            for (int u = 0; u < a; ++u)
                for (int w = 0; w < c; ++w) e.push_back({u, a + w});
            structured.push_back(Graph::from_edges(a + c, e));
        }
    for (const Graph& g : structured)
        if (maximum_matching(g).size() != oracle::max_matching(g)) ++match_bad;

    if (mc_bad) o.fail(std::to_string(mc_bad) + " cut discrepancies");
    if (mis_bad) o.fail(std::to_string(mis_bad) + " independence discrepancies");
    if (match_bad) o.fail(std::to_string(match_bad) + " matching discrepancies");
    o.note("200 cut + 200 independence + " + std::to_string(500 + structured.size()) +
           " matching instances, zero discrepancies");
    return o;
}

// ---- criteria 7 and 8: verification suites and determinism -----------------------

Outcome criterion7(const std::string& verify_all_json) {
    Outcome o;
    json j = json::parse(verify_all_json);
    if (!j["ok"].get<bool>()) {
        for (const auto& suite : j["suites"])
            for (const auto& c : suite["checks"])
                if (!c["pass"].get<bool>())
                    o.fail(c["name"].get<std::string>() + "/" + c["subject"].get<std::string>() +
                           ": " + c["detail"].get<std::string>());
    }
    o.note(std::to_string(j["passed"].get<long>()) + " checks green");
    return o;
}

Outcome criterion8(const std::string& verify_t1, const std::string& alpha_t1) {
    Outcome o;
    app::RunConfig c4;
    c4.json = true;
    c4.threads = 4;
    std::string verify_t4 = app::run_verify("all", c4).text;
    if (verify_t4 != verify_t1) o.fail("verify output differs across thread counts");

    app::RunConfig e1, e4;
    e1.json = true;
    e1.threads = 1;
    e4.json = true;
    e4.threads = 4;
    std::string ex1 = app::run_table("section2_examples", e1).text;
    std::string ex4 = app::run_table("section2_examples", e4).text;
    if (ex1 != ex4) o.fail("examples table differs across thread counts");

    std::string alpha_t4 = app::run_table("section2_alpha", e4).text;
    if (alpha_t4 != alpha_t1) o.fail("alpha table differs across thread counts");

    o.note("verify+tables byte-identical across 1 and 4 worker threads");
    return o;
}

}  // namespace

int main() {
    int failures = 0;
    auto run = [&](int idx, Outcome o) {
        report(idx, o);
        if (!o.ok) ++failures;
    };

    run(1, criterion1());

    app::RunConfig jc1;
    jc1.json = true;
    jc1.threads = 1;
    std::string alpha_table_t1 = app::run_table("section2_alpha", jc1).text;

    run(2, criterion2(alpha_table_t1));
    run(3, criterion3());
    run(4, criterion4());
    run(5, criterion5());
    run(6, criterion6());

    std::string verify_all_t1 = app::run_verify("all", jc1).text;
    run(7, criterion7(verify_all_t1));
    run(8, criterion8(verify_all_t1, alpha_table_t1));

    std::cout << (failures == 0 ? "all criteria satisfied" : "criteria failing") << "\n";
    return failures;
}
