#include "drg/matching.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>

namespace drg {

namespace {

// Augmenting-path maximum matching with blossom contraction.  The search
// keeps three vertex states: even (scanned from), odd (entered via an
// unmatched edge), unreached.  Odd vertices absorbed into a blossom flip to
// even and are rescanned.
class MatchingSolver {
  public:
    explicit MatchingSolver(const Graph& g)
        : g_(g),
          n_(g.order()),
          match_(static_cast<std::size_t>(n_), -1),
          p_(static_cast<std::size_t>(n_), -1),
          base_(static_cast<std::size_t>(n_)),
          root_(static_cast<std::size_t>(n_), -1),
          even_(static_cast<std::size_t>(n_), 0),
          in_blossom_(static_cast<std::size_t>(n_), 0) {}

    void seed(const std::vector<Edge>& warm) {
        for (const auto& [u, w] : warm) {
            if (!g_.has_edge(u, w)) throw BadParams("warm-start edge not in graph");
            if (match_[static_cast<std::size_t>(u)] != -1 ||
                match_[static_cast<std::size_t>(w)] != -1)
                throw BadParams("warm-start edges are not disjoint");
            match_[static_cast<std::size_t>(u)] = w;
            match_[static_cast<std::size_t>(w)] = u;
        }
    }

    void greedy() {
        for (int v = 0; v < n_; ++v) {
            if (match_[static_cast<std::size_t>(v)] != -1) continue;
            for (int w : g_.neighbors(v)) {
                if (match_[static_cast<std::size_t>(w)] == -1) {
                    match_[static_cast<std::size_t>(v)] = w;
                    match_[static_cast<std::size_t>(w)] = v;
                    break;
                }
            }
        }
    }

    void solve() {
        greedy();
        for (int v = 0; v < n_; ++v) {
            if (match_[static_cast<std::size_t>(v)] != -1) continue;
            int free_end = search({v});
            if (free_end != -1) augment(free_end);
        }
    }

    std::vector<int> matches() const { return match_; }

    // Final labeling pass from every exposed vertex at once.  Must be called
    // when no augmenting path exists; even/odd/unreached states then give the
    // canonical decomposition.
    void label_pass(std::vector<int>& state) {
        std::vector<int> roots;
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] == -1) roots.push_back(v);
        int hit = search(roots);
        if (hit != -1) throw Error("internal: augmenting path found during label pass");
        state.assign(static_cast<std::size_t>(n_), 0);  // 0 unreached, 1 even, 2 odd
        for (int v = 0; v < n_; ++v) {
            if (even_[static_cast<std::size_t>(v)])
                state[static_cast<std::size_t>(v)] = 1;
            else if (p_[static_cast<std::size_t>(v)] != -1)
                state[static_cast<std::size_t>(v)] = 2;
        }
    }

  private:
    // Alternating-forest search from the given exposed roots.  Returns a
    // newly reached exposed vertex (the end of an augmenting path, with p_
    // chaining back), or -1 when the forest is Hungarian.
    int search(const std::vector<int>& roots) {
        std::fill(even_.begin(), even_.end(), 0);
        std::fill(p_.begin(), p_.end(), -1);
        std::fill(root_.begin(), root_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        std::deque<int> q;
        for (int r : roots) {
            even_[static_cast<std::size_t>(r)] = 1;
            root_[static_cast<std::size_t>(r)] = r;
            q.push_back(r);
        }
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int to : g_.neighbors(v)) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (even_[static_cast<std::size_t>(to)]) {
                    if (root_[static_cast<std::size_t>(to)] != root_[static_cast<std::size_t>(v)]) {
                        // Two trees meeting on an even-even edge form an
                        // augmenting path between their roots.  Single-root
                        // searches have one tree, and the label pass runs on
                        // a maximum matching, so this cannot happen.
                        throw Error("internal: even-even edge across trees");
                    }
                    contract(v, to, q);
                } else if (p_[static_cast<std::size_t>(to)] == -1) {
                    if (match_[static_cast<std::size_t>(to)] == -1) {
                        // Exposed vertex outside the forest: in single-root
                        // searches this is the classic augmenting endpoint.
                        p_[static_cast<std::size_t>(to)] = v;
                        root_[static_cast<std::size_t>(to)] = root_[static_cast<std::size_t>(v)];
                        return to;
                    }
                    p_[static_cast<std::size_t>(to)] = v;
                    root_[static_cast<std::size_t>(to)] = root_[static_cast<std::size_t>(v)];
                    int m = match_[static_cast<std::size_t>(to)];
                    even_[static_cast<std::size_t>(m)] = 1;
                    root_[static_cast<std::size_t>(m)] = root_[static_cast<std::size_t>(v)];
                    q.push_back(m);
                }
            }
        }
        return -1;
    }

    // Blossom contraction for an intra-tree even-even edge (v, to).
    void contract(int v, int to, std::deque<int>& q) {
        int cur_base = lca(v, to);
        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
        mark_path(v, cur_base, to);
        mark_path(to, cur_base, v);
        for (int i = 0; i < n_; ++i) {
            if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                base_[static_cast<std::size_t>(i)] = cur_base;
                if (!even_[static_cast<std::size_t>(i)]) {
                    even_[static_cast<std::size_t>(i)] = 1;
                    q.push_back(i);
                }
            }
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            int m = match_[static_cast<std::size_t>(v)];
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(m)])] = 1;
            p_[static_cast<std::size_t>(v)] = child;
            child = m;
            v = p_[static_cast<std::size_t>(m)];
        }
    }

    int lca(int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        int x = a;
        while (true) {
            x = base_[static_cast<std::size_t>(x)];
            seen[static_cast<std::size_t>(x)] = 1;
            int m = match_[static_cast<std::size_t>(x)];
            if (m == -1) break;  // reached the root of the tree
            x = p_[static_cast<std::size_t>(m)];
        }
        int y = b;
        while (true) {
            y = base_[static_cast<std::size_t>(y)];
            if (seen[static_cast<std::size_t>(y)]) return y;
            y = p_[static_cast<std::size_t>(match_[static_cast<std::size_t>(y)])];
        }
    }

    // Flips matched/unmatched status along the alternating path ending at
    // the exposed vertex `to` (p_ chains through contracted blossoms).
    void augment(int to) {
        while (to != -1) {
            int pv = p_[static_cast<std::size_t>(to)];
            int next = match_[static_cast<std::size_t>(pv)];
            match_[static_cast<std::size_t>(to)] = pv;
            match_[static_cast<std::size_t>(pv)] = to;
            to = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, p_, base_, root_;
    std::vector<char> even_, in_blossom_;
};

Matching matching_from(const std::vector<int>& match) {
    Matching m;
    for (int v = 0; v < static_cast<int>(match.size()); ++v) {
        int w = match[static_cast<std::size_t>(v)];
        if (w > v) m.edges.emplace_back(v, w);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

}  // namespace

Matching maximum_matching(const Graph& g, const std::vector<Edge>& warm) {
    MatchingSolver solver(g);
    solver.seed(warm);
    solver.solve();
    return matching_from(solver.matches());
}

bool has_perfect_matching(const Graph& g) {
    if (g.order() % 2 != 0) return false;
    return 2 * maximum_matching(g).size() == g.order();
}

GallaiEdmonds gallai_edmonds(const Graph& g) {
    MatchingSolver solver(g);
    solver.solve();
    std::vector<int> state;
    solver.label_pass(state);
    GallaiEdmonds ge{VertexSet(g.order()), VertexSet(g.order()), VertexSet(g.order())};
    for (int v = 0; v < g.order(); ++v) {
        if (state[static_cast<std::size_t>(v)] == 1)
            ge.d.insert(v);
        else if (state[static_cast<std::size_t>(v)] == 2)
            ge.a.insert(v);
        else
            ge.c.insert(v);
    }
    return ge;
}

namespace {

using Clock = std::chrono::steady_clock;

// Shared enumeration core: walks all t-matchings in lexicographic order over
// the sorted edge list and reports the first one that fails to extend.
struct ExtendScan {
    const Graph& g;
    std::vector<Edge> all_edges;
    std::vector<Edge> base_pm;  // a perfect matching of g
    int t;
    std::uint64_t tested = 0;
    std::uint64_t node_limit;
    Clock::time_point deadline;

    std::vector<Edge> chosen;
    VertexSet used;

    ExtendScan(const Graph& g_, int t_, const SolverBudget& budget)
        : g(g_), all_edges(g_.edges()), t(t_), used(g_.order()) {
        node_limit = budget.node_limit;
        // Wall budgets beyond ~30 years overflow the clock's tick type;
        // treat them as "no time limit".
        deadline = Clock::time_point::max();
        if (budget.time_limit_s < 1e9)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(budget.time_limit_s));
    }

    // Returns the first failing t-matching, if any.
    std::optional<Matching> scan() {
        Matching pm = maximum_matching(g);
        if (2 * pm.size() != g.order()) throw NoPerfectMatching("graph has no perfect matching");
        base_pm = pm.edges;
        return descend(0, 0);
    }

    std::optional<Matching> descend(std::size_t from, int depth) {
        if (depth == t) {
            ++tested;
            if (tested > node_limit)
                throw BudgetExceeded("matching enumeration exceeded the node limit");
            if ((tested & 255) == 0 && Clock::now() >= deadline)
                throw BudgetExceeded("matching enumeration exceeded the time limit");
            if (!extends()) {
                Matching m;
                m.edges = chosen;
                return m;
            }
            return std::nullopt;
        }
        for (std::size_t i = from; i < all_edges.size(); ++i) {
            const auto& [u, w] = all_edges[i];
            if (used.contains(u) || used.contains(w)) continue;
            chosen.push_back(all_edges[i]);
            used.insert(u);
            used.insert(w);
            auto hit = descend(i + 1, depth + 1);
            used.erase(u);
            used.erase(w);
            chosen.pop_back();
            if (hit) return hit;
        }
        return std::nullopt;
    }

    bool extends() const {
        // Perfect matching of g minus the chosen ends, warm-started from the
        // base perfect matching restricted to the remaining vertices.
        VertexSet removed = VertexSet(g.order());
        for (const auto& [u, w] : chosen) {
            removed.insert(u);
            removed.insert(w);
        }
        auto sub = induced_subgraph(g, removed.complement());
        std::vector<int> inv(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t i = 0; i < sub.vertex_map.size(); ++i)
            inv[static_cast<std::size_t>(sub.vertex_map[i])] = static_cast<int>(i);
        std::vector<Edge> warm;
        for (const auto& [u, w] : base_pm) {
            int iu = inv[static_cast<std::size_t>(u)], iw = inv[static_cast<std::size_t>(w)];
            if (iu != -1 && iw != -1) warm.emplace_back(iu, iw);
        }
        Matching mm = maximum_matching(sub.graph, warm);
        return 2 * mm.size() == sub.graph.order();
    }
};

void check_extendability_preconditions(const Graph& g, int t) {
    if (g.order() % 2 != 0) throw OddOrder("graph has odd order");
    if (t < 1) throw BadParams("t must be at least 1");
    if (2 * t >= g.order()) throw TTooLarge("t must be below half the order");
}

}  // namespace

TExtendResult is_t_extendable(const Graph& g, int t, const SolverBudget& budget) {
    check_extendability_preconditions(g, t);
    ExtendScan scan(g, t, budget);
    auto hit = scan.scan();
    TExtendResult out;
    out.extendable = !hit.has_value();
    out.counterexample = hit;
    out.tested = scan.tested;
    return out;
}

bool verify_barrier(const Graph& g, const VertexSet& s, int t) {
    if (s.empty()) return false;
    auto sub = induced_subgraph(g, s);
    if (maximum_matching(sub.graph).size() < t) return false;
    int odd = odd_components_after_removal(g, s);
    return odd >= s.size() - 2 * t + 2;
}

Barrier find_barrier(const Graph& g, const Matching& m) {
    const int t = m.size();
    VertexSet ends = m.covered(g.order());
    if (2 * t != ends.size()) throw BadParams("matching edges are not disjoint");
    if (ends.size() == g.order())
        throw MatchingExtends("matching is already perfect; no barrier exists");
    auto sub = induced_subgraph(g, ends.complement());
    if (has_perfect_matching(sub.graph))
        throw MatchingExtends("matching extends to a perfect matching; no barrier exists");
    GallaiEdmonds ge = gallai_edmonds(sub.graph);
    Barrier barrier;
    barrier.t = t;
    barrier.independent_edges = m;
    barrier.s = ends;
    ge.a.for_each([&](int local) { barrier.s.insert(sub.vertex_map[static_cast<std::size_t>(local)]); });
    barrier.odd_components = odd_components_after_removal(g, barrier.s);
    if (!verify_barrier(g, barrier.s, t))
        throw Error("internal: constructed barrier fails verification");
    return barrier;
}

ExtendabilityResult extendability(const Graph& g, int hint, const SolverBudget& budget) {
    check_extendability_preconditions(g, 1);
    ExtendabilityResult out;
    int cap = g.order() / 2 - 1;
    if (hint >= 0) cap = std::min(cap, hint);
    if (!has_perfect_matching(g)) throw NoPerfectMatching("graph has no perfect matching");
    for (int t = 1; t <= cap; ++t) {
        TExtendResult r = is_t_extendable(g, t, budget);
        out.tested += r.tested;
        if (!r.extendable) {
            out.value = t - 1;
            out.failing_matching = r.counterexample;
            out.barrier = find_barrier(g, *r.counterexample);
            return out;
        }
    }
    out.value = cap;
    out.search_exhausted = true;
    return out;
}

}  // namespace drg
