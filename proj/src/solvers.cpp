#include "drg/solvers.hpp"

#include <algorithm>
#include <chrono>

#include "drg/rng.hpp"

namespace drg {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    std::uint64_t node_limit;

    static Deadline from(const SolverBudget& b) {
        // Budgets beyond ~30 years overflow the clock's tick type; treat
        // them as "no wall limit" so only the node budget applies.
        Clock::time_point end = Clock::time_point::max();
        if (b.time_limit_s < 1e9)
            end = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(b.time_limit_s));
        return Deadline{end, b.node_limit};
    }
    bool expired(std::uint64_t nodes) const {
        if (nodes >= node_limit) return true;
        if ((nodes & 1023) == 0 && Clock::now() >= end) return true;
        return false;
    }
};

// ---------------------------------------------------------------- max cut --

class MaxCutSearch {
  public:
    MaxCutSearch(const Graph& g, const SolverBudget& budget, long seed_value,
                 const std::vector<int>& seed_side)
        : g_(g), n_(g.order()), deadline_(Deadline::from(budget)) {
        side_.assign(static_cast<std::size_t>(n_), 0);
        best_side_ = seed_side;
        best_value_ = seed_value;
        cnt_[0].assign(static_cast<std::size_t>(n_), 0);
        cnt_[1].assign(static_cast<std::size_t>(n_), 0);
    }

    CutResult run() {
        assign(0, 0, 0, g_.size());
        CutResult out;
        out.value = best_value_;
        out.nodes = nodes_;
        out.proved = !stopped_;
        VertexSet s(n_);
        for (int i = 0; i < n_; ++i)
            if (best_side_[static_cast<std::size_t>(i)]) s.insert(i);
        out.side = s;
        return out;
    }

  private:
    // Places vertex v on side s.  cur counts crossing edges between assigned
    // pairs; uu counts edges whose ends are both still unassigned (v's own
    // pending edges included).  Assignment order is 0, 1, 2, ..., so the
    // unassigned vertices are exactly those above v.
    void assign(int v, int s, long cur, long uu) {
        ++nodes_;
        if (stopped_) return;
        if (deadline_.expired(nodes_)) {
            stopped_ = true;
            return;
        }
        side_[static_cast<std::size_t>(v)] = s;
        cur += cnt_[s ^ 1][static_cast<std::size_t>(v)];
        long uu_after = uu;
        for (int w : g_.neighbors(v))
            if (w > v) {
                --uu_after;
                ++cnt_[s][static_cast<std::size_t>(w)];
            }

        if (v == n_ - 1) {
            if (cur > best_value_) {
                best_value_ = cur;
                best_side_ = side_;
            }
        } else {
            // Optimistic completion: every unassigned vertex joins its better
            // side and every unassigned-unassigned edge crosses.
            long optimistic = cur + uu_after;
            for (int w = v + 1; w < n_; ++w)
                optimistic += std::max(cnt_[0][static_cast<std::size_t>(w)],
                                       cnt_[1][static_cast<std::size_t>(w)]);
            if (optimistic > best_value_) {
                assign(v + 1, 0, cur, uu_after);
                assign(v + 1, 1, cur, uu_after);
            }
        }

        for (int w : g_.neighbors(v))
            if (w > v) --cnt_[s][static_cast<std::size_t>(w)];
    }

    const Graph& g_;
    int n_;
    Deadline deadline_;
    std::vector<int> side_, best_side_;
    std::vector<long> cnt_[2];
    long best_value_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
};

std::vector<int> side_vector(const VertexSet& s, int n) {
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    s.for_each([&](int v) { out[static_cast<std::size_t>(v)] = 1; });
    return out;
}

}  // namespace

CutResult max_cut_local_search(const Graph& g, const SolverBudget& budget, int restarts) {
    const int n = g.order();
    Rng rng(budget.seed);
    Deadline deadline = Deadline::from(budget);

    std::vector<int> side(static_cast<std::size_t>(n)), best_side(static_cast<std::size_t>(n), 0);
    long best_value = 0;
    std::uint64_t flips = 0;
    bool out_of_budget = false;

    auto cut_value = [&]() {
        long c = 0;
        for (const auto& [u, w] : g.edges())
            c += side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(w)];
        return c;
    };

    for (int r = 0; r < restarts && !out_of_budget; ++r) {
        if (r == 0) {
            // Deterministic warm start: 2-coloring by breadth-first level
            // parity, per component.  Exact on bipartite graphs.
            std::vector<int> level(static_cast<std::size_t>(n), kUnreachable);
            for (int s = 0; s < n; ++s) {
                if (level[static_cast<std::size_t>(s)] != kUnreachable) continue;
                auto d = bfs_distances(g, s);
                for (int i = 0; i < n; ++i)
                    if (level[static_cast<std::size_t>(i)] == kUnreachable &&
                        d[static_cast<std::size_t>(i)] != kUnreachable)
                        level[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i)];
            }
            for (int i = 0; i < n; ++i)
                side[static_cast<std::size_t>(i)] = level[static_cast<std::size_t>(i)] & 1;
        } else {
            for (int i = 0; i < n; ++i) side[static_cast<std::size_t>(i)] = rng.coin() ? 1 : 0;
        }

        // Best-improvement hill climbing: flip the largest-gain vertex,
        // smallest index on ties, while any strict improvement exists.
        while (true) {
            if (flips >= deadline.node_limit || deadline.expired(std::max<std::uint64_t>(flips, 1))) {
                out_of_budget = true;
                break;
            }
            int best_vertex = -1;
            long best_gain = 0;
            for (int u = 0; u < n; ++u) {
                long same = 0;
                for (int w : g.neighbors(u))
                    if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)])
                        ++same;
                long gain = 2 * same - g.degree(u);  // same - cross
                if (gain > best_gain) {
                    best_gain = gain;
                    best_vertex = u;
                }
            }
            if (best_vertex == -1) break;
            side[static_cast<std::size_t>(best_vertex)] ^= 1;
            ++flips;
        }

        long value = cut_value();
        if (value > best_value) {
            best_value = value;
            best_side = side;
        }
    }

    // Normalize so vertex 0 is reported outside the chosen side.
    if (!best_side.empty() && best_side[0] == 1)
        for (auto& s : best_side) s ^= 1;

    CutResult out;
    out.value = best_value;
    out.nodes = flips;
    out.proved = false;  // a heuristic never certifies optimality
    VertexSet s(n);
    for (int i = 0; i < n; ++i)
        if (best_side[static_cast<std::size_t>(i)]) s.insert(i);
    out.side = s;
    return out;
}

CutResult max_cut_exact(const Graph& g, const SolverBudget& budget) {
    if (g.order() == 1) {
        CutResult r;
        r.side = VertexSet(1);
        r.value = 0;
        r.proved = true;
        r.nodes = 1;
        return r;
    }
    // Seed the incumbent with a quick deterministic heuristic so pruning
    // bites from the start.
    SolverBudget warm = budget;
    warm.time_limit_s = std::min(budget.time_limit_s * 0.1, 5.0);
    warm.node_limit = std::min<std::uint64_t>(budget.node_limit, 200'000);
    CutResult seed = max_cut_local_search(g, warm, 8);
    MaxCutSearch search(g, budget, seed.value, side_vector(seed.side, g.order()));
    CutResult out = search.run();
    out.nodes += seed.nodes;
    return out;
}

// ---------------------------------------------------------------- alpha ----

namespace {

// Branch and bound for the independence number over an extendable vertex
// universe: degree-2 folding introduces fresh composite vertices, so the
// adjacency table grows and shrinks as the search moves.  Every operation on
// the trail contributes one unit to the independent-set count; leaves
// resolve the trail into a witness in original labels.
class AlphaSearch {
  public:
    AlphaSearch(const Graph& g, const SolverBudget& budget)
        : g_(g), n_(g.order()), cap_(2 * g.order() + 8), deadline_(Deadline::from(budget)) {
        adj_.reserve(static_cast<std::size_t>(cap_));
        for (int v = 0; v < n_; ++v) adj_.push_back(widen(g.neighbor_set(v), cap_));
        active_ = VertexSet(cap_);
        for (int v = 0; v < n_; ++v) active_.insert(v);
        best_witness_ = VertexSet(n_);
    }

    AlphaResult run() {
        recurse();
        AlphaResult out;
        out.alpha = best_;
        out.nodes = nodes_;
        out.proved = !stopped_;
        out.witness = best_witness_;
        // The witness must be an independent set of the claimed size in the
        // original graph; anything else is an internal bug.
        if (out.witness.size() != best_) throw Error("internal: witness size mismatch");
        auto members = out.witness.to_vector();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (g_.has_edge(members[i], members[j]))
                    throw Error("internal: witness is not independent");
        return out;
    }

  private:
    enum class Kind { Take, Fold };
    struct Op {
        Kind kind;
        int id;                    // Take: chosen vertex.  Fold: fresh composite.
        int v = -1, u = -1, w = -1;  // Fold: centre and its two neighbours.
        std::vector<int> removed;  // Take: every vertex deactivated by it.
    };

    static VertexSet widen(const VertexSet& s, int cap) {
        VertexSet out(cap);
        s.for_each([&](int v) { out.insert(v); });
        return out;
    }

    int deg(int v) const { return adj_[static_cast<std::size_t>(v)].intersection_size(active_); }

    void take(int v) {
        Op op;
        op.kind = Kind::Take;
        op.id = v;
        op.removed.push_back(v);
        active_.erase(v);
        (adj_[static_cast<std::size_t>(v)] & active_).for_each([&](int w) {
            active_.erase(w);
            op.removed.push_back(w);
        });
        ops_.push_back(std::move(op));
    }

    void fold(int v, int u, int w) {
        int id = static_cast<int>(adj_.size());
        if (id >= cap_) throw Error("internal: fold capacity exceeded");
        VertexSet merged =
            (adj_[static_cast<std::size_t>(u)] | adj_[static_cast<std::size_t>(w)]) & active_;
        merged.erase(v);
        adj_.push_back(merged);
        merged.for_each([&](int x) { adj_[static_cast<std::size_t>(x)].insert(id); });
        active_.erase(v);
        active_.erase(u);
        active_.erase(w);
        active_.insert(id);
        Op op;
        op.kind = Kind::Fold;
        op.id = id;
        op.v = v;
        op.u = u;
        op.w = w;
        ops_.push_back(std::move(op));
    }

    void undo(const Op& op) {
        if (op.kind == Kind::Take) {
            for (int x : op.removed) active_.insert(x);
        } else {
            adj_[static_cast<std::size_t>(op.id)].for_each(
                [&](int x) { adj_[static_cast<std::size_t>(x)].erase(op.id); });
            adj_.pop_back();
            active_.erase(op.id);
            active_.insert(op.v);
            active_.insert(op.u);
            active_.insert(op.w);
        }
    }

    // Greedy clique cover of the active vertices; an upper bound on the
    // residual independence number.
    long clique_cover_bound() {
        cliques_.clear();
        active_.for_each([&](int v) {
            const VertexSet& nv = adj_[static_cast<std::size_t>(v)];
            for (auto& common : cliques_) {
                if (common.contains(v)) {
                    common &= nv;
                    return;
                }
            }
            cliques_.push_back(nv);
        });
        return static_cast<long>(cliques_.size());
    }

    // Replays the trail backwards, mapping composites to original labels.
    VertexSet resolve_trail() {
        VertexSet chosen(cap_);
        for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
            if (it->kind == Kind::Take) {
                chosen.insert(it->id);
            } else if (chosen.contains(it->id)) {
                chosen.erase(it->id);
                chosen.insert(it->u);
                chosen.insert(it->w);
            } else {
                chosen.insert(it->v);
            }
        }
        VertexSet out(n_);
        chosen.for_each([&](int v) {
            if (v >= n_) throw Error("internal: unresolved composite vertex");
            out.insert(v);
        });
        return out;
    }

    void recurse() {
        ++nodes_;
        if (stopped_ || deadline_.expired(nodes_)) {
            stopped_ = true;
            return;
        }
        const std::size_t mark = ops_.size();

        // Reductions: strip degree <= 1 vertices, resolve degree-2 ones
        // (take the centre of a triangle, otherwise fold).
        while (true) {
            int fold_v = -1, fold_u = -1, fold_w = -1;
            bool acted = false;
            for (int v = active_.first(); v != -1; v = active_.next(v)) {
                int d = deg(v);
                if (d <= 1) {
                    take(v);
                    acted = true;
                    break;
                }
                if (d == 2 && fold_v == -1) {
                    auto nb = (adj_[static_cast<std::size_t>(v)] & active_).to_vector();
                    if (adj_[static_cast<std::size_t>(nb[0])].contains(nb[1])) {
                        take(v);  // closed neighbourhood is a triangle: v dominates
                        acted = true;
                        break;
                    }
                    fold_v = v;
                    fold_u = nb[0];
                    fold_w = nb[1];
                }
            }
            if (acted) continue;
            if (fold_v != -1) {
                fold(fold_v, fold_u, fold_w);
                continue;
            }
            break;
        }

        const long count = static_cast<long>(ops_.size());  // one unit per op on the whole trail

        if (active_.empty()) {
            if (count > best_) {
                best_ = count;
                best_witness_ = resolve_trail();
            }
        } else if (count + clique_cover_bound() > best_) {
            int pick = -1, pick_deg = -1;
            active_.for_each([&](int v) {
                int d = deg(v);
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            });
            take(pick);
            recurse();
            undo(ops_.back());
            ops_.pop_back();

            active_.erase(pick);
            recurse();
            active_.insert(pick);
        }

        while (ops_.size() > mark) {
            undo(ops_.back());
            ops_.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    int cap_;
    Deadline deadline_;
    std::vector<VertexSet> adj_;
    VertexSet active_;
    std::vector<Op> ops_;
    std::vector<VertexSet> cliques_;
    long best_ = 0;
    VertexSet best_witness_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
};

}  // namespace

AlphaResult independence_number_exact(const Graph& g, const SolverBudget& budget) {
    return AlphaSearch(g, budget).run();
}

}  // namespace drg
