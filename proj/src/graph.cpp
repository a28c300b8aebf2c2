#include "drg/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "drg/parallel.hpp"

namespace drg {

Graph Graph::from_edges(int v, const std::vector<Edge>& edges) {
    if (v < 1) throw BadParams("graph order must be at least 1");
    Graph g;
    g.v_ = v;
    g.adj_.assign(static_cast<std::size_t>(v), {});
    g.bits_.assign(static_cast<std::size_t>(v), VertexSet(v));
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= v || b < 0 || b >= v)
            throw BadParams("edge endpoint out of range: (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
        if (a == b) throw BadParams("loop edge at vertex " + std::to_string(a));
        if (g.bits_[static_cast<std::size_t>(a)].contains(b))
            throw BadParams("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        g.bits_[static_cast<std::size_t>(a)].insert(b);
        g.bits_[static_cast<std::size_t>(b)].insert(a);
        g.adj_[static_cast<std::size_t>(a)].push_back(b);
        g.adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    g.e_ = static_cast<long>(edges.size());
    return g;
}

std::optional<int> Graph::regular_degree() const {
    int k = degree(0);
    for (int u = 1; u < v_; ++u)
        if (degree(u) != k) return std::nullopt;
    return k;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(e_));
    for (int u = 0; u < v_; ++u)
        for (int w : neighbors(u))
            if (u < w) out.emplace_back(u, w);
    return out;  // already lexicographic: u ascending, adj rows sorted
}

bool Graph::is_connected() const {
    std::vector<int> comp;
    return components(*this, comp) == 1;
}

bool Graph::is_bipartite() const {
    std::vector<int> color(static_cast<std::size_t>(v_), -1);
    std::deque<int> q;
    for (int s = 0; s < v_; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        q.push_back(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : neighbors(u)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = color[static_cast<std::size_t>(u)] ^ 1;
                    q.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int DistanceMatrix::max_finite() const {
    int best = 0;
    for (int u = 0; u < n_; ++u)
        for (int w = 0; w < n_; ++w)
            if (at(u, w) != kUnreachable && at(u, w) > best) best = at(u, w);
    return best;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
    dist[static_cast<std::size_t>(source)] = 0;
    std::deque<int> q{source};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

DistanceMatrix distance_matrix(const Graph& g, int threads) {
    const int n = g.order();
    DistanceMatrix d(n);
    parallel_for(n, threads, [&](int u) {
        auto row = bfs_distances(g, u);
        for (int w = 0; w < n; ++w) d.at(u, w) = row[static_cast<std::size_t>(w)];
    });
    return d;
}

std::optional<int> odd_girth(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedGraph("odd_girth requires a connected graph");
    const int n = g.order();
    int best = -1;
    // In breadth-first search, every edge joins vertices whose levels differ
    // by at most one.  An edge inside a single level closes an odd closed
    // walk of length 2*level + 1 through the root, and the shortest odd
    // cycle is recovered this way when the root lies on it.
    for (int r = 0; r < n; ++r) {
        auto dist = bfs_distances(g, r);
        for (int u = 0; u < n; ++u) {
            for (int w : g.neighbors(u)) {
                if (w <= u) continue;
                if (dist[static_cast<std::size_t>(u)] == dist[static_cast<std::size_t>(w)]) {
                    int len = 2 * dist[static_cast<std::size_t>(u)] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
        if (best == 3) break;
    }
    if (best == -1) return std::nullopt;
    return best;
}

namespace {

// Simple paths of exactly `steps` edges from `at` to `target`, avoiding
// `used` and entering `target` only on the final step.  Branches that cannot
// reach the target within the remaining budget are pruned via precomputed
// distances.
long count_paths_to(const Graph& g, int at, int target, int steps,
                    const std::vector<int>& dist_to_target, VertexSet& used) {
    long sum = 0;
    for (int x : g.neighbors(at)) {
        if (x == target) {
            if (steps == 1) sum += 1;
            continue;
        }
        if (steps == 1 || used.contains(x)) continue;
        int need = dist_to_target[static_cast<std::size_t>(x)];
        if (need == kUnreachable || need > steps - 1) continue;
        used.insert(x);
        sum += count_paths_to(g, x, target, steps - 1, dist_to_target, used);
        used.erase(x);
    }
    return sum;
}

}  // namespace

long count_cycles_through_edge(const Graph& g, int u, int w, int len) {
    if (len < 3) throw BadParams("cycle length must be at least 3");
    if (!g.has_edge(u, w))
        throw EdgeNotPresent("no edge (" + std::to_string(u) + "," + std::to_string(w) + ")");
    // A cycle of length len through edge {u, w} is exactly a simple path of
    // len-1 edges from w back to u; deleting the edge from the cycle leaves
    // that path and nothing else.
    auto dist_to_u = bfs_distances(g, u);
    VertexSet used(g.order());
    used.insert(w);
    return count_paths_to(g, w, u, len - 1, dist_to_u, used);
}

long edge_boundary(const Graph& g, const VertexSet& a) {
    long count = 0;
    a.for_each([&](int u) { count += g.degree(u) - g.neighbor_set(u).intersection_size(a); });
    return count;
}

VertexSet neighborhood(const Graph& g, const VertexSet& a) {
    VertexSet out(g.order());
    a.for_each([&](int u) { out |= g.neighbor_set(u); });
    out -= a;
    return out;
}

int components(const Graph& g, std::vector<int>& comp) {
    const int n = g.order();
    comp.assign(static_cast<std::size_t>(n), -1);
    int count = 0;
    std::deque<int> q;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        comp[static_cast<std::size_t>(s)] = count;
        q.push_back(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u))
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = count;
                    q.push_back(w);
                }
        }
        ++count;
    }
    return count;
}

int odd_components_after_removal(const Graph& g, const VertexSet& s) {
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int odd = 0;
    std::deque<int> q;
    for (int start = 0; start < n; ++start) {
        if (s.contains(start) || comp[static_cast<std::size_t>(start)] != -1) continue;
        int size = 0;
        comp[static_cast<std::size_t>(start)] = 1;
        q.push_back(start);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            ++size;
            for (int w : g.neighbors(u))
                if (!s.contains(w) && comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = 1;
                    q.push_back(w);
                }
        }
        if (size % 2 == 1) ++odd;
    }
    return odd;
}

namespace {

// Unit-capacity max-flow (breadth-first augmenting paths).  Arc capacities
// are 0/1; graphs here are small, so this is comfortably fast.
class UnitFlow {
  public:
    explicit UnitFlow(int n) : head_(static_cast<std::size_t>(n), -1) {}

    void add_arc(int from, int to) {
        arcs_.push_back({to, head_[static_cast<std::size_t>(from)], 1});
        head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0});
        head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    }

    void add_edge(int a, int b) {  // undirected unit edge = two unit arcs
        add_arc(a, b);
        add_arc(b, a);
    }

    int max_flow(int s, int t, int stop_at) {
        int flow = 0;
        while (flow < stop_at && augment(s, t)) ++flow;
        return flow;
    }

    void reset() {
        for (std::size_t i = 0; i < arcs_.size(); i += 2) {
            arcs_[i].cap = 1;
            arcs_[i + 1].cap = 0;
        }
    }

  private:
    struct Arc {
        int to, next, cap;
    };

    bool augment(int s, int t) {
        std::vector<int> via(head_.size(), -1);
        std::deque<int> q{s};
        via[static_cast<std::size_t>(s)] = -2;
        while (!q.empty() && via[static_cast<std::size_t>(t)] == -1) {
            int u = q.front();
            q.pop_front();
            for (int e = head_[static_cast<std::size_t>(u)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
                const Arc& a = arcs_[static_cast<std::size_t>(e)];
                if (a.cap > 0 && via[static_cast<std::size_t>(a.to)] == -1) {
                    via[static_cast<std::size_t>(a.to)] = e;
                    q.push_back(a.to);
                }
            }
        }
        if (via[static_cast<std::size_t>(t)] == -1) return false;
        for (int v = t; v != s;) {
            int e = via[static_cast<std::size_t>(v)];
            arcs_[static_cast<std::size_t>(e)].cap -= 1;
            arcs_[static_cast<std::size_t>(e ^ 1)].cap += 1;
            v = arcs_[static_cast<std::size_t>(e ^ 1)].to;
        }
        return true;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

int edge_connectivity(const Graph& g) {
    const int n = g.order();
    int best = n;  // upper bound placeholder
    for (int t = 1; t < n; ++t) {
        UnitFlow f(n);
        for (const auto& [a, b] : g.edges()) f.add_edge(a, b);
        best = std::min(best, f.max_flow(0, t, best));
        if (best == 0) break;
    }
    return best;
}

// Max number of internally vertex-disjoint s-t paths for non-adjacent s, t:
// split every other vertex x into x_in -> x_out with unit capacity.
int vertex_flow(const Graph& g, int s, int t) {
    const int n = g.order();
    UnitFlow f(2 * n);
    auto in = [](int x) { return 2 * x; };
    auto out = [](int x) { return 2 * x + 1; };
    for (int x = 0; x < n; ++x) f.add_arc(in(x), out(x));
    for (const auto& [a, b] : g.edges()) {
        f.add_arc(out(a), in(b));
        f.add_arc(out(b), in(a));
    }
    return f.max_flow(out(s), in(t), n);
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    // Complete graph: no non-adjacent pair exists.
    if (static_cast<long>(n) * (n - 1) / 2 == g.size()) return n - 1;
    int best = n - 1;
    // Standard reduction: it suffices to try one fixed vertex plus its
    // neighbourhood as sources against all their non-neighbours.
    std::vector<int> sources{0};
    for (int w : g.neighbors(0)) sources.push_back(w);
    for (int s : sources) {
        for (int t = 0; t < n; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            best = std::min(best, vertex_flow(g, s, t));
            if (best == 0) return 0;
        }
    }
    return best;
}

}  // namespace

Connectivity connectivity(const Graph& g) {
    if (g.order() < 2) throw BadParams("connectivity requires at least 2 vertices");
    if (!g.is_connected()) throw DisconnectedGraph("connectivity requires a connected graph");
    return Connectivity{vertex_connectivity(g), edge_connectivity(g)};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> map = keep.to_vector();
    std::vector<int> inv(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < map.size(); ++i) inv[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int u : map)
        for (int w : g.neighbors(u))
            if (u < w && keep.contains(w))
                edges.emplace_back(inv[static_cast<std::size_t>(u)], inv[static_cast<std::size_t>(w)]);
    int n = static_cast<int>(map.size());
    if (n == 0) throw BadParams("induced subgraph on empty vertex set");
    return InducedSubgraph{Graph::from_edges(n, edges), std::move(map)};
}

InducedSubgraph subgraph_at_distance_ge(const Graph& g, int x, int i) {
    if (x < 0 || x >= g.order()) throw BadParams("subgraph_at_distance_ge: vertex out of range");
    if (!g.is_connected())
        throw DisconnectedGraph("subgraph_at_distance_ge requires a connected graph");
    auto dist = bfs_distances(g, x);
    VertexSet keep(g.order());
    for (int y = 0; y < g.order(); ++y)
        if (dist[static_cast<std::size_t>(y)] >= i) keep.insert(y);
    if (keep.empty()) throw BadParams("no vertices at the requested distance");
    return induced_subgraph(g, keep);
}

Graph blowup_cycle(int g_len, int m) {
    if (g_len < 3 || m < 1) throw BadParams("blowup_cycle requires length >= 3 and m >= 1");
    if (g_len % 2 == 0) throw EvenLength("blowup_cycle requires an odd cycle length");
    std::vector<Edge> edges;
    for (int i = 0; i < g_len; ++i) {
        int j = (i + 1) % g_len;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                int u = i * m + a, w = j * m + b;
                edges.emplace_back(std::min(u, w), std::max(u, w));
            }
    }
    return Graph::from_edges(g_len * m, edges);
}

}  // namespace drg
