#include "drg/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

namespace drg {

namespace {

std::vector<Edge> canonical(std::vector<Edge> edges) {
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

Graph cycle_graph(int n) {
    if (n < 3) throw BadParams("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, canonical(edges));
}

Graph complete_graph(int n) {
    if (n < 2) throw BadParams("complete graph needs at least 2 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph complete_multipartite_graph(std::span<const int> parts) {
    if (parts.size() < 2) throw BadParams("complete multipartite graph needs at least 2 parts");
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw BadParams("part sizes must be positive");
        for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
        n += parts[p];
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(w)])
                edges.emplace_back(u, w);
    return Graph::from_edges(n, edges);
}

Graph hamming_graph(int d, int q) {
    if (d < 1 || q < 2) throw BadParams("hamming graph needs d >= 1 and q >= 2");
    long n = 1;
    for (int i = 0; i < d; ++i) {
        n *= q;
        if (n > 2'000'000) throw BadParams("hamming graph too large");
    }
    // Vertex index encodes the word digit by digit, least significant first.
    std::vector<Edge> edges;
    long power = 1;
    for (int pos = 0; pos < d; ++pos) {
        for (long x = 0; x < n; ++x) {
            int digit = static_cast<int>((x / power) % q);
            for (int r = digit + 1; r < q; ++r) {
                long y = x + static_cast<long>(r - digit) * power;
                edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
            }
        }
        power *= q;
    }
    return Graph::from_edges(static_cast<int>(n), canonical(edges));
}

long binomial(int n, int m) {
    if (m < 0 || m > n) return 0;
    long r = 1;
    for (int i = 1; i <= m; ++i) {
        r = r * (n - m + i) / i;
        if (r > 2'000'000) return 2'000'001;
    }
    return r;
}

// m-subsets of {0..n-1} in lexicographic order of their sorted tuples.
std::vector<std::uint64_t> subsets_lex(int n, int m) {
    std::vector<std::uint64_t> out;
    std::vector<int> pick(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int x : pick) mask |= 1ULL << x;
        out.push_back(mask);
        int i = m - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
    }
    return out;
}

Graph johnson_graph(int n, int m) {
    if (n < 2 || m < 1 || m > n - 1) throw BadParams("johnson graph needs 1 <= m <= n-1");
    if (n > 63 || binomial(n, m) > 1'000'000) throw BadParams("johnson graph too large");
    auto subsets = subsets_lex(n, m);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if (std::popcount(subsets[i] & subsets[j]) == m - 1)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edges(static_cast<int>(subsets.size()), edges);
}

// Kneser graph K(2m+1, m): vertices are m-subsets, adjacent when disjoint.
Graph odd_graph_impl(int valency) {
    if (valency < 2) throw BadParams("odd graph parameter (valency) must be at least 2");
    int m = valency - 1;
    int n = 2 * m + 1;
    if (n > 63 || binomial(n, m) > 1'000'000) throw BadParams("odd graph parameter too large");
    auto subsets = subsets_lex(n, m);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edges(static_cast<int>(subsets.size()), edges);
}

// Generalized Petersen graph GP(n, s): outer n-cycle 0..n-1, spokes to the
// inner vertices n..2n-1, inner edges with step s.
Graph generalized_petersen(int n, int s) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n + i);
        edges.emplace_back(n + i, n + (i + s) % n);
    }
    return Graph::from_edges(2 * n, canonical(edges));
}

// Three 7-cycles on steps 1, 2 and 3 plus seven hub vertices, hub i joined
// to the i-th vertex of each ring.
Graph coxeter_graph() {
    std::vector<Edge> edges;
    auto ring = [&](int base, int step) {
        for (int i = 0; i < 7; ++i) edges.emplace_back(base + i, base + (i + step) % 7);
    };
    ring(0, 1);
    ring(7, 2);
    ring(14, 3);
    for (int i = 0; i < 7; ++i) {
        edges.emplace_back(21 + i, i);
        edges.emplace_back(21 + i, 7 + i);
        edges.emplace_back(21 + i, 14 + i);
    }
    return Graph::from_edges(28, canonical(edges));
}

// Seventeen copies of a 6-vertex double-star, with the four leaf classes
// linked cyclically across copies at steps 1, 4, 2 and 8 (mod 17).
Graph biggs_smith_graph() {
    const int copies = 17;
    auto vert = [](int copy, int role) { return 6 * copy + role; };
    // roles: 0 centre A, 1 centre B, 2..5 the four leaves
    const std::array<int, 4> steps{1, 4, 2, 8};
    std::vector<Edge> edges;
    for (int x = 0; x < copies; ++x) {
        edges.emplace_back(vert(x, 0), vert(x, 1));
        edges.emplace_back(vert(x, 0), vert(x, 2));
        edges.emplace_back(vert(x, 0), vert(x, 3));
        edges.emplace_back(vert(x, 1), vert(x, 4));
        edges.emplace_back(vert(x, 1), vert(x, 5));
        for (int leaf = 0; leaf < 4; ++leaf)
            edges.emplace_back(vert(x, 2 + leaf),
                               vert((x + steps[static_cast<std::size_t>(leaf)]) % copies, 2 + leaf));
    }
    return Graph::from_edges(6 * copies, canonical(edges));
}

// Five pentagons P_0..P_4 and five pentagrams Q_0..Q_4, with P_h vertex j
// joined to Q_i vertex (h*i + j) mod 5.  Vertices: P(h,j) = 5h+j,
// Q(i,j) = 25 + 5i + j.
Graph hoffman_singleton_graph() {
    std::vector<Edge> edges;
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j) edges.emplace_back(5 * h + j, 5 * h + (j + 1) % 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) edges.emplace_back(25 + 5 * i + j, 25 + 5 * i + (j + 2) % 5);
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                edges.emplace_back(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
    return Graph::from_edges(50, canonical(edges));
}

// Cayley graph of Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
Graph shrikhande_graph() {
    auto idx = [](int a, int b) { return 4 * ((a % 4 + 4) % 4) + ((b % 4 + 4) % 4); };
    std::vector<Edge> edges;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            edges.emplace_back(idx(a, b), idx(a + 1, b));
            edges.emplace_back(idx(a, b), idx(a, b + 1));
            edges.emplace_back(idx(a, b), idx(a + 1, b + 1));
        }
    return Graph::from_edges(16, canonical(edges));
}

// Cayley graph of Z2^4 with connection set {e1, e2, e3, e4, e1+e2+e3+e4}
// (the folded 5-cube, strongly regular with parameters (16, 5, 0, 2)).
Graph clebsch_graph() {
    const std::array<int, 5> gens{1, 2, 4, 8, 15};
    std::vector<Edge> edges;
    for (int x = 0; x < 16; ++x)
        for (int s : gens) edges.emplace_back(x, x ^ s);
    return Graph::from_edges(16, canonical(edges));
}

// Double cover of the Clebsch graph in which every 4-cycle lifts to an
// 8-cycle.  An edge signing sigma with that property is found by solving the
// linear system over GF(2) that asks sigma to sum to 1 on the edge set of
// every 4-cycle; the cover has vertices (x, s) -> 2x + s and edges
// (x, s) ~ (y, s + sigma(xy)).
Graph wells_graph() {
    Graph base = clebsch_graph();
    auto base_edges = base.edges();
    const int ne = static_cast<int>(base_edges.size());  // 40 edges
    std::map<Edge, int> eidx;
    for (int i = 0; i < ne; ++i) eidx[base_edges[static_cast<std::size_t>(i)]] = i;
    auto edge_id = [&](int a, int b) { return eidx.at({std::min(a, b), std::max(a, b)}); };

    // One GF(2) equation per 4-cycle a-b-c-d: bits of the four edges, RHS 1.
    // Rows are stored as 64-bit masks: bits 0..39 coefficients, bit 63 RHS.
    // Canonical enumeration: a is the smallest vertex, its two cycle
    // neighbours b < d, and c > a is the vertex opposite a.
    std::vector<std::uint64_t> rows;
    for (int a = 0; a < 16; ++a)
        for (int b : base.neighbors(a)) {
            if (b <= a) continue;
            for (int d : base.neighbors(a)) {
                if (d <= b) continue;
                for (int c = a + 1; c < 16; ++c) {
                    if (c == b || c == d || !base.has_edge(b, c) || !base.has_edge(c, d))
                        continue;
                    std::uint64_t row = (1ULL << edge_id(a, b)) ^ (1ULL << edge_id(b, c)) ^
                                        (1ULL << edge_id(c, d)) ^ (1ULL << edge_id(d, a));
                    rows.push_back(row | (1ULL << 63));
                }
            }
        }
    // Gaussian elimination over GF(2).
    std::vector<std::uint64_t> basis(static_cast<std::size_t>(ne), 0);
    for (std::uint64_t row : rows) {
        for (int bit = 0; bit < ne; ++bit) {
            if (!((row >> bit) & 1ULL)) continue;
            if (basis[static_cast<std::size_t>(bit)] == 0) {
                basis[static_cast<std::size_t>(bit)] = row;
                row = 0;
                break;
            }
            row ^= basis[static_cast<std::size_t>(bit)];
        }
        if (row != 0)  // reduced to RHS-only: inconsistent system
            throw SelfValidationFailed("no valid edge signing exists for the double cover");
    }
    // Back-substitute with free variables set to 0.
    std::vector<int> sigma(static_cast<std::size_t>(ne), 0);
    for (int bit = ne - 1; bit >= 0; --bit) {
        std::uint64_t row = basis[static_cast<std::size_t>(bit)];
        if (row == 0) continue;
        int val = static_cast<int>((row >> 63) & 1ULL);
        for (int j = bit + 1; j < ne; ++j)
            if ((row >> j) & 1ULL) val ^= sigma[static_cast<std::size_t>(j)];
        sigma[static_cast<std::size_t>(bit)] = val;
    }

    std::vector<Edge> cover;
    for (int i = 0; i < ne; ++i) {
        auto [x, y] = base_edges[static_cast<std::size_t>(i)];
        for (int s = 0; s < 2; ++s) {
            int t = s ^ sigma[static_cast<std::size_t>(i)];
            cover.emplace_back(2 * x + s, 2 * y + t);
        }
    }
    return Graph::from_edges(32, canonical(cover));
}

IntersectionArray ia(std::vector<int> b, std::vector<int> c) {
    return IntersectionArray(std::move(b), std::move(c));
}

// Expected intersection array of a cycle C_n (diameter floor(n/2)).
IntersectionArray cycle_array(int n) {
    int D = n / 2;
    std::vector<int> b(static_cast<std::size_t>(D), 1), c(static_cast<std::size_t>(D), 1);
    b[0] = 2;
    if (n % 2 == 0) c[static_cast<std::size_t>(D) - 1] = 2;
    return ia(std::move(b), std::move(c));
}

IntersectionArray hamming_array(int d, int q) {
    std::vector<int> b, c;
    for (int i = 0; i < d; ++i) b.push_back((d - i) * (q - 1));
    for (int i = 1; i <= d; ++i) c.push_back(i);
    return ia(std::move(b), std::move(c));
}

IntersectionArray johnson_array(int n, int m) {
    int D = std::min(m, n - m);
    std::vector<int> b, c;
    for (int i = 0; i < D; ++i) b.push_back((m - i) * (n - m - i));
    for (int i = 1; i <= D; ++i) c.push_back(i * i);
    return ia(std::move(b), std::move(c));
}

IntersectionArray odd_graph_array(int valency) {
    int m = valency - 1;  // diameter
    std::vector<int> b, c;
    b.push_back(valency);
    for (int i = 1; i < m; ++i) b.push_back(valency - (i + 1) / 2);
    for (int i = 1; i <= m; ++i) c.push_back((i + 1) / 2);
    return ia(std::move(b), std::move(c));
}

std::string format_id(const std::string& family, std::span<const int> params) {
    if (params.empty()) return family;
    std::ostringstream out;
    out << family << "(";
    for (std::size_t i = 0; i < params.size(); ++i) out << (i ? "," : "") << params[i];
    out << ")";
    return out.str();
}

void expect(bool ok, const std::string& id, const std::string& what) {
    if (!ok) throw SelfValidationFailed(id + ": " + what);
}

}  // namespace

CatalogGraph build(const std::string& family, std::span<const int> params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw BadParams(family + " expects " + std::to_string(n) + " parameter(s), got " +
                            std::to_string(params.size()));
    };

    Graph g = Graph::from_edges(1, {});
    std::optional<IntersectionArray> expected;
    bool bip = false;

    if (family == "cycle") {
        need(1);
        g = cycle_graph(params[0]);
        expected = cycle_array(params[0]);
        bip = params[0] % 2 == 0;
    } else if (family == "complete") {
        need(1);
        g = complete_graph(params[0]);
        expected = ia({params[0] - 1}, {1});
        bip = params[0] == 2;
    } else if (family == "complete_multipartite") {
        if (params.size() < 2)
            throw BadParams("complete_multipartite expects at least 2 part sizes");
        g = complete_multipartite_graph(params);
        bool equal = std::all_of(params.begin(), params.end(),
                                 [&](int p) { return p == params[0]; });
        int s = params[0], m = static_cast<int>(params.size());
        if (equal && s == 1)
            expected = ia({m - 1}, {1});  // complete graph
        else if (equal)
            expected = ia({(m - 1) * s, s - 1}, {1, (m - 1) * s});
        bip = params.size() == 2;
    } else if (family == "hypercube") {
        need(1);
        g = hamming_graph(params[0], 2);
        expected = hamming_array(params[0], 2);
        bip = true;
    } else if (family == "hamming") {
        need(2);
        g = hamming_graph(params[0], params[1]);
        expected = hamming_array(params[0], params[1]);
        bip = params[1] == 2;
    } else if (family == "johnson") {
        need(2);
        g = johnson_graph(params[0], params[1]);
        expected = johnson_array(params[0], params[1]);
        bip = false;
    } else if (family == "odd_graph") {
        need(1);
        g = odd_graph_impl(params[0]);
        expected = odd_graph_array(params[0]);
        bip = false;
    } else if (family == "petersen") {
        need(0);
        g = generalized_petersen(5, 2);
        expected = ia({3, 2}, {1, 1});
    } else if (family == "dodecahedron") {
        need(0);
        g = generalized_petersen(10, 2);
        expected = ia({3, 2, 1, 1, 1}, {1, 1, 1, 2, 3});
    } else if (family == "coxeter") {
        need(0);
        g = coxeter_graph();
        expected = ia({3, 2, 2, 1}, {1, 1, 1, 2});
    } else if (family == "biggs_smith") {
        need(0);
        g = biggs_smith_graph();
        expected = ia({3, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 3});
    } else if (family == "wells") {
        need(0);
        g = wells_graph();
        expected = ia({5, 4, 1, 1}, {1, 1, 4, 5});
    } else if (family == "hoffman_singleton") {
        need(0);
        g = hoffman_singleton_graph();
        expected = ia({7, 6}, {1, 1});
    } else if (family == "shrikhande") {
        need(0);
        g = shrikhande_graph();
        expected = ia({6, 3}, {1, 2});
    } else if (family == "blowup_cycle") {
        need(2);
        g = blowup_cycle(params[0], params[1]);
        if (params[1] == 1)
            expected = cycle_array(params[0]);
        else if (params[0] == 3)
            expected = ia({2 * params[1], params[1] - 1}, {1, 2 * params[1]});
        bip = false;
    } else {
        throw UnknownName("unknown graph family: " + family);
    }

    CatalogEntry entry;
    entry.id = format_id(family, params);
    entry.family = family;
    entry.params.assign(params.begin(), params.end());
    entry.order = g.order();
    entry.size = g.size();
    entry.bipartite = bip;
    entry.array = expected;

    // Every constructed graph validates itself before being handed out.
    expect(g.is_connected(), entry.id, "construction is not connected");
    expect(g.is_bipartite() == bip, entry.id, "bipartiteness differs from expectation");
    if (expected) {
        auto realized = try_intersection_array(g);
        expect(realized.has_value(), entry.id, "construction is not distance-regular");
        expect(*realized == *expected, entry.id,
               "intersection array is " + realized->to_string() + ", expected " +
                   expected->to_string());
        expect(expected->order() == g.order(), entry.id, "order differs from the array");
        expect(expected->size() == g.size(), entry.id, "size differs from the array");
    }
    return CatalogGraph{std::move(g), std::move(entry)};
}

CatalogGraph build_from_spec(const std::string& spec) {
    std::string family;
    std::vector<int> params;
    std::size_t open = spec.find('(');
    if (open != std::string::npos) {
        if (spec.back() != ')') throw BadParams("malformed graph spec: " + spec);
        family = spec.substr(0, open);
        std::string inner = spec.substr(open + 1, spec.size() - open - 2);
        std::istringstream in(inner);
        std::string item;
        while (std::getline(in, item, ','))
            params.push_back(std::stoi(item));
    } else {
        std::istringstream in(spec);
        in >> family;
        int p;
        while (in >> p) params.push_back(p);
    }
    return build(family, params);
}

std::vector<CatalogEntry> list_catalog() {
    static const std::vector<std::pair<std::string, std::vector<int>>> kDefault = {
        {"petersen", {}},
        {"dodecahedron", {}},
        {"coxeter", {}},
        {"biggs_smith", {}},
        {"wells", {}},
        {"hoffman_singleton", {}},
        {"shrikhande", {}},
        {"cycle", {5}},
        {"cycle", {6}},
        {"cycle", {7}},
        {"complete", {4}},
        {"complete_multipartite", {2, 2, 2}},
        {"hypercube", {3}},
        {"hypercube", {4}},
        {"hamming", {3, 3}},
        {"johnson", {5, 2}},
        {"johnson", {6, 3}},
        {"odd_graph", {3}},
        {"odd_graph", {4}},
        {"blowup_cycle", {5, 2}},
    };
    std::vector<CatalogEntry> out;
    out.reserve(kDefault.size());
    for (const auto& [family, params] : kDefault) out.push_back(build(family, params).entry);
    return out;
}

}  // namespace drg
