#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>
#include <vector>

#include "drg/dimacs.hpp"
#include "drg/errors.hpp"
#include "drg/graph.hpp"
#include "drg/parallel.hpp"
#include "drg/rng.hpp"
#include "drg/vertex_set.hpp"

using namespace drg;

namespace {

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, e);
}

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::from_edges(n, e);
}

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) e.push_back({u, w});
    return Graph::from_edges(n, e);
}

Graph petersen() {
    // outer 5-cycle, inner pentagram, spokes
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
        e.push_back({i, 5 + i});
    }
    return Graph::from_edges(10, e);
}

}  // namespace

TEST_CASE("construction and basic accessors") {
    Graph g = cycle(6);
    CHECK(g.order() == 6);
    CHECK(g.size() == 6);
    CHECK(g.regular_degree() == 2);
    CHECK(g.is_connected());
    CHECK(g.is_bipartite());
    auto nb = g.neighbors(0);
    CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{1, 5});
    CHECK(g.neighbor_set(0).contains(1));
    CHECK_FALSE(g.neighbor_set(0).contains(2));

    Graph p = path(4);
    CHECK_FALSE(p.regular_degree().has_value());
    CHECK(p.edges().size() == 3);
}

TEST_CASE("duplicate and self-loop edges are rejected") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), Error);
}

TEST_CASE("bfs distances") {
    Graph g = path(5);
    auto d = bfs_distances(g, 0);
    CHECK(d == std::vector<int>{0, 1, 2, 3, 4});
    Graph c = cycle(6);
    auto dc = bfs_distances(c, 0);
    CHECK(dc[3] == 3);
    CHECK(dc[5] == 1);
}

TEST_CASE("odd girth") {
    CHECK(odd_girth(cycle(5)) == 5);
    CHECK(odd_girth(cycle(9)) == 9);
    CHECK_FALSE(odd_girth(cycle(6)).has_value());
    CHECK(odd_girth(complete(4)) == 3);
    CHECK(odd_girth(petersen()) == 5);
}

TEST_CASE("cycle counts through an edge") {
    Graph c5 = cycle(5);
    CHECK(count_cycles_through_edge(c5, 0, 1, 5) == 1);
    CHECK(count_cycles_through_edge(c5, 0, 1, 3) == 0);
    Graph k4 = complete(4);
    CHECK(count_cycles_through_edge(k4, 0, 1, 3) == 2);
    // every edge of the Petersen graph lies on exactly 4 pentagons
    Graph p = petersen();
    for (const auto& [u, w] : p.edges()) CHECK(count_cycles_through_edge(p, u, w, 5) == 4);
}

TEST_CASE("edge boundary and neighborhood") {
    Graph c = cycle(6);
    VertexSet a = VertexSet::of(6, {0, 1, 2});
    CHECK(edge_boundary(c, a) == 2);
    VertexSet n = neighborhood(c, VertexSet::of(6, {0}));
    CHECK(n.to_vector() == std::vector<int>{1, 5});
    VertexSet n2 = neighborhood(c, a);
    CHECK(n2.to_vector() == std::vector<int>{3, 5});
}

TEST_CASE("connectivity") {
    auto c6 = connectivity(cycle(6));
    CHECK(c6.vertex == 2);
    CHECK(c6.edge == 2);
    auto k4 = connectivity(complete(4));
    CHECK(k4.vertex == 3);
    CHECK(k4.edge == 3);
    auto pet = connectivity(petersen());
    CHECK(pet.vertex == 3);
    CHECK(pet.edge == 3);
    auto pth = connectivity(path(5));
    CHECK(pth.vertex == 1);
    CHECK(pth.edge == 1);
}

TEST_CASE("induced subgraphs") {
    Graph c = cycle(6);
    auto sub = induced_subgraph(c, VertexSet::of(6, {0, 1, 2, 4}));
    CHECK(sub.graph.order() == 4);
    CHECK(sub.graph.size() == 2);
    CHECK(sub.vertex_map.size() == 4);

    // in the Petersen graph the vertices at distance >= 2 from any vertex
    // induce a 6-cycle
    Graph p = petersen();
    auto far = subgraph_at_distance_ge(p, 0, 2);
    CHECK(far.graph.order() == 6);
    CHECK(far.graph.size() == 6);
    CHECK(far.graph.regular_degree() == 2);
    CHECK(far.graph.is_connected());
}

TEST_CASE("cycle blowup") {
    Graph b = blowup_cycle(5, 2);
    CHECK(b.order() == 10);
    CHECK(b.size() == 20);
    CHECK(b.regular_degree() == 4);
    CHECK(odd_girth(b) == 5);
    CHECK_THROWS_AS(blowup_cycle(4, 2), EvenLength);

    Graph one = blowup_cycle(7, 1);
    CHECK(one.order() == 7);
    CHECK(one.size() == 7);
}

TEST_CASE("odd components after deletion") {
    Graph c = cycle(6);
    CHECK(odd_components_after_removal(c, VertexSet::of(6, {0, 3})) == 0);
    CHECK(odd_components_after_removal(c, VertexSet::of(6, {0, 2, 4})) == 3);
    CHECK(odd_components_after_removal(c, VertexSet(6)) == 0);
    Graph p = path(5);
    CHECK(odd_components_after_removal(p, VertexSet::of(5, {2})) == 0);
    CHECK(odd_components_after_removal(p, VertexSet::of(5, {1, 3})) == 3);
}

TEST_CASE("vertex sets") {
    VertexSet s(70);
    s.insert(0);
    s.insert(69);
    s.insert(33);
    CHECK(s.size() == 3);
    CHECK(s.contains(69));
    CHECK_FALSE(s.contains(1));
    CHECK(s.to_vector() == std::vector<int>{0, 33, 69});
    VertexSet t = VertexSet::full(70);
    CHECK(t.size() == 70);
}

TEST_CASE("dimacs round trip") {
    Graph p = petersen();
    std::string text = write_dimacs(p, {"petersen"});
    std::istringstream in(text);
    Graph q = read_dimacs(in);
    CHECK(q.order() == p.order());
    auto p_edges = p.edges();
    auto q_edges = q.edges();
    std::set<Edge> pe(p_edges.begin(), p_edges.end());
    std::set<Edge> qe(q_edges.begin(), q_edges.end());
    CHECK(pe == qe);

    auto tmp = std::filesystem::temp_directory_path() / "drg_roundtrip.dimacs";
    write_dimacs_file(p, tmp.string(), {});
    Graph r = read_dimacs_file(tmp.string());
    CHECK(r.size() == p.size());
    std::filesystem::remove(tmp);
}

TEST_CASE("dimacs rejects malformed input") {
    std::istringstream bad1("e 1 2\n");
    CHECK_THROWS_AS(read_dimacs(bad1), ParseError);
    std::istringstream bad2("p edge 2 1\ne 1 5\n");
    CHECK_THROWS_AS(read_dimacs(bad2), ParseError);
}

TEST_CASE("rng determinism and ranges") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(7);
    for (int i = 0; i < 1000; ++i) {
        auto x = c.below(17);
        CHECK(x < 17);
        double u = c.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    Rng d(7), e(8);
    CHECK(d.next() != e.next());
    Rng f(9);
    Rng g1 = f.split();
    Rng f2(9);
    Rng g2 = f2.split();
    CHECK(g1.next() == g2.next());
}

TEST_CASE("parallel for covers every index once") {
    std::vector<int> hits(1000, 0);
    parallel_for(1000, 4, [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    std::vector<int> hits1(37, 0);
    parallel_for(37, 1, [&](std::size_t i) { hits1[i] += 1; });
    CHECK(std::all_of(hits1.begin(), hits1.end(), [](int h) { return h == 1; }));
}
