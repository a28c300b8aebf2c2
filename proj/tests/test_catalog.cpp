#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "drg/catalog.hpp"
#include "drg/errors.hpp"
#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"

using namespace drg;

TEST_CASE("catalog entries are distinct and well formed") {
    auto entries = list_catalog();
    CHECK(entries.size() == 20);
    std::set<std::string> ids;
    for (const auto& e : entries) ids.insert(e.id);
    CHECK(ids.size() == entries.size());
}

TEST_CASE("every entry builds to its advertised graph") {
    for (const auto& e : list_catalog()) {
        CAPTURE(e.id);
        CatalogGraph cg = build_from_spec(e.id);
        CHECK(cg.graph.order() == e.order);
        CHECK(cg.graph.size() == e.size);
        CHECK(cg.graph.is_connected());
        CHECK(cg.graph.is_bipartite() == e.bipartite);
        CHECK(cg.entry.id == e.id);
    }
}

TEST_CASE("distance-regularity is re-derived from the built graphs") {
    for (const auto& e : list_catalog()) {
        CAPTURE(e.id);
        CatalogGraph cg = build_from_spec(e.id);
        if (e.array) {
            IntersectionArray got = intersection_array_of(cg.graph);
            CHECK(got == *e.array);
            CHECK(cg.graph.regular_degree() == e.array->k());
        } else {
            auto deg = cg.graph.regular_degree();
            if (deg) CHECK_FALSE(try_intersection_array(cg.graph).has_value());
        }
    }
}

TEST_CASE("specific arrays") {
    auto array_of = [](const char* name) {
        return build_from_spec(name).entry.array->to_string();
    };
    CHECK(array_of("petersen") == "{3,2;1,1}");
    CHECK(array_of("dodecahedron") == "{3,2,1,1,1;1,1,1,2,3}");
    CHECK(array_of("coxeter") == "{3,2,2,1;1,1,1,2}");
    CHECK(array_of("biggs_smith") == "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}");
    CHECK(array_of("wells") == "{5,4,1,1;1,1,4,5}");
    CHECK(array_of("hoffman_singleton") == "{7,6;1,1}");
    CHECK(array_of("shrikhande") == "{6,3;1,2}");
    CHECK(array_of("hamming(3,3)") == "{6,4,2;1,2,3}");
    CHECK(array_of("johnson(6,3)") == "{9,4,1;1,4,9}");
    CHECK(array_of("odd_graph(4)") == "{4,3,3;1,1,2}");
    CHECK(array_of("hypercube(4)") == "{4,3,2,1;1,2,3,4}");
}

TEST_CASE("orders and sizes of the named graphs") {
    struct Row {
        const char* name;
        long v, e;
    };
    for (const Row& r : {Row{"dodecahedron", 20, 30}, Row{"coxeter", 28, 42},
                         Row{"biggs_smith", 102, 153}, Row{"wells", 32, 80},
                         Row{"hoffman_singleton", 50, 175}, Row{"shrikhande", 16, 48},
                         Row{"odd_graph(3)", 10, 15}, Row{"odd_graph(4)", 35, 70}}) {
        CAPTURE(r.name);
        CatalogGraph cg = build_from_spec(r.name);
        CHECK(cg.graph.order() == r.v);
        CHECK(cg.graph.size() == r.e);
    }
}

TEST_CASE("spec strings parse with parameters") {
    CatalogGraph h = build_from_spec("hamming(3,3)");
    CHECK(h.entry.family == "hamming");
    CHECK(h.entry.params == std::vector<int>{3, 3});
    CatalogGraph c = build_from_spec("cycle(7)");
    CHECK(c.graph.order() == 7);
    CatalogGraph b = build("blowup_cycle", std::vector<int>{5, 2});
    CHECK(b.graph.order() == 10);
    CHECK(b.graph.size() == 20);
}

TEST_CASE("bad specs are rejected") {
    CHECK_THROWS_AS(build_from_spec("not_a_graph"), UnknownName);
    CHECK_THROWS_AS(build_from_spec("petersen(3)"), BadParams);
    CHECK_THROWS_AS(build_from_spec("cycle(2)"), BadParams);
    CHECK_THROWS_AS(build_from_spec("hamming(0,3)"), BadParams);
    CHECK_THROWS_AS(build_from_spec("johnson(40,20)"), BadParams);
    CHECK_THROWS_AS(build_from_spec("cycle("), BadParams);
}

TEST_CASE("complete multipartite entry") {
    CatalogGraph k222 = build_from_spec("complete_multipartite(2,2,2)");
    CHECK(k222.graph.order() == 6);
    CHECK(k222.graph.size() == 12);
    CHECK(k222.graph.regular_degree() == 4);
    REQUIRE(k222.entry.array.has_value());
    CHECK(k222.entry.array->to_string() == "{4,1;1,4}");
}
