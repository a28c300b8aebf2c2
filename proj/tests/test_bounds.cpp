#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "drg/bounds.hpp"
#include "drg/catalog.hpp"
#include "drg/errors.hpp"
#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"
#include "drg/spectrum.hpp"

using namespace drg;

namespace {

long fl(double x) { return static_cast<long>(std::floor(x + 1e-9)); }

struct Triple {
    long eq3, eq4, eq5;
};

Triple alpha_triple(const char* name) {
    CatalogGraph cg = build_from_spec(name);
    const IntersectionArray& ia = *cg.entry.array;
    Spectrum s = drg_spectrum(ia);
    int g = *odd_girth(cg.graph);
    return {fl(alpha_oddgirth_bound(cg.entry.order, g)), alpha_inertia_bound(s),
            fl(alpha_hoffman_bound(cg.entry.order, ia.k(), s.smallest()))};
}

}  // namespace

TEST_CASE("cut bounds on the named graphs") {
    struct Row {
        const char* name;
        long f1, f2;
    };
    for (const Row& r : {Row{"dodecahedron", 24, 26}, Row{"coxeter", 36, 37},
                         Row{"biggs_smith", 136, 141}, Row{"wells", 64, 64},
                         Row{"hoffman_singleton", 140, 125}}) {
        CAPTURE(r.name);
        CatalogGraph cg = build_from_spec(r.name);
        const IntersectionArray& ia = *cg.entry.array;
        double lam = drg_spectrum(ia).smallest();
        int g = *odd_girth(cg.graph);
        CHECK(fl(maxcut_oddgirth_bound(cg.entry.size, g)) == r.f1);
        CHECK(fl(maxcut_spectral_bound(cg.entry.size, ia.k(), lam)) == r.f2);
    }
}

TEST_CASE("cut bounds from stated parameters only") {
    CHECK(fl(maxcut_oddgirth_bound(3465, 5)) == 2772);
    CHECK(fl(maxcut_spectral_bound(3465, 7, -4.0)) == 2722);
}

TEST_CASE("odd graph cut bounds have exact closed forms") {
    for (int m = 2; m <= 5; ++m) {
        CatalogGraph cg = build("odd_graph", std::vector<int>{m + 1});
        const IntersectionArray& ia = *cg.entry.array;
        double lam = drg_spectrum(ia).smallest();
        CHECK(lam == doctest::Approx(-m).epsilon(1e-9));
        long e = cg.entry.size;
        int g = *odd_girth(cg.graph);
        CHECK(g == 2 * m + 1);
        CHECK(maxcut_oddgirth_bound(e, g) ==
              doctest::Approx(e * (1.0 - 1.0 / (2 * m + 1))).epsilon(1e-12));
        CHECK(maxcut_spectral_bound(e, ia.k(), lam) ==
              doctest::Approx(e * (1.0 - 1.0 / (2 * m + 2))).epsilon(1e-9));
    }
}

TEST_CASE("independence bounds on the named graphs") {
    auto d = alpha_triple("dodecahedron");
    CHECK(d.eq3 == 8);
    CHECK(d.eq4 == 11);
    CHECK(d.eq5 == 8);
    auto c = alpha_triple("coxeter");
    CHECK(c.eq3 == 12);
    CHECK(c.eq4 == 13);
    CHECK(c.eq5 == 12);
    auto b = alpha_triple("biggs_smith");
    CHECK(b.eq3 == 45);
    CHECK(b.eq4 == 58);
    CHECK(b.eq5 == 46);
    auto w = alpha_triple("wells");
    CHECK(w.eq3 == 12);
    CHECK(w.eq4 == 13);
    CHECK(w.eq5 == 12);
    auto h = alpha_triple("hoffman_singleton");
    CHECK(h.eq3 == 20);
    CHECK(h.eq4 == 21);
    CHECK(h.eq5 == 15);
}

TEST_CASE("petersen independence bounds are tight") {
    CatalogGraph pet = build_from_spec("petersen");
    Spectrum s = drg_spectrum(*pet.entry.array);
    CHECK(alpha_inertia_bound(s) == 4);
    CHECK(fl(alpha_hoffman_bound(10, 3, s.smallest())) == 4);
    CHECK(fl(alpha_oddgirth_bound(10, 5)) == 4);
}

TEST_CASE("extendability lower bounds by case") {
    auto lb = [](const char* name) {
        CatalogGraph cg = build_from_spec(name);
        return extendability_lower_bound(*cg.entry.array, cg.entry.bipartite);
    };
    CHECK(lb("hypercube(3)") == 2);       // bipartite: floor((k+1)/2)
    CHECK(lb("hypercube(4)") == 2);
    CHECK(lb("cycle(6)") == 1);
    CHECK(lb("coxeter") == 2);            // cubic, mu = 1
    CHECK(lb("dodecahedron") == 2);
    CHECK(lb("wells") == 2);
    CHECK_FALSE(lb("petersen").has_value());          // diameter 2
    CHECK_FALSE(lb("hoffman_singleton").has_value());
    // lambda >= 1 and 3 <= mu <= k/2 both apply to J(6,3)
    CatalogGraph j = build_from_spec("johnson(6,3)");
    auto v = extendability_lower_bound(*j.entry.array, false);
    REQUIRE(v.has_value());
    CHECK(*v == 3);
}

TEST_CASE("report fields for a distance-regular graph") {
    CatalogGraph pet = build_from_spec("petersen");
    BoundReport r = bound_report(pet.graph, "petersen");
    CHECK(r.graph == "petersen");
    CHECK(r.v == 10);
    CHECK(r.e == 15);
    CHECK(r.k == 3);
    CHECK(r.odd_girth == 5);
    CHECK(r.lambda_min == doctest::Approx(-2.0));
    REQUIRE(r.mc_oddgirth.has_value());
    CHECK(r.mc_oddgirth->floor_value == 12);
    REQUIRE(r.mc_spectral.has_value());
    CHECK(r.mc_spectral->floor_value == 12);
    REQUIRE(r.alpha_oddgirth.has_value());
    CHECK(r.alpha_oddgirth->floor_value == 4);
    CHECK(r.alpha_inertia == 4);
    REQUIRE(r.alpha_hoffman.has_value());
    CHECK(r.alpha_hoffman->floor_value == 4);
    CHECK_FALSE(r.ext_lower.has_value());  // diameter 2
}

TEST_CASE("report on a bipartite graph omits odd-girth bounds") {
    CatalogGraph cube = build_from_spec("hypercube(3)");
    BoundReport r = bound_report(cube.graph, "hypercube(3)");
    CHECK_FALSE(r.odd_girth.has_value());
    CHECK_FALSE(r.mc_oddgirth.has_value());
    CHECK_FALSE(r.alpha_oddgirth.has_value());
    REQUIRE(r.mc_spectral.has_value());
    CHECK(r.mc_spectral->floor_value == 12);  // cut of the whole edge set
    CHECK(r.alpha_inertia == 4);
    CHECK(r.ext_lower == 2);
    CHECK_FALSE(r.notes.empty());
}

TEST_CASE("report serialization") {
    CatalogGraph pet = build_from_spec("petersen");
    BoundReport r = bound_report(pet.graph, "petersen");
    auto j = to_json(r);
    CHECK(j["graph"] == "petersen");
    CHECK(j["v"] == 10);
    CHECK(j["bounds"]["mc_oddgirth"]["floor"] == 12);
    CHECK(j["bounds"]["mc_oddgirth"]["real"].get<double>() == doctest::Approx(12.0));
    CHECK(j["ext_lower"].is_null());
    std::string text = render_text(r);
    CHECK(text.find("petersen") != std::string::npos);

    r.exact = ExactCell{};
    r.exact->mc = 12;
    r.exact->alpha = 4;
    r.exact->proved = true;
    auto j2 = to_json(r);
    CHECK(j2["exact"]["mc"] == 12);
    CHECK(j2["exact"]["alpha"] == 4);
    CHECK(j2["exact"]["proved"] == true);
}

TEST_CASE("report rejects irregular input") {
    Graph p = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(bound_report(p, "path"), NotRegular);
    Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(bound_report(two, "pair"), DisconnectedGraph);
}
