#include <doctest.h>

#include <memory>

#include "gr/bounds.hpp"
#include "gr/constructions.hpp"
#include "gr/recipe.hpp"

using namespace gr;

TEST_CASE("fan formulas") {
    CHECK(conj_fan(3) == 33);
    CHECK(conj_fan(4) == 69);
    CHECK(conj_fan(6) == 349);
    CHECK(thm_fan_lower(2) == 14);
    CHECK(thm_fan_lower(4) == 71);
    CHECK(thm_fan_lower(6) == 351);
    CHECK_THROWS(conj_fan(1));
    CHECK_THROWS(thm_fan_lower(5));
}

TEST_CASE("kipas and wheel conjecture formulas") {
    CHECK(conj_kipas(2, 6, 19) == 19);
    CHECK(conj_kipas(2, 8, 25) == 25);
    CHECK(conj_kipas(3, 6, 19) == 37);  // max{2*18, 30} + 1
    CHECK(conj_kipas(4, 6, 19) == 79);
    CHECK(conj_wheel(4, 6, 19) == 91);
    CHECK(conj_wheel(5, 6, 19) == 181);
    CHECK_THROWS(conj_wheel(4, 5, 19));
}

TEST_CASE("theorem lower-bound formulas") {
    CHECK(thm_kipas_wheel_lower(3, 6, 19) == 37);
    CHECK(thm_kipas_wheel_lower(4, 6, 19) == 111);
    CHECK(thm_kipas_wheel_lower(6, 6, 19) == 603);
    CHECK(thm_odd_m_lower(3, 7, 13) == 36);   // max{25, 36}
    CHECK(thm_odd_m_lower(4, 7, 13) == 105);  // 13 + 100 - 8
    CHECK_THROWS(thm_kipas_wheel_lower(4, 7, 19));
    CHECK_THROWS(thm_odd_m_lower(4, 8, 19));
}

TEST_CASE("difference identities for m = 6") {
    // Wheel gap: 7*5^{(k-2)/2} - 4k + 1; kipas gap: 2*5^{k/2} - 4k - 2.
    for (int k : {4, 6, 8}) {
        long long wheel_gap = thm_kipas_wheel_lower(k, 6, 19) - conj_wheel(k, 6, 19);
        CHECK(wheel_gap == 7 * pow5((k - 2) / 2) - 4 * k + 1);
        long long kipas_gap = thm_kipas_wheel_lower(k, 6, 19) - conj_kipas(k, 6, 19);
        CHECK(kipas_gap == 2 * pow5(k / 2) - 4 * k - 2);
        CHECK(wheel_gap > 0);
        CHECK(kipas_gap > 0);
    }
}

TEST_CASE("theorem beats conjecture across the grid") {
    // r2 ranges over everything below the cited upper bound 4m - 2.
    for (int k : {4, 6})
        for (int m : {6, 8, 10})
            for (long long r2 = 2; r2 <= 4 * m - 2; ++r2)
                CHECK(thm_kipas_wheel_lower(k, m, r2) > conj_kipas(k, m, r2));
}

TEST_CASE("formula matches construction size") {
    for (int m : {6, 8, 10}) {
        auto base = std::make_shared<ColoredCompleteGraph>(default_kipas_base(m));
        long long r2 = base->n() + 1;  // bound certified by the base itself
        for (int k : {2, 4, 6})
            CHECK(thm_kipas_wheel_lower(k, m, r2) ==
                  vertex_count(*build_G_even(k, m, base)) + 1);
        for (int k : {5,})
            CHECK(thm_kipas_wheel_lower(k, m, r2) ==
                  vertex_count(*build_G_odd(k, m, base)) + 1);
        // k = 3 takes the better of the doubling and the pentagon variant.
        long long best3 = std::max(vertex_count(*build_G_odd(3, m, base)),
                                   vertex_count(*build_G_odd_pentagon(m)));
        CHECK(thm_kipas_wheel_lower(3, m, r2) == best3 + 1);
    }
    for (int m : {7, 9}) {
        auto base = std::make_shared<ColoredCompleteGraph>(default_kipas_base(m));
        long long r2 = base->n() + 1;
        for (int k : {4, 6})
            CHECK(thm_odd_m_lower(k, m, r2) == vertex_count(*build_odd_m_kipas(k, m, base)) + 1);
        CHECK(thm_odd_m_lower(5, m, r2) == vertex_count(*build_odd_m_kipas(5, m, base)) + 1);
    }
    CHECK(thm_fan_lower(4) == vertex_count(*build_fan_G4()) + 1);
    CHECK(thm_fan_lower(6) == vertex_count(*build_fan_Gk(6)) + 1);
}

TEST_CASE("star quantities") {
    auto sv = star_values(12, 3);
    CHECK(sv.graph_bound == 27);
    CHECK(sv.degree_bound == 22);
    auto up = star_values(12, 4);
    CHECK(up.graph_bound == sv.graph_bound + 1);
    CHECK(up.degree_bound == sv.degree_bound + 1);
    CHECK_THROWS(star_values(11, 3));
    CHECK_THROWS(star_values(12, 2));
}

TEST_CASE("stored constants") {
    CHECK(known_value("R2(W6)") == 19);
    CHECK(known_value("R2(F3)") == 14);
    CHECK_THROWS(known_value("R2(K99)"));
}

TEST_CASE("certification happy path") {
    CatalogParams prm;
    auto res = catalog_build("fan-g4", prm);
    auto rec = certify(res.graph, res.checks, res.name);
    CHECK(rec.bound == 71);
    CHECK(rec.vertices == 70);

    prm.m = 6;
    auto kp = catalog_build("kipas-k3", prm);
    CHECK(certify(kp.graph, kp.checks, kp.name).bound == 31);

    CatalogParams star;
    star.n = 12;
    star.k = 3;
    auto sh = catalog_build("star-h", star);
    CHECK(certify(sh.graph, sh.checks, sh.name).bound == 27);
}

TEST_CASE("certification fails loudly with a witness") {
    ColoredCompleteGraph k7(7, 1, 1);
    std::vector<PatternQuery> checks{{PatternKind::Fan, 3, {1}}};
    try {
        certify(k7, checks, "dense");
        FAIL("expected a certification failure");
    } catch (const CertificationError& e) {
        CHECK(e.witness.found());
        CHECK(std::string(e.what()).find("fan") != std::string::npos);
    }
}
