#include <doctest.h>

#include <random>

#include "gr/constructions.hpp"
#include "gr/detectors.hpp"
#include "gr/oracle.hpp"
#include "gr/recipe.hpp"

using namespace gr;

TEST_CASE("rainbow triangle search") {
    ColoredCompleteGraph k3(3, 3, 1);
    k3.set_color(0, 1, 1);
    k3.set_color(0, 2, 2);
    k3.set_color(1, 2, 3);
    auto r = find_rainbow_triangle(k3);
    REQUIRE(r.found());
    CHECK(check_witness(k3, r));

    CHECK(!find_rainbow_triangle(expand(*pentagon(1, 2))).found());
    CHECK(!find_rainbow_triangle(expand(*build_star_H(12, 3))).found());
}

TEST_CASE("fan detector basics") {
    ColoredCompleteGraph g4 = expand(*build_fan_G4());
    for (int c = 1; c <= 4; ++c) CHECK(!find_mono_fan(g4, c, 3).found());

    ColoredCompleteGraph k7(7, 1, 1);
    auto r = find_mono_fan(k7, 1, 3);
    REQUIRE(r.found());
    CHECK(r.witness->size() == 7);
    CHECK(check_witness(k7, r));
}

TEST_CASE("kipas detector basics") {
    ColoredCompleteGraph pent30 = expand(*build_G_odd_pentagon(6));
    for (int c = 1; c <= 3; ++c) {
        CHECK(!find_mono_kipas(pent30, c, 6).found());
        CHECK(!embed_oracle(pent30, c, kipas_pattern(6)).found());
    }
    ColoredCompleteGraph k7(7, 1, 1);
    auto r = find_mono_kipas(k7, 1, 6);
    REQUIRE(r.found());
    CHECK(check_witness(k7, r));
}

TEST_CASE("wheel detector basics") {
    ColoredCompleteGraph k7(7, 1, 1);
    auto r = find_mono_wheel(k7, 1, 6);
    REQUIRE(r.found());
    CHECK(check_witness(k7, r));
}

TEST_CASE("star and subdivided star detectors") {
    ColoredCompleteGraph h = expand(*build_star_H(12, 4));
    for (int c = 1; c <= 3; ++c) CHECK(!find_mono_star(h, c, 12).found());
    for (int c = 1; c <= 4; ++c) CHECK(!find_mono_subdivided_star(h, c, 12).found());
    // The apex class is a big star, so the plain star does appear in color 4.
    CHECK(find_mono_star(h, 4, 12).found());

    ColoredCompleteGraph k14(14, 1, 1);
    auto s = find_mono_star(k14, 1, 12);
    auto p = find_mono_subdivided_star(k14, 1, 12);
    REQUIRE(s.found());
    REQUIRE(p.found());
    CHECK(check_witness(k14, s));
    CHECK(check_witness(k14, p));
}

TEST_CASE("triangle and path detectors") {
    ColoredCompleteGraph h4 = expand(*build_H(4));
    for (int c = 1; c <= 4; ++c) CHECK(!find_mono_triangle(h4, c).found());
    ColoredCompleteGraph pent = expand(*pentagon(1, 2));
    auto r = find_mono_path(pent, 1, 4);
    REQUIRE(r.found());
    CHECK(check_witness(pent, r));
    ColoredCompleteGraph k3(3, 1, 1);
    CHECK(find_mono_triangle(k3, 1).found());
}

TEST_CASE("embedding oracle edge cases") {
    ColoredCompleteGraph g(4, 2, 1);
    g.set_color(0, 1, 2);
    PatternGraph edge{PatternKind::Path, 2, 2, {{0, 1}}};
    CHECK(embed_oracle(g, 2, edge).found());
    g.set_color(0, 1, 1);
    CHECK(!embed_oracle(g, 2, edge).found());
    CHECK_THROWS(embed_oracle(g, 1, path_pattern(10)));  // over the size cap
}

TEST_CASE("detectors match the embedding oracle on random 2-colorings") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        ColoredCompleteGraph g = random_coloring(8, 2, rng);
        for (int c = 1; c <= 2; ++c) {
            CHECK(find_mono_fan(g, c, 3).found() == embed_oracle(g, c, fan_pattern(3)).found());
            CHECK(find_mono_wheel(g, c, 4).found() == embed_oracle(g, c, wheel_pattern(4)).found());
            CHECK(find_mono_kipas(g, c, 5).found() == embed_oracle(g, c, kipas_pattern(5)).found());
            CHECK(find_mono_star(g, c, 4).found() == embed_oracle(g, c, star_pattern(4)).found());
            CHECK(find_mono_subdivided_star(g, c, 4).found() ==
                  embed_oracle(g, c, subdivided_star_pattern(4)).found());
            CHECK(find_mono_path(g, c, 5).found() == embed_oracle(g, c, path_pattern(5)).found());
            CHECK(find_mono_triangle(g, c).found() == embed_oracle(g, c, triangle_pattern()).found());
        }
    }
}

TEST_CASE("witnesses re-validate") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        ColoredCompleteGraph g = random_coloring(9, 2, rng);
        for (int c = 1; c <= 2; ++c)
            for (PatternKind kind : {PatternKind::Fan, PatternKind::Kipas, PatternKind::Wheel,
                                     PatternKind::Star, PatternKind::SubdividedStar,
                                     PatternKind::Triangle, PatternKind::Path}) {
                int param = kind == PatternKind::Triangle ? 3 : kind == PatternKind::Fan ? 3 : 4;
                auto r = find_pattern(g, c, kind, param);
                if (r.found()) CHECK(check_witness(g, r));
            }
    }
}

TEST_CASE("absence is monotone in pattern size") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        ColoredCompleteGraph g = random_coloring(9, 3, rng);
        for (int c = 1; c <= 3; ++c)
            for (int m = 3; m <= 6; ++m) {
                if (!find_mono_kipas(g, c, m).found()) {
                    CHECK(!find_mono_kipas(g, c, m + 1).found());
                    CHECK(!find_mono_wheel(g, c, m).found());
                }
            }
    }
}

TEST_CASE("admissible pentagon blow-ups have no red kipas") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        ColoredCompleteGraph g = lemma2_random_instance(6, 8, rng);
        CHECK(!find_mono_kipas(g, 1, 6).found());
    }
}
