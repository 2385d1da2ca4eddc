#include <doctest.h>

#include <random>

#include "gr/constructions.hpp"
#include "gr/gallai.hpp"
#include "gr/oracle.hpp"
#include "gr/recipe.hpp"

using namespace gr;

TEST_CASE("partition verification on the pentagon") {
    ColoredCompleteGraph pent = expand(*pentagon(1, 2));
    PartitionSpec singles{{{0}, {1}, {2}, {3}, {4}}};
    auto ok = verify_partition(pent, singles);
    CHECK(ok.ok);
    CHECK(ok.cross_colors == std::vector<int>{1, 2});

    PartitionSpec bad{{{0, 1}, {2, 3, 4}}};
    auto res = verify_partition(pent, bad);
    CHECK(!res.ok);
    CHECK(!res.diagnostic.empty());
}

TEST_CASE("top-level blocks of the layered fan graph") {
    ColoredCompleteGraph g4 = expand(*build_fan_G4());
    PartitionSpec blocks;
    for (int b = 0; b < 5; ++b) {
        std::vector<int> part;
        for (int v = 14 * b; v < 14 * (b + 1); ++v) part.push_back(v);
        blocks.parts.push_back(std::move(part));
    }
    auto res = verify_partition(g4, blocks);
    CHECK(res.ok);
    CHECK(res.cross_colors == std::vector<int>{3, 4});
}

TEST_CASE("malformed partitions are diagnosed") {
    ColoredCompleteGraph g(4, 2, 1);
    CHECK(!verify_partition(g, {{{0, 1, 2, 3}}}).ok);          // single part
    CHECK(!verify_partition(g, {{{0, 1}, {1, 2, 3}}}).ok);     // overlap
    CHECK(!verify_partition(g, {{{0, 1}, {2}}}).ok);           // not covering
    CHECK(!verify_partition(g, {{{0, 1, 2, 3}, {}}}).ok);      // empty part
}

TEST_CASE("rainbow triangle admits no partition") {
    ColoredCompleteGraph k3(3, 3, 1);
    k3.set_color(0, 1, 1);
    k3.set_color(0, 2, 2);
    k3.set_color(1, 2, 3);
    CHECK(!find_partition(k3).has_value());
}

TEST_CASE("finder output verifies") {
    ColoredCompleteGraph pent = expand(*pentagon(1, 2));
    auto spec = find_partition(pent);
    REQUIRE(spec.has_value());
    CHECK(verify_partition(pent, *spec).ok);
}

TEST_CASE("rainbow-free colorings always admit a partition") {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        ColoredCompleteGraph g = random_gallai_coloring(n, 3, rng);
        auto spec = find_partition(g);
        REQUIRE(spec.has_value());
        CHECK(verify_partition(g, *spec).ok);
    }
}

TEST_CASE("finder rejects oversized inputs") {
    ColoredCompleteGraph big(13, 2, 1);
    CHECK_THROWS(find_partition(big));
}
