#include <doctest.h>

#include <random>
#include <sstream>

#include "gr/certificate.hpp"
#include "gr/colored_graph.hpp"
#include "gr/constructions.hpp"
#include "gr/recipe.hpp"

using namespace gr;

TEST_CASE("uniform complete graphs") {
    ColoredCompleteGraph g(3, 5, 3);
    CHECK(g.n() == 3);
    CHECK(g.k() == 5);
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v) CHECK(g.color(u, v) == 3);

    ColoredCompleteGraph single(1, 1, 1);
    CHECK(single.n() == 1);

    ColoredCompleteGraph five(5, 2, 1);
    int edges = 0;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) edges += five.color(u, v) == 1;
    CHECK(edges == 10);
}

TEST_CASE("constructor and accessor validation") {
    CHECK_THROWS_AS(ColoredCompleteGraph(0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(ColoredCompleteGraph(3, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(ColoredCompleteGraph(3, 2, 3), std::invalid_argument);
    ColoredCompleteGraph g(4, 2, 1);
    CHECK_THROWS(g.color(1, 1));
    CHECK_THROWS(g.color(0, 4));
    CHECK_THROWS(g.set_color(0, 1, 3));
    CHECK_THROWS(g.color_degree(0, 0));
}

TEST_CASE("color degrees") {
    ColoredCompleteGraph pent = expand(*pentagon(1, 2));
    for (int v = 0; v < 5; ++v) {
        CHECK(pent.color_degree(v, 1) == 2);
        CHECK(pent.color_degree(v, 2) == 2);
    }
    ColoredCompleteGraph five(5, 2, 1);
    for (int v = 0; v < 5; ++v) CHECK(five.color_degree(v, 2) == 0);
    ColoredCompleteGraph k4 = expand(*clique(4, 3));
    for (int v = 0; v < 4; ++v) CHECK(k4.color_degree(v, 3) == 3);
}

TEST_CASE("degree sums over colors") {
    std::mt19937_64 rng(7);
    ColoredCompleteGraph g(9, 4, 1);
    std::uniform_int_distribution<int> pick(1, 4);
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v) g.set_color(u, v, pick(rng));
    for (int v = 0; v < 9; ++v) {
        int sum = 0;
        for (int c = 1; c <= 4; ++c) sum += g.color_degree(v, c);
        CHECK(sum == 8);
    }
}

TEST_CASE("monochromatic components") {
    ColoredCompleteGraph pent = expand(*pentagon(1, 2));
    auto comps = pent.mono_components(1);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 5);

    ColoredCompleteGraph four(4, 2, 1);
    CHECK(four.mono_components(2).size() == 4);

    ColoredCompleteGraph f = expand(*build_F(1, 2, 6));
    auto fcomps = f.mono_components(1);
    REQUIRE(fcomps.size() == 1);
    CHECK(fcomps[0].size() == 5);
}

TEST_CASE("color class views partition the edge set") {
    std::mt19937_64 rng(11);
    ColoredCompleteGraph g(8, 3, 1);
    std::uniform_int_distribution<int> pick(1, 3);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) g.set_color(u, v, pick(rng));
    std::vector<ColorClassView> views;
    for (int c = 1; c <= 3; ++c) views.emplace_back(g, c);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) {
            int owners = 0;
            for (const auto& view : views) {
                CHECK(view.neighbors(u).test(v) == view.neighbors(v).test(u));
                owners += view.neighbors(u).test(v);
            }
            CHECK(owners == 1);
        }
}

TEST_CASE("edge removal bookkeeping") {
    ColoredCompleteGraph g(4, 2, 1);
    CHECK(g.is_complete());
    g.erase_edge(1, 3);
    CHECK(!g.is_complete());
    CHECK(!g.has_edge(1, 3));
    CHECK(g.has_edge(0, 1));
    g.set_color(1, 3, 2);
    CHECK(g.is_complete());
}

TEST_CASE("certificate round trip") {
    ColoredCompleteGraph pent = expand(*pentagon(1, 2));
    std::stringstream ss;
    Metadata meta{{"construction", "pentagon"}, {"note", "round trip"}};
    write_certificate(pent, meta, ss);
    Metadata got;
    ColoredCompleteGraph back = read_certificate(ss, &got);
    CHECK(back == pent);
    CHECK(got == meta);
}

TEST_CASE("certificate round trip on random colorings") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 29);
        int k = 1 + static_cast<int>(rng() % 6);
        ColoredCompleteGraph g(n, k, 1);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.set_color(u, v, 1 + static_cast<int>(rng() % k));
        std::stringstream ss;
        write_certificate(g, {}, ss);
        CHECK(read_certificate(ss) == g);
    }
}

TEST_CASE("certificate parse errors carry byte offsets") {
    std::stringstream bad("GRC1 3 5\n7 1\n1\n");
    try {
        read_certificate(bad);
        FAIL("expected a parse error");
    } catch (const CertificateError& e) {
        CHECK(e.byte_offset >= 9);
        CHECK(std::string(e.what()).find("7") != std::string::npos);
    }

    std::stringstream truncated("GRC1 4 2\n1 1 1\n");
    CHECK_THROWS_AS(read_certificate(truncated), CertificateError);

    std::stringstream header("GRC2 3 2\n1 1\n1\n");
    CHECK_THROWS_AS(read_certificate(header), CertificateError);
}

TEST_CASE("large certificate header and body size") {
    ColoredCompleteGraph g4 = expand(*build_fan_G4());
    std::stringstream ss;
    write_certificate(g4, {}, ss);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "GRC1 70 4");
    int entries = 0, value;
    while (ss >> value) ++entries;
    CHECK(entries == 70 * 69 / 2);
}
