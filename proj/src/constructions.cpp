#include "gr/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "gr/detectors.hpp"

namespace gr {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Base 2-colorings feeding a tower are checked here, never assumed: colors
// must lie in {1,2} and neither class may contain a kipas K̂_m.
void validate_kipas_base(const ColoredCompleteGraph& g, int m) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            int c = g.color(u, v);
            require(c == 1 || c == 2, "base coloring must use colors {1,2}");
        }
    for (int c = 1; c <= 2; ++c) {
        auto r = find_mono_kipas(g, c, m);
        require(!r.found(), "base coloring contains a color-" + std::to_string(c) +
                                " kipas on " + std::to_string(m) + "+1 vertices");
    }
}

RecipePtr tower_even(int k, int m, RecipePtr base) {
    if (k == 2) return base;
    auto inner = tower_even(k - 2, m, base);
    auto flank_cycle = build_G_ell(k - 2, k - 1, m);
    auto flank_chord = build_G_ell(k - 2, k, m);
    return blow_up(pentagon(k - 1, k),
                   {inner, flank_cycle, flank_chord, flank_chord, flank_cycle});
}

}  // namespace

RecipePtr build_H(int k2) {
    require(k2 >= 2 && k2 % 2 == 0, "build_H needs even k2 >= 2");
    if (k2 == 2) return pentagon(1, 2);
    auto inner = build_H(k2 - 2);
    return blow_up(pentagon(k2 - 1, k2), {inner, inner, inner, inner, inner});
}

RecipePtr build_F(int p, int q, int m) {
    require(p >= 1 && q >= 1 && p != q, "build_F needs distinct colors p, q");
    require(m >= 6 && m % 2 == 0, "build_F needs even m >= 6");
    if (m % 4 == 0) {
        auto half = clique(m / 2 - 1, p);
        return join(half, half, q);
    }
    // m % 4 == 2: circulant on m-1 vertices, the (m-2)/4 shortest distances
    // in p, the rest in q.
    int nd = (m - 2) / 2;
    std::vector<int> dc(nd, q);
    for (int d = 0; d < (m - 2) / 4; ++d) dc[d] = p;
    return circulant(m - 1, std::move(dc));
}

RecipePtr build_H_of_F(int k2, int p, int q, int m) {
    require(k2 >= 0 && k2 % 2 == 0, "build_H_of_F needs even k2 >= 0");
    if (k2 == 0) return build_F(p, q, m);
    auto h = build_H(k2);
    auto f = build_F(p, q, m);
    std::vector<RecipePtr> parts(static_cast<size_t>(vertex_count(*h)), f);
    return blow_up(h, std::move(parts));
}

RecipePtr build_G_ell(int k2, int ell, int m) {
    require(k2 >= 0 && k2 % 2 == 0, "build_G_ell needs even k2 >= 0");
    require(ell < 1 || ell > k2, "ell must lie outside [1,k2]");
    require(m >= 6 && m % 2 == 0, "build_G_ell needs even m >= 6");
    if (k2 == 0) return clique(m / 2, ell);
    auto inner = build_G_ell(k2 - 2, ell, m);
    auto flank_cycle = build_H_of_F(k2 - 2, ell, k2 - 1, m);
    auto flank_chord = build_H_of_F(k2 - 2, ell, k2, m);
    return blow_up(pentagon(k2 - 1, k2),
                   {inner, flank_cycle, flank_chord, flank_chord, flank_cycle});
}

RecipePtr build_G_even(int k, int m, GraphPtr base) {
    require(k >= 2 && k % 2 == 0, "build_G_even needs even k >= 2");
    require(m >= 6 && m % 2 == 0, "build_G_even needs even m >= 6");
    require(base != nullptr, "build_G_even needs a base coloring");
    validate_kipas_base(*base, m);
    return tower_even(k, m, wrap_graph(std::move(base)));
}

RecipePtr build_G_odd_pentagon(int m) {
    require(m >= 2, "build_G_odd_pentagon needs m >= 2");
    auto part = clique(m, 3);
    return blow_up(pentagon(1, 2), {part, part, part, part, part});
}

RecipePtr build_G_odd(int k, int m, GraphPtr base) {
    require(k >= 3 && k % 2 == 1, "build_G_odd needs odd k >= 3");
    require(m >= 6 && m % 2 == 0, "build_G_odd needs even m >= 6");
    require(base != nullptr, "build_G_odd needs a base coloring");
    validate_kipas_base(*base, m);
    auto half = k == 3 ? wrap_graph(std::move(base))
                       : tower_even(k - 1, m, wrap_graph(std::move(base)));
    return join(half, half, k);
}

RecipePtr build_odd_m_kipas(int k, int m, GraphPtr base) {
    require(k >= 2, "build_odd_m_kipas needs k >= 2");
    require(m >= 7 && m % 2 == 1, "build_odd_m_kipas needs odd m >= 7");
    require(base != nullptr, "build_odd_m_kipas needs a base coloring");
    // The base is checked against K̂_m itself; the tower above it runs at m-1.
    validate_kipas_base(*base, m);
    auto wrapped = wrap_graph(std::move(base));
    if (k % 2 == 0) return tower_even(k, m - 1, wrapped);
    auto half = k == 3 ? wrapped : tower_even(k - 1, m - 1, wrapped);
    return join(half, half, k);
}

ColoredCompleteGraph default_kipas_base(int m) {
    require(m >= 3, "default_kipas_base needs m >= 3");
    return expand(*join(clique(m - 1, 1), clique(m - 1, 1), 2));
}

RecipePtr build_fan_G3(int i) {
    require(i == 3 || i == 4, "build_fan_G3 needs i in {3,4}");
    auto hub = clique(2, i);
    auto one = clique(3, 1);
    auto two = clique(3, 2);
    return blow_up(pentagon(1, 2), {hub, one, two, two, one});
}

RecipePtr build_fan_G4() {
    auto g33 = build_fan_G3(3);
    auto g34 = build_fan_G3(4);
    return blow_up(pentagon(3, 4), {g33, g34, g33, g33, g34});
}

RecipePtr build_fan_Gk(int k) {
    require(k >= 4 && k % 2 == 0, "build_fan_Gk needs even k >= 4");
    if (k == 4) return build_fan_G4();
    auto inner = build_fan_Gk(k - 2);
    return blow_up(pentagon(k - 1, k), {inner, inner, inner, inner, inner});
}

ColoredCompleteGraph contract_fan_base() {
    // Merge the color-3 pair (vertices 0,1) of the 14-vertex fan graph; the
    // result uses colors {1,2} only.
    ColoredCompleteGraph g = expand(*build_fan_G3(3));
    for (int u = 2; u < g.n(); ++u)
        if (g.color(0, u) != g.color(1, u))
            throw std::logic_error("merged pair sees different outside colors");
    ColoredCompleteGraph out(g.n() - 1, 2, 1);
    for (int u = 1; u < out.n(); ++u)
        for (int v = u + 1; v < out.n(); ++v) out.set_color(u, v, g.color(u + 1, v + 1));
    for (int u = 1; u < out.n(); ++u) out.set_color(0, u, g.color(0, u + 1));
    return out;
}

RecipePtr build_star_H(int n, int k) {
    require(n >= 6 && n % 2 == 0, "build_star_H needs even n >= 6");
    require(k >= 3, "build_star_H needs k >= 3");
    auto big = clique(n / 2, 3);
    auto small = clique(n / 2 - 1, 3);
    RecipePtr r = blow_up(pentagon(1, 2), {big, small, small, small, small});
    for (int j = 1; j <= k - 3; ++j) r = add_apex(r, j + 3);
    return r;
}

std::pair<ColoredCompleteGraph, int> extend_with_w(const ColoredCompleteGraph& h, int n, int k) {
    int nn = 5 * n / 2 + k - 7;
    require(h.n() == nn, "graph size does not match the (n,k) layout");
    // Depth-first block layout of build_star_H: V1 = [0, n/2), then four
    // blocks of n/2 - 1, then the apexes.
    int half = n / 2;
    int v2 = half, v3 = v2 + half - 1, v4 = v3 + half - 1, v5 = v4 + half - 1;
    int apex = v5 + half - 1;
    int w = nn;
    ColoredCompleteGraph out(nn + 1, std::max(h.k(), k), 1);
    for (int u = 0; u < nn; ++u)
        for (int v = u + 1; v < nn; ++v) out.set_color(u, v, h.color(u, v));
    for (int u = 0; u < v2; ++u) out.set_color(u, w, 1);
    for (int u = v2; u < v3; ++u) out.set_color(u, w, 2);
    for (int u = v3; u < v4; ++u) out.set_color(u, w, 1);
    for (int u = v4; u < v5; ++u) out.erase_edge(u, w);
    for (int u = v5; u < apex; ++u) out.set_color(u, w, 2);
    for (int j = 1; j <= k - 3; ++j) out.set_color(apex + j - 1, w, j + 3);
    int deg = 0;
    for (int u = 0; u < nn; ++u)
        if (out.has_edge(u, w)) ++deg;
    return {std::move(out), deg};
}

// ---- catalog ---------------------------------------------------------------

namespace {

std::vector<int> color_range(int lo, int hi) {
    std::vector<int> out;
    for (int c = lo; c <= hi; ++c) out.push_back(c);
    return out;
}

std::vector<PatternQuery> with_rainbow(std::vector<PatternQuery> qs) {
    qs.insert(qs.begin(), {PatternKind::Rainbow, 0, {}});
    return qs;
}

int max_query_color(const std::vector<PatternQuery>& qs) {
    int m = 1;
    for (const auto& q : qs)
        for (int c : q.colors) m = std::max(m, c);
    return m;
}

CatalogResult finish(std::string name, RecipePtr recipe, std::vector<PatternQuery> checks,
                     Metadata meta) {
    int ambient = std::max(max_query_color(checks), color_span(*recipe));
    CatalogResult out{std::move(name), expand(*recipe, ambient), std::move(checks),
                      std::move(meta), recipe};
    out.meta.emplace_back("vertices", std::to_string(out.graph.n()));
    return out;
}

GraphPtr base_or_default(const CatalogParams& p, int m) {
    if (p.base) return p.base;
    return std::make_shared<ColoredCompleteGraph>(default_kipas_base(m));
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"fan-g3",   "fan-g4",     "fan-gk", "contract-fan-base", "kipas-k3",
            "kipas-even", "odd-double", "kipas-oddm", "star-h", "h2k",
            "f-gadget", "h-of-f",     "g-ell"};
}

CatalogResult catalog_build(const std::string& name, const CatalogParams& prm) {
    if (name == "fan-g3") {
        return finish(name, build_fan_G3(prm.i),
                      with_rainbow({{PatternKind::Fan, 3, color_range(1, 4)}}),
                      {{"i", std::to_string(prm.i)}});
    }
    if (name == "fan-g4") {
        return finish(name, build_fan_G4(),
                      with_rainbow({{PatternKind::Fan, 3, color_range(1, 4)}}), {});
    }
    if (name == "fan-gk") {
        return finish(name, build_fan_Gk(prm.k),
                      with_rainbow({{PatternKind::Fan, 3, color_range(1, prm.k)}}),
                      {{"k", std::to_string(prm.k)}});
    }
    if (name == "contract-fan-base") {
        ColoredCompleteGraph g = contract_fan_base();
        CatalogResult out{name, std::move(g),
                          with_rainbow({{PatternKind::Fan, 3, color_range(1, 2)}}),
                          {{"vertices", "13"}}, nullptr};
        return out;
    }
    if (name == "kipas-k3") {
        require(prm.m >= 2, "kipas-k3 needs m >= 2");
        return finish(name, build_G_odd_pentagon(prm.m),
                      with_rainbow({{PatternKind::Kipas, prm.m, color_range(1, 3)}}),
                      {{"m", std::to_string(prm.m)}});
    }
    if (name == "kipas-even") {
        auto base = base_or_default(prm, prm.m);
        Metadata meta{{"k", std::to_string(prm.k)},
                      {"m", std::to_string(prm.m)},
                      {"base_vertices", std::to_string(base->n())}};
        return finish(name, build_G_even(prm.k, prm.m, std::move(base)),
                      with_rainbow({{PatternKind::Kipas, prm.m, color_range(1, prm.k)}}),
                      std::move(meta));
    }
    if (name == "odd-double") {
        auto base = base_or_default(prm, prm.m);
        Metadata meta{{"k", std::to_string(prm.k)},
                      {"m", std::to_string(prm.m)},
                      {"base_vertices", std::to_string(base->n())}};
        return finish(name, build_G_odd(prm.k, prm.m, std::move(base)),
                      with_rainbow({{PatternKind::Kipas, prm.m, color_range(1, prm.k)}}),
                      std::move(meta));
    }
    if (name == "kipas-oddm") {
        auto base = base_or_default(prm, prm.m);
        Metadata meta{{"k", std::to_string(prm.k)},
                      {"m", std::to_string(prm.m)},
                      {"base_vertices", std::to_string(base->n())}};
        return finish(name, build_odd_m_kipas(prm.k, prm.m, std::move(base)),
                      with_rainbow({{PatternKind::Kipas, prm.m, color_range(1, prm.k)}}),
                      std::move(meta));
    }
    if (name == "star-h") {
        auto rec = build_star_H(prm.n, prm.k);
        std::vector<PatternQuery> checks =
            with_rainbow({{PatternKind::Star, prm.n, color_range(1, 3)},
                          {PatternKind::SubdividedStar, prm.n, color_range(1, prm.k)}});
        if (!prm.with_w)
            return finish(name, rec, std::move(checks),
                          {{"n", std::to_string(prm.n)}, {"k", std::to_string(prm.k)}});
        auto [g, deg] = extend_with_w(expand(*rec, std::max(prm.k, 3)), prm.n, prm.k);
        CatalogResult out{name, std::move(g), std::move(checks),
                          {{"n", std::to_string(prm.n)},
                           {"k", std::to_string(prm.k)},
                           {"w_degree", std::to_string(deg)}},
                          nullptr};
        out.meta.emplace_back("vertices", std::to_string(out.graph.n()));
        return out;
    }
    if (name == "h2k") {
        return finish(name, build_H(prm.k),
                      with_rainbow({{PatternKind::Triangle, 3, color_range(1, prm.k)}}),
                      {{"k", std::to_string(prm.k)}});
    }
    if (name == "f-gadget") {
        return finish(name, build_F(prm.p, prm.q, prm.m), with_rainbow({}),
                      {{"p", std::to_string(prm.p)},
                       {"q", std::to_string(prm.q)},
                       {"m", std::to_string(prm.m)}});
    }
    if (name == "h-of-f") {
        return finish(name, build_H_of_F(prm.k, prm.p, prm.q, prm.m), with_rainbow({}),
                      {{"k", std::to_string(prm.k)},
                       {"p", std::to_string(prm.p)},
                       {"q", std::to_string(prm.q)},
                       {"m", std::to_string(prm.m)}});
    }
    if (name == "g-ell") {
        auto rec = build_G_ell(prm.k, prm.ell, prm.m);
        int span = color_span(*rec);
        return finish(name, rec,
                      with_rainbow({{PatternKind::Kipas, prm.m, color_range(1, span)}}),
                      {{"k", std::to_string(prm.k)},
                       {"ell", std::to_string(prm.ell)},
                       {"m", std::to_string(prm.m)}});
    }
    throw std::invalid_argument("unknown construction: " + name);
}

}  // namespace gr
