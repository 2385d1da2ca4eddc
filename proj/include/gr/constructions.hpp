#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gr/certificate.hpp"
#include "gr/colored_graph.hpp"
#include "gr/patterns.hpp"
#include "gr/recipe.hpp"

namespace gr {

using GraphPtr = std::shared_ptr<const ColoredCompleteGraph>;

// ---- kipas / wheel tower ---------------------------------------------------

// K_5 with the color-(2k2-1),(2k2) pentagon pair nested recursively; 5^{k2/2}
// vertices, no monochromatic triangle in any color.
RecipePtr build_H(int k2);

// Two-colored gadget with max degree <= m/2-1 and components <= m-1 in both
// classes: two p-cliques of size m/2-1 joined in q (m % 4 == 0), or the
// circulant on m-1 vertices with low distances p (m % 4 == 2).
RecipePtr build_F(int p, int q, int m);

// H_{k2} with every vertex replaced by a copy of F(p,q); H_0[F] = F.
RecipePtr build_H_of_F(int k2, int p, int q, int m);

// The color-ell ballast graph: K_{m/2} in ell at the bottom, pentagon
// blow-ups above with F-gadget flanks. ell must lie outside [1,k2].
RecipePtr build_G_ell(int k2, int ell, int m);

// Even-k tower over a verified 2-colored base (colors {1,2}, no
// monochromatic kipas K̂_m in either color; checked, not assumed).
RecipePtr build_G_even(int k, int m, GraphPtr base);

// Odd k: the 5m-vertex pentagon-of-cliques variant for k = 3, and the
// doubling (two copies joined in color k) for every odd k >= 3.
RecipePtr build_G_odd_pentagon(int m);
RecipePtr build_G_odd(int k, int m, GraphPtr base);

// Odd m >= 7: the m-1 tower with the base slot holding a 2-coloring verified
// against K̂_m itself.
RecipePtr build_odd_m_kipas(int k, int m, GraphPtr base);

// Fallback base: two color-1 cliques K_{m-1} joined in color 2. Verified
// kipas-free for any m >= 3.
ColoredCompleteGraph default_kipas_base(int m);

// ---- fans ------------------------------------------------------------------

RecipePtr build_fan_G3(int i);            // i in {3,4}; 14 vertices
RecipePtr build_fan_G4();                 // 70 vertices
RecipePtr build_fan_Gk(int k);            // even k >= 4; 14 * 5^{(k-2)/2}

// 13-vertex 2-coloring: the fan graph with the color-i pair merged into one
// vertex. Both endpoints see identical outside colors (asserted).
ColoredCompleteGraph contract_fan_base();

// ---- stars -----------------------------------------------------------------

// 5n/2 + k - 7 vertices: pentagon blow-up with color-3 interiors plus k-3
// apex vertices in colors 4..k.
RecipePtr build_star_H(int n, int k);

// Appends w (edges: color i+3 to apex v_i, color 1 to V1 and V3, color 2 to
// V2 and V5, none to V4). Returns the near-complete graph and w's degree.
std::pair<ColoredCompleteGraph, int> extend_with_w(const ColoredCompleteGraph& h, int n, int k);

// ---- catalog ---------------------------------------------------------------

struct PatternQuery {
    PatternKind kind;
    int param;
    std::vector<int> colors;  // empty for rainbow
};

struct CatalogParams {
    int i = 3;
    int k = 0;
    int m = 0;
    int n = 0;
    int p = 0;    // f-gadget / h-of-f
    int q = 0;
    int ell = 0;  // g-ell
    bool with_w = false;
    GraphPtr base;  // kipas towers; nullptr selects the bundled fallback
};

struct CatalogResult {
    std::string name;
    ColoredCompleteGraph graph;
    std::vector<PatternQuery> checks;  // the verification set certify() runs
    Metadata meta;
    RecipePtr recipe;  // null for graph-level constructions
};

std::vector<std::string> catalog_names();
CatalogResult catalog_build(const std::string& name, const CatalogParams& params);

}  // namespace gr
