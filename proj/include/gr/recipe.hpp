#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "gr/colored_graph.hpp"

namespace gr {

struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

// Tree-shaped construction plan. Expansion is deterministic: vertices are
// numbered depth-first over the tree, with blow-up part blocks contiguous in
// base-vertex order.
struct Recipe {
    enum class Kind { Pentagon, Clique, Circulant, BlowUp, Join, AddApex, Base };

    Kind kind;
    int a = 0;  // Pentagon: cycle color. Clique: size. Circulant: size. Join/AddApex: color.
    int b = 0;  // Pentagon: chord color. Clique: color.
    std::vector<int> distance_colors;     // Circulant: color per distance 1..size/2
    RecipePtr base;                       // BlowUp / AddApex
    std::vector<RecipePtr> children;      // BlowUp parts / Join {left,right}
    std::shared_ptr<const ColoredCompleteGraph> graph;  // Base
};

RecipePtr pentagon(int cycle_color, int chord_color);
RecipePtr clique(int size, int color);
RecipePtr circulant(int size, std::vector<int> distance_colors);
RecipePtr blow_up(RecipePtr base, std::vector<RecipePtr> parts);
RecipePtr join(RecipePtr left, RecipePtr right, int color);
RecipePtr add_apex(RecipePtr base, int color);
RecipePtr wrap_graph(std::shared_ptr<const ColoredCompleteGraph> g);

// Number of vertices of the expansion, without expanding.
long long vertex_count(const Recipe& r);
// Largest color mentioned anywhere in the tree.
int color_span(const Recipe& r);

// Validates invariants (part counts, circulant distance coverage, color
// ranges) and materializes the coloring. Throws on malformed recipes or when
// the expansion would not fit in memory.
ColoredCompleteGraph expand(const Recipe& r);
ColoredCompleteGraph expand(const Recipe& r, int ambient_colors);

// One-node-per-line text form:
//   <id> pentagon <cycle> <chord>
//   <id> clique <size> <color>
//   <id> circulant <size> <c1> ... <c_{size/2}>
//   <id> blowup <base-id> <part-id>...
//   <id> join <left-id> <right-id> <color>
//   <id> apex <base-id> <color>
//   <id> base <certificate-path>
// The last line names the result; '#' starts a comment.
RecipePtr parse_recipe(std::istream& in);
RecipePtr parse_recipe_file(const std::string& path);

}  // namespace gr
