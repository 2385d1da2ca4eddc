#pragma once

#include <cstdint>
#include <random>

#include "gr/colored_graph.hpp"
#include "gr/detectors.hpp"
#include "gr/patterns.hpp"

namespace gr {

struct SearchBudget {
    int max_n = 7;
    long long max_colorings = 1LL << 21;  // enumeration modes
    int restarts = 1;                     // heuristic mode only
    long long steps = 100000;             // heuristic mode only
    uint64_t seed = 1;
};

// Smallest n <= n_max such that every 2-coloring of K_n has p1 in color 1 or
// p2 in color 2; n_max + 1 when none qualifies. Enumeration fixes edge {0,1}
// to color 1 and checks both role orders, so the verdict covers the swapped
// half too.
int ramsey2_exact(const PatternGraph& p1, const PatternGraph& p2, int n_max);

// Smallest n <= n_max such that every rainbow-triangle-free k-coloring of K_n
// has a monochromatic copy of the pattern; n_max + 1 when none qualifies.
int gallai_ramsey_exhaustive(const PatternGraph& pattern, int k, int n_max);

// Local search for a large 2-coloring with no one-colored kipas K̂_m. Seeded
// from two color-1 cliques K_{m-1} joined in color 2; every accepted move is
// re-verified by the exact detector. Deterministic under a fixed seed.
ColoredCompleteGraph heuristic_base_search(int m, const SearchBudget& budget);

// Both colors of the 13-vertex merged fan graph, checked for F_3 with the
// specialized detector and the embedding oracle independently.
struct FanWitnessReport {
    bool color1_absent = false;
    bool color2_absent = false;
    bool oracles_agree = false;
    bool ok() const { return color1_absent && color2_absent && oracles_agree; }
};
FanWitnessReport fan_lower_witness_check();

// ---- random instances for property tests ----------------------------------

ColoredCompleteGraph random_coloring(int n, int k, std::mt19937_64& rng);

// Incremental sampler with restarts: each edge picks uniformly among the
// colors that do not close a rainbow triangle with earlier edges.
ColoredCompleteGraph random_gallai_coloring(int n, int k, std::mt19937_64& rng);

// Random pentagon blow-up satisfying the red-kipas hypothesis: red = color 1
// on the cycle, no red inside V1/V3/V4, and the red subgraphs of V2/V5 keep
// max degree <= m/2-1 and component order <= m-1.
ColoredCompleteGraph lemma2_random_instance(int m, int max_part, std::mt19937_64& rng);

}  // namespace gr
