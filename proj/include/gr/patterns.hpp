#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gr {

enum class PatternKind {
    Rainbow,         // rainbow triangle, no size parameter
    Fan,             // K_1 + n K_2, param = n
    Kipas,           // K_1 + P_m, param = m
    Wheel,           // K_1 + C_m, param = m
    Star,            // K_{1,n}, param = n
    SubdividedStar,  // K^+_{1,n}, param = n
    Triangle,        // K_3
    Path,            // P_m, param = m
    Clique,          // K_p, param = p
};

const char* pattern_name(PatternKind k);

// Small uncolored pattern graph for the generic embedding oracle.
struct PatternGraph {
    PatternKind kind;
    int param;
    int n;
    std::vector<std::pair<int, int>> edges;

    std::string name() const;
};

// Role orders match the detectors' witness conventions: the center (when one
// exists) is vertex 0, spokes/path/cycle vertices follow in order.
PatternGraph fan_pattern(int n);
PatternGraph kipas_pattern(int m);
PatternGraph wheel_pattern(int m);
PatternGraph star_pattern(int n);
PatternGraph subdivided_star_pattern(int n);
PatternGraph triangle_pattern();
PatternGraph path_pattern(int m);
PatternGraph clique_pattern(int p);

PatternGraph make_pattern(PatternKind kind, int param);

}  // namespace gr
