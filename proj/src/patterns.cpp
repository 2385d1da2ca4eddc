#include "gr/patterns.hpp"

#include <stdexcept>

namespace gr {

const char* pattern_name(PatternKind k) {
    switch (k) {
        case PatternKind::Rainbow: return "rainbow";
        case PatternKind::Fan: return "fan";
        case PatternKind::Kipas: return "kipas";
        case PatternKind::Wheel: return "wheel";
        case PatternKind::Star: return "star";
        case PatternKind::SubdividedStar: return "star-plus";
        case PatternKind::Triangle: return "triangle";
        case PatternKind::Path: return "path";
        case PatternKind::Clique: return "clique";
    }
    return "?";
}

std::string PatternGraph::name() const {
    std::string s = pattern_name(kind);
    if (kind != PatternKind::Triangle && kind != PatternKind::Rainbow)
        s += ":" + std::to_string(param);
    return s;
}

PatternGraph fan_pattern(int n) {
    if (n < 1) throw std::invalid_argument("fan needs n >= 1");
    PatternGraph p{PatternKind::Fan, n, 1 + 2 * n, {}};
    for (int i = 0; i < n; ++i) {
        int a = 1 + 2 * i, b = 2 + 2 * i;
        p.edges.emplace_back(0, a);
        p.edges.emplace_back(0, b);
        p.edges.emplace_back(a, b);
    }
    return p;
}

PatternGraph kipas_pattern(int m) {
    if (m < 2) throw std::invalid_argument("kipas needs m >= 2");
    PatternGraph p{PatternKind::Kipas, m, 1 + m, {}};
    for (int i = 1; i <= m; ++i) {
        p.edges.emplace_back(0, i);
        if (i < m) p.edges.emplace_back(i, i + 1);
    }
    return p;
}

PatternGraph wheel_pattern(int m) {
    if (m < 3) throw std::invalid_argument("wheel needs m >= 3");
    PatternGraph p{PatternKind::Wheel, m, 1 + m, {}};
    for (int i = 1; i <= m; ++i) {
        p.edges.emplace_back(0, i);
        p.edges.emplace_back(i, i < m ? i + 1 : 1);
    }
    return p;
}

PatternGraph star_pattern(int n) {
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    PatternGraph p{PatternKind::Star, n, 1 + n, {}};
    for (int i = 1; i <= n; ++i) p.edges.emplace_back(0, i);
    return p;
}

PatternGraph subdivided_star_pattern(int n) {
    if (n < 2) throw std::invalid_argument("subdivided star needs n >= 2");
    // Center 0, leaves 1..n, extra vertex n+1 hangs off leaf 1.
    PatternGraph p{PatternKind::SubdividedStar, n, n + 2, {}};
    for (int i = 1; i <= n; ++i) p.edges.emplace_back(0, i);
    p.edges.emplace_back(1, n + 1);
    return p;
}

PatternGraph triangle_pattern() {
    return PatternGraph{PatternKind::Triangle, 3, 3, {{0, 1}, {0, 2}, {1, 2}}};
}

PatternGraph path_pattern(int m) {
    if (m < 2) throw std::invalid_argument("path needs m >= 2");
    PatternGraph p{PatternKind::Path, m, m, {}};
    for (int i = 0; i + 1 < m; ++i) p.edges.emplace_back(i, i + 1);
    return p;
}

PatternGraph clique_pattern(int q) {
    if (q < 2) throw std::invalid_argument("clique needs p >= 2");
    PatternGraph p{PatternKind::Clique, q, q, {}};
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) p.edges.emplace_back(i, j);
    return p;
}

PatternGraph make_pattern(PatternKind kind, int param) {
    switch (kind) {
        case PatternKind::Fan: return fan_pattern(param);
        case PatternKind::Kipas: return kipas_pattern(param);
        case PatternKind::Wheel: return wheel_pattern(param);
        case PatternKind::Star: return star_pattern(param);
        case PatternKind::SubdividedStar: return subdivided_star_pattern(param);
        case PatternKind::Triangle: return triangle_pattern();
        case PatternKind::Path: return path_pattern(param);
        case PatternKind::Clique: return clique_pattern(param);
        case PatternKind::Rainbow: break;
    }
    throw std::invalid_argument("pattern kind has no graph form");
}

}  // namespace gr
