#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gr/colored_graph.hpp"
#include "gr/patterns.hpp"

namespace gr {

// Outcome of one exact pattern search. A missing witness means the search ran
// to completion; there are no cutoffs anywhere in this module.
struct DetectionReport {
    PatternKind kind;
    int param = 0;
    int color = -1;  // -1 for the rainbow search
    std::optional<std::vector<int>> witness;  // center first, then spokes/path/cycle in order
    uint64_t nodes_explored = 0;

    bool found() const { return witness.has_value(); }
};

DetectionReport find_rainbow_triangle(const ColoredCompleteGraph& g);
DetectionReport find_mono_fan(const ColoredCompleteGraph& g, int c, int n);
DetectionReport find_mono_kipas(const ColoredCompleteGraph& g, int c, int m);
DetectionReport find_mono_wheel(const ColoredCompleteGraph& g, int c, int m);
DetectionReport find_mono_star(const ColoredCompleteGraph& g, int c, int n);
DetectionReport find_mono_subdivided_star(const ColoredCompleteGraph& g, int c, int n);
DetectionReport find_mono_triangle(const ColoredCompleteGraph& g, int c);
DetectionReport find_mono_path(const ColoredCompleteGraph& g, int c, int m);

// Plain backtracking injective embedding of a small pattern (<= 9 vertices)
// into the color-c class. Ground truth for the specialized detectors.
DetectionReport embed_oracle(const ColoredCompleteGraph& g, int c, const PatternGraph& pattern);

// Dispatch by pattern kind to the specialized detector.
DetectionReport find_pattern(const ColoredCompleteGraph& g, int c, PatternKind kind, int param);

// Re-validates a witness edge-by-edge against the stored color matrix.
bool check_witness(const ColoredCompleteGraph& g, const DetectionReport& r);

}  // namespace gr
