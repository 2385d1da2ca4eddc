#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gr/colored_graph.hpp"

namespace gr {

// Ordered partition of the vertex set claimed to satisfy the Gallai partition
// property: every cross pair monochromatic, at most two cross colors overall.
struct PartitionSpec {
    std::vector<std::vector<int>> parts;
};

struct PartitionCheck {
    bool ok = false;
    std::vector<int> cross_colors;  // colors seen on cross edges, sorted
    std::string diagnostic;         // names the violating pair when !ok
};

PartitionCheck verify_partition(const ColoredCompleteGraph& g, const PartitionSpec& p);

// Exhaustive search for some valid Gallai partition; small n only.
std::optional<PartitionSpec> find_partition(const ColoredCompleteGraph& g);

}  // namespace gr
