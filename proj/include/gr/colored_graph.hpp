#pragma once

#include <string>
#include <vector>

#include "gr/bitset.hpp"

namespace gr {

// Complete graph on n labeled vertices 0..n-1 with every edge carrying one
// color from [1,k]. Color 0 is reserved for "edge absent" and only appears in
// the near-complete graphs produced by the w-extension; everything built from
// recipes is total.
class ColoredCompleteGraph {
public:
    static constexpr int kAbsent = 0;

    ColoredCompleteGraph(int n, int k, int default_color);

    int n() const { return n_; }
    int k() const { return k_; }

    int color(int u, int v) const;
    void set_color(int u, int v, int c);
    void erase_edge(int u, int v);
    bool has_edge(int u, int v) const;
    bool is_complete() const { return missing_ == 0; }

    int color_degree(int v, int c) const;

    // Connected components of the color-c class; partition of V, singletons
    // included, each component sorted, components ordered by least vertex.
    std::vector<std::vector<int>> mono_components(int c) const;

    Bitset color_neighbors(int v, int c) const;

    bool operator==(const ColoredCompleteGraph& o) const;

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    int k_ = 0;
    long long missing_ = 0;
    std::vector<uint8_t> m_;  // n*n symmetric color matrix, diagonal unused
};

// Per-color adjacency bitsets rebuilt from the matrix on demand.
struct ColorClassView {
    const ColoredCompleteGraph* graph;
    int color;
    std::vector<Bitset> adj;

    ColorClassView(const ColoredCompleteGraph& g, int c);
    const Bitset& neighbors(int v) const { return adj[v]; }
};

}  // namespace gr
