#include "gr/colored_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gr {

ColoredCompleteGraph::ColoredCompleteGraph(int n, int k, int default_color)
    : n_(n), k_(k) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive, got " + std::to_string(n));
    if (k < 1) throw std::invalid_argument("color count must be positive, got " + std::to_string(k));
    if (k > 255) throw std::invalid_argument("color count does not fit a small integer");
    if (default_color < 1 || default_color > k)
        throw std::invalid_argument("default color " + std::to_string(default_color) +
                                    " outside [1," + std::to_string(k) + "]");
    m_.assign(static_cast<size_t>(n) * n, static_cast<uint8_t>(default_color));
}

void ColoredCompleteGraph::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("self-pair {" + std::to_string(u) + "} has no color");
}

int ColoredCompleteGraph::color(int u, int v) const {
    check_pair(u, v);
    return m_[static_cast<size_t>(u) * n_ + v];
}

void ColoredCompleteGraph::set_color(int u, int v, int c) {
    check_pair(u, v);
    if (c < 1 || c > k_)
        throw std::invalid_argument("color " + std::to_string(c) + " outside [1," + std::to_string(k_) + "]");
    size_t a = static_cast<size_t>(u) * n_ + v;
    size_t b = static_cast<size_t>(v) * n_ + u;
    if (m_[a] == kAbsent) --missing_;
    m_[a] = m_[b] = static_cast<uint8_t>(c);
}

void ColoredCompleteGraph::erase_edge(int u, int v) {
    check_pair(u, v);
    size_t a = static_cast<size_t>(u) * n_ + v;
    size_t b = static_cast<size_t>(v) * n_ + u;
    if (m_[a] != kAbsent) ++missing_;
    m_[a] = m_[b] = kAbsent;
}

bool ColoredCompleteGraph::has_edge(int u, int v) const {
    check_pair(u, v);
    return m_[static_cast<size_t>(u) * n_ + v] != kAbsent;
}

int ColoredCompleteGraph::color_degree(int v, int c) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    if (c < 1 || c > k_) throw std::out_of_range("color out of range");
    const uint8_t* row = &m_[static_cast<size_t>(v) * n_];
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && row[u] == c) ++d;
    return d;
}

std::vector<std::vector<int>> ColoredCompleteGraph::mono_components(int c) const {
    if (c < 1 || c > k_) throw std::out_of_range("color out of range");
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            const uint8_t* row = &m_[static_cast<size_t>(v) * n_];
            for (int u = 0; u < n_; ++u) {
                if (u != v && row[u] == c && comp[u] == -1) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
    }
    for (auto& cmp : out) std::sort(cmp.begin(), cmp.end());
    return out;
}

Bitset ColoredCompleteGraph::color_neighbors(int v, int c) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    Bitset b(n_);
    const uint8_t* row = &m_[static_cast<size_t>(v) * n_];
    for (int u = 0; u < n_; ++u)
        if (u != v && row[u] == c) b.set(u);
    return b;
}

bool ColoredCompleteGraph::operator==(const ColoredCompleteGraph& o) const {
    return n_ == o.n_ && k_ == o.k_ && m_ == o.m_;
}

ColorClassView::ColorClassView(const ColoredCompleteGraph& g, int c)
    : graph(&g), color(c) {
    adj.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) adj.push_back(g.color_neighbors(v, c));
}

}  // namespace gr
