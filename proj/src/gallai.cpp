#include "gr/gallai.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gr {

PartitionCheck verify_partition(const ColoredCompleteGraph& g, const PartitionSpec& p) {
    PartitionCheck out;
    int np = static_cast<int>(p.parts.size());
    if (np < 2) {
        out.diagnostic = "partition needs at least 2 parts";
        return out;
    }
    std::vector<int> owner(g.n(), -1);
    for (int i = 0; i < np; ++i) {
        if (p.parts[i].empty()) {
            out.diagnostic = "part " + std::to_string(i) + " is empty";
            return out;
        }
        for (int v : p.parts[i]) {
            if (v < 0 || v >= g.n()) {
                out.diagnostic = "vertex " + std::to_string(v) + " out of range";
                return out;
            }
            if (owner[v] != -1) {
                out.diagnostic = "vertex " + std::to_string(v) + " appears in parts " +
                                 std::to_string(owner[v]) + " and " + std::to_string(i);
                return out;
            }
            owner[v] = i;
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (owner[v] == -1) {
            out.diagnostic = "vertex " + std::to_string(v) + " not covered";
            return out;
        }

    std::set<int> colors;
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
            int c = -1;
            for (int u : p.parts[i])
                for (int v : p.parts[j]) {
                    if (!g.has_edge(u, v)) {
                        out.diagnostic = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") has a missing edge {" + std::to_string(u) + "," +
                                         std::to_string(v) + "}";
                        return out;
                    }
                    int e = g.color(u, v);
                    if (c == -1) c = e;
                    if (e != c) {
                        out.diagnostic = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") uses colors " + std::to_string(c) + " and " +
                                         std::to_string(e);
                        return out;
                    }
                }
            colors.insert(c);
        }
    out.cross_colors.assign(colors.begin(), colors.end());
    if (colors.size() > 2) {
        out.diagnostic = "cross edges use " + std::to_string(colors.size()) + " colors";
        return out;
    }
    out.ok = true;
    return out;
}

namespace {

constexpr int kFindPartitionMaxN = 12;

// Backtracking over canonical part assignments: vertex 0 opens part 0, each
// later vertex joins an existing part or opens the next one. Consistency is
// rechecked by scanning the assigned prefix; n <= 12 keeps that cheap.
struct Finder {
    const ColoredCompleteGraph& g;
    int n;
    std::vector<int> part_of;

    explicit Finder(const ColoredCompleteGraph& graph)
        : g(graph), n(graph.n()), part_of(graph.n(), -1) {}

    // Cross-pair monochromaticity and the two-color budget, recomputed over
    // the whole assigned prefix 0..v. n <= 12 keeps the full scan cheap.
    bool consistent(int v) {
        int pair_color[kFindPartitionMaxN][kFindPartitionMaxN];
        for (auto& row : pair_color)
            for (int& c : row) c = -1;
        int c1 = -1, c2 = -1;
        for (int a = 0; a <= v; ++a)
            for (int b = a + 1; b <= v; ++b) {
                int pa = part_of[a], pb = part_of[b];
                if (pa == pb) continue;
                if (pa > pb) std::swap(pa, pb);
                int c = g.color(a, b);
                int& slot = pair_color[pa][pb];
                if (slot == -1) slot = c;
                if (slot != c) return false;
                if (c1 == -1 || c == c1) { c1 = c; continue; }
                if (c2 == -1 || c == c2) { c2 = c; continue; }
                return false;
            }
        return true;
    }

    bool search(int v, int num_parts, std::optional<PartitionSpec>& result) {
        if (v == n) {
            if (num_parts < 2) return false;
            PartitionSpec spec;
            spec.parts.assign(num_parts, {});
            for (int u = 0; u < n; ++u) spec.parts[part_of[u]].push_back(u);
            result = std::move(spec);
            return true;
        }
        for (int p = 0; p <= num_parts && p < n; ++p) {
            part_of[v] = p;
            if (consistent(v) &&
                search(v + 1, std::max(num_parts, p + 1), result))
                return true;
            part_of[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<PartitionSpec> find_partition(const ColoredCompleteGraph& g) {
    if (g.n() > kFindPartitionMaxN)
        throw std::invalid_argument("exhaustive partition search supports n <= " +
                                    std::to_string(kFindPartitionMaxN));
    if (!g.is_complete())
        throw std::invalid_argument("partition search needs a complete graph");
    if (g.n() < 2) return std::nullopt;
    Finder f(g);
    std::optional<PartitionSpec> result;
    f.search(0, 0, result);
    return result;
}

}  // namespace gr
